#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtp/pattern.hpp"

namespace gtp {

/// n x n matrix over {-1, 0, 1} whose rows and columns sum to 1 and whose
/// nonzero entries alternate in sign along every row and column.
class AsmMatrix {
 public:
  // Row-major entries, top matrix row first. Throws InvalidInput.
  AsmMatrix(int n, std::vector<int> entries);
  static AsmMatrix from_permutation(const std::vector<int>& one_based_columns);

  int n() const { return n_; }
  int operator()(int row, int col) const { return entries_[(row - 1) * n_ + (col - 1)]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

bool is_asm(int n, const std::vector<int>& entries);

// Triangle row i lists, increasing, the columns where the sum of the first i
// matrix rows equals 1.
Pattern gog_from_asm(const AsmMatrix& a);
// Throws InvalidInput unless p is a Gog triangle.
AsmMatrix asm_from_gog(const Pattern& p);

// "asm <n>" then n rows of n entries.
std::string to_text(const AsmMatrix& a);
AsmMatrix parse_asm(std::string_view text);

}  // namespace gtp
