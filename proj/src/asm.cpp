#include "gtp/asm.hpp"

#include <sstream>

#include "gtp/error.hpp"
#include "gtp/gog.hpp"

namespace gtp {

bool is_asm(int n, const std::vector<int>& e) {
  if (n < 1 || static_cast<int>(e.size()) != n * n) return false;
  for (int v : e)
    if (v < -1 || v > 1) return false;
  // Partial sums from one end in {0,1} with total 1 covers the other end too.
  for (int r = 0; r < n; ++r) {
    int s = 0;
    for (int c = 0; c < n; ++c) {
      s += e[r * n + c];
      if (s < 0 || s > 1) return false;
    }
    if (s != 1) return false;
  }
  for (int c = 0; c < n; ++c) {
    int s = 0;
    for (int r = 0; r < n; ++r) {
      s += e[r * n + c];
      if (s < 0 || s > 1) return false;
    }
    if (s != 1) return false;
  }
  return true;
}

AsmMatrix::AsmMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (!is_asm(n_, entries_)) throw InvalidInput("not an alternating sign matrix");
}

AsmMatrix AsmMatrix::from_permutation(const std::vector<int>& cols) {
  const int n = static_cast<int>(cols.size());
  std::vector<int> e(n * n, 0);
  for (int r = 0; r < n; ++r) {
    if (cols[r] < 1 || cols[r] > n) throw InvalidInput("permutation entry out of range");
    e[r * n + cols[r] - 1] = 1;
  }
  return AsmMatrix(n, std::move(e));
}

Pattern gog_from_asm(const AsmMatrix& a) {
  const int n = a.n();
  std::vector<std::vector<int>> rows(n);
  std::vector<int> colsum(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) colsum[c] += a(r, c);
    auto& row = rows[n - r];
    for (int c = 1; c <= n; ++c)
      if (colsum[c] == 1) row.push_back(c);
  }
  return Pattern::from_rows(Shape::triangle(n), rows);
}

AsmMatrix asm_from_gog(const Pattern& p) {
  if (!gog::is_triangle(p)) throw InvalidInput("asm_from_gog needs a Gog triangle");
  const int n = p.n();
  std::vector<int> e(n * n, 0);
  for (int r = 1; r <= n; ++r) {
    for (int j = 1; j <= r; ++j) e[(r - 1) * n + p(r, j) - 1] += 1;
    if (r > 1)
      for (int j = 1; j < r; ++j) e[(r - 1) * n + p(r - 1, j) - 1] -= 1;
  }
  return AsmMatrix(n, std::move(e));
}

std::string to_text(const AsmMatrix& a) {
  std::string out = "asm " + std::to_string(a.n()) + "\n";
  for (int r = 1; r <= a.n(); ++r) {
    for (int c = 1; c <= a.n(); ++c) {
      if (c > 1) out += ' ';
      out += std::to_string(a(r, c));
    }
    out += '\n';
  }
  return out;
}

AsmMatrix parse_asm(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  int n = 0;
  if (!(in >> tag >> n) || tag != "asm" || n < 1) throw ParseError("bad ASM header");
  std::vector<int> e(n * n);
  for (auto& v : e)
    if (!(in >> v)) throw ParseError("ASM needs " + std::to_string(n * n) + " entries");
  std::string extra;
  if (in >> extra) throw ParseError("trailing data after ASM");
  try {
    return AsmMatrix(n, std::move(e));
  } catch (const InvalidInput& err) {
    throw ParseError(err.what());
  }
}

}  // namespace gtp
