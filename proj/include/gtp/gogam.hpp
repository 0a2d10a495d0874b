#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gtp/pattern.hpp"

// GOGAm triangles: Gelfand-Tsetlin triangles with X_{n,n} <= n such that for
// every level 1 <= k <= n-1 and every n = j_0 > j_1 > ... > j_{n-k} >= 1
//
//   sum_{d=0}^{n-k-1} (X_{j_d+d, j_d} - X_{j_{d+1}+d, j_{d+1}}) + X_{j_{n-k}+n-k, j_{n-k}} <= k.
//
// Each bracket is an increment along the SW-NE diagonal i - j = d, so the
// left-hand side only reads rows >= n - k.
namespace gtp::gogam {

class DiagonalSequence {
 public:
  // indices = j_0 .. j_{n-k}; throws InvalidInput if malformed.
  DiagonalSequence(int n, int level, std::vector<int> indices);

  int n() const { return n_; }
  int level() const { return level_; }
  const std::vector<int>& indices() const { return indices_; }

  friend bool operator==(const DiagonalSequence&, const DiagonalSequence&) = default;

 private:
  int n_;
  int level_;
  std::vector<int> indices_;
};

int eval_lhs(const Pattern& triangle, const DiagonalSequence& s);

struct LevelMax {
  int value;
  // Ties go to the lexicographically largest index list.
  DiagonalSequence witness;
};

// Dynamic program over per-diagonal increments.
LevelMax max_lhs(const Pattern& triangle, int level);
// Literal enumeration of every sequence at this level.
LevelMax max_lhs_brute(const Pattern& triangle, int level);

// level -> max LHS with witness, for every level in [1, n-1].
using SlackReport = std::map<int, LevelMax>;
SlackReport slack_report(const Pattern& triangle);

bool is_triangle(const Pattern& p);

// Canonical completions (unchecked).
// Left (n,k): X_{i,j} = X_{i-j+k,k} for j > k.
Pattern complete_left(const Pattern& t);
// Right (n,l): X_{i,j} = 1 on every absent cell.
Pattern complete_right(const Pattern& t);
// Rectangle (n,k,l) -> left (n,k) trapezoid with ones where i - j >= l.
Pattern rectangle_to_left(const Pattern& r);
Pattern complete_rectangle(const Pattern& r);

bool is_left_trapezoid(const Pattern& t);
bool is_right_trapezoid(const Pattern& t);
bool is_rectangle(const Pattern& r);

// Specialised test for (n,2) left arrays: GT and, for n >= i >= 2,
//   X_{i,2} <= n - i + 2   and   X_{i,2} - X_{i-1,1} + X_{i,1} <= n - i + 1.
// Throws ShapeMismatch unless t is a left (n,2) array.
bool is_left_n2(const Pattern& t);

// Sets X_{i,j} = 1 wherever i >= j + k.
Pattern clear_upper_left(const Pattern& triangle, int k);
// If X is constant on each partial diagonal (X_{i+l,k+l}; l >= 0) for every
// i >= m+1, returns X with X_{m+l,k+l} := X_{m,k} for l >= 1; otherwise
// nullopt. Requires n >= m >= k >= 1.
std::optional<Pattern> propagate_diagonal(const Pattern& triangle, int m, int k);

namespace detail {

// max LHS at `level` for a triangle of size n read through get(i, j).
// Writes the witness (j_0..j_{n-k}) when `witness` is non-null.
template <class Get>
int max_lhs_dp(const Get& get, int n, int level, std::vector<int>* witness) {
  const int last = n - level;  // diagonal index of the final term
  // best[d][c]: best value of the tail starting with j_d = c.
  // Column ranges: j_d in [last - d + 1, n - d] for d >= 1, j_0 = n.
  std::vector<std::vector<int>> best(last + 1, std::vector<int>(n + 1, 0));
  std::vector<std::vector<int>> next(last + 1, std::vector<int>(n + 1, 0));
  for (int c = 1; c <= level; ++c) best[last][c] = get(c + last, c);
  for (int d = last - 1; d >= 0; --d) {
    const int lo = d == 0 ? n : last - d + 1;
    const int hi = n - d;
    const int nlo = last - d;  // range of j_{d+1}
    for (int c = lo; c <= hi; ++c) {
      int b = 0;
      int arg = 0;
      const int top = get(c + d, c);
      for (int c2 = nlo; c2 < c && c2 <= n - d - 1; ++c2) {
        const int v = top - get(c2 + d, c2) + best[d + 1][c2];
        if (arg == 0 || v >= b) {
          b = v;
          arg = c2;
        }
      }
      best[d][c] = b;
      next[d][c] = arg;
    }
  }
  if (witness) {
    witness->assign(1, n);
    int c = n;
    for (int d = 0; d < last; ++d) {
      c = next[d][c];
      witness->push_back(c);
    }
  }
  return best[0][n];
}

}  // namespace detail

}  // namespace gtp::gogam
