#include "gtp/gogam.hpp"

#include <algorithm>

#include "gtp/error.hpp"

namespace gtp::gogam {

namespace {

void require_triangle(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::triangle)
    throw ShapeMismatch("expected a triangle, got " + header(p.shape()));
}

void require_level(const Pattern& p, int level) {
  if (level < 1 || level > p.n() - 1)
    throw InvalidInput("level must lie in [1, n-1], got " + std::to_string(level));
}

}  // namespace

DiagonalSequence::DiagonalSequence(int n, int level, std::vector<int> indices)
    : n_(n), level_(level), indices_(std::move(indices)) {
  if (level < 1 || level > n - 1) throw InvalidInput("sequence level out of range");
  if (static_cast<int>(indices_.size()) != n - level + 1)
    throw InvalidInput("sequence needs n - k + 1 indices");
  if (indices_.front() != n) throw InvalidInput("sequence must start at n");
  if (indices_.back() < 1) throw InvalidInput("sequence indices must be positive");
  for (std::size_t d = 1; d < indices_.size(); ++d)
    if (indices_[d] >= indices_[d - 1]) throw InvalidInput("sequence must strictly decrease");
}

int eval_lhs(const Pattern& p, const DiagonalSequence& s) {
  require_triangle(p);
  if (s.n() != p.n()) throw ShapeMismatch("sequence size differs from triangle size");
  const auto& j = s.indices();
  const int last = s.n() - s.level();
  int total = 0;
  for (int d = 0; d < last; ++d) total += p(j[d] + d, j[d]) - p(j[d + 1] + d, j[d + 1]);
  return total + p(j[last] + last, j[last]);
}

LevelMax max_lhs(const Pattern& p, int level) {
  require_triangle(p);
  require_level(p, level);
  std::vector<int> w;
  const int v = detail::max_lhs_dp([&](int i, int j) { return p(i, j); }, p.n(), level, &w);
  return {v, DiagonalSequence(p.n(), level, std::move(w))};
}

LevelMax max_lhs_brute(const Pattern& p, int level) {
  require_triangle(p);
  require_level(p, level);
  const int n = p.n();
  const int picks = n - level;
  // Choose j_1 > ... > j_{n-k} from {1..n-1}; walk subsets from the
  // lexicographically largest downward so the first maximum found wins ties.
  std::vector<int> idx(picks);
  for (int t = 0; t < picks; ++t) idx[t] = n - 1 - t;
  std::optional<LevelMax> best;
  while (true) {
    std::vector<int> full{n};
    full.insert(full.end(), idx.begin(), idx.end());
    DiagonalSequence s(n, level, full);
    const int v = eval_lhs(p, s);
    if (!best || v > best->value) best = LevelMax{v, std::move(s)};
    // Previous subset in decreasing-lex order.
    int t = picks - 1;
    while (t >= 0 && idx[t] == picks - t) --t;
    if (t < 0) break;
    --idx[t];
    for (int u = t + 1; u < picks; ++u) idx[u] = idx[u - 1] - 1;
  }
  return *best;
}

SlackReport slack_report(const Pattern& p) {
  require_triangle(p);
  SlackReport r;
  for (int k = 1; k <= p.n() - 1; ++k) r.emplace(k, max_lhs(p, k));
  return r;
}

bool is_triangle(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::triangle) return false;
  const int n = p.n();
  if (p(n, n) > n || !is_gt(p)) return false;
  for (int k = 1; k <= n - 1; ++k)
    if (detail::max_lhs_dp([&](int i, int j) { return p(i, j); }, n, k, nullptr) > k)
      return false;
  return true;
}

Pattern complete_left(const Pattern& t) {
  if (t.shape().kind() != ShapeKind::left)
    throw ShapeMismatch("expected a left trapezoid, got " + header(t.shape()));
  const int k = t.shape().left_width();
  return Pattern::generate(Shape::triangle(t.n()),
                           [&](int i, int j) { return j <= k ? t(i, j) : t(i - j + k, k); });
}

Pattern complete_right(const Pattern& t) {
  if (t.shape().kind() != ShapeKind::right)
    throw ShapeMismatch("expected a right trapezoid, got " + header(t.shape()));
  return Pattern::generate(Shape::triangle(t.n()),
                           [&](int i, int j) { return t.contains(i, j) ? t(i, j) : 1; });
}

Pattern rectangle_to_left(const Pattern& r) {
  if (r.shape().kind() != ShapeKind::rectangle)
    throw ShapeMismatch("expected a rectangle, got " + header(r.shape()));
  return Pattern::generate(Shape::left(r.n(), r.shape().left_width()),
                           [&](int i, int j) { return r.contains(i, j) ? r(i, j) : 1; });
}

Pattern complete_rectangle(const Pattern& r) { return complete_left(rectangle_to_left(r)); }

bool is_left_trapezoid(const Pattern& t) {
  return t.shape().kind() == ShapeKind::left && is_triangle(complete_left(t));
}

bool is_right_trapezoid(const Pattern& t) {
  return t.shape().kind() == ShapeKind::right && is_triangle(complete_right(t));
}

bool is_rectangle(const Pattern& r) {
  return r.shape().kind() == ShapeKind::rectangle && is_triangle(complete_rectangle(r));
}

bool is_left_n2(const Pattern& t) {
  if (t.shape().kind() != ShapeKind::left || t.shape().left_width() != 2)
    throw ShapeMismatch("expected a left (n,2) array, got " + header(t.shape()));
  if (!is_gt(t)) return false;
  const int n = t.n();
  for (int i = 2; i <= n; ++i) {
    if (t(i, 2) > n - i + 2) return false;
    // Implied by the line above unless X_{i-1,1} == X_{i,1}.
    if (t(i - 1, 1) == t(i, 1) && t(i, 2) > n - i + 1) return false;
  }
  return true;
}

Pattern clear_upper_left(const Pattern& p, int k) {
  require_triangle(p);
  return Pattern::generate(p.shape(), [&](int i, int j) { return i >= j + k ? 1 : p(i, j); });
}

std::optional<Pattern> propagate_diagonal(const Pattern& p, int m, int k) {
  require_triangle(p);
  const int n = p.n();
  if (!(n >= m && m >= k && k >= 1)) throw InvalidInput("need n >= m >= k >= 1");
  for (int i = m + 1; i <= n; ++i)
    for (int l = 1; l <= n - i; ++l)
      if (p(i + l, k + l) != p(i, k)) return std::nullopt;
  PatternBuilder b(p);
  for (int l = 1; l <= n - m; ++l) b(m + l, k + l) = p(m, k);
  return b.build();
}

}  // namespace gtp::gogam
