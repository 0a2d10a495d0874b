#include "gtp/gog.hpp"

#include <algorithm>

#include "gtp/error.hpp"

namespace gtp::gog {

namespace {

void require_kind(const Pattern& p, ShapeKind kind) {
  if (p.shape().kind() != kind)
    throw ShapeMismatch("expected a " + kind_name(kind) + " pattern, got " + header(p.shape()));
}

bool rows_strict(const Pattern& p) {
  const Shape& s = p.shape();
  for (int i = 1; i <= s.n(); ++i)
    for (int j = s.row_first(i); j < s.row_last(i); ++j)
      if (p(i, j) >= p(i, j + 1)) return false;
  return true;
}

}  // namespace

bool is_triangle(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::triangle) return false;
  const int n = p.n();
  for (int j = 1; j <= n; ++j)
    if (p(n, j) != j) return false;
  return rows_strict(p) && is_gt(p);
}

bool is_left_trapezoid(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::left) return false;
  const Shape& s = p.shape();
  for (const Cell& c : s.cells())
    if (p(c.i, c.j) > s.n() - c.i + c.j) return false;
  return rows_strict(p) && is_gt(p);
}

bool is_right_trapezoid(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::right) return false;
  return is_triangle(complete_right(p));
}

bool is_rectangle(const Pattern& p) {
  if (p.shape().kind() != ShapeKind::rectangle) return false;
  return is_left_trapezoid(rectangle_to_left(p));
}

Pattern extract_left(const Pattern& triangle, int k) {
  require_kind(triangle, ShapeKind::triangle);
  return restrict_to(triangle, Shape::left(triangle.n(), k));
}

Pattern extract_right(const Pattern& triangle, int l) {
  require_kind(triangle, ShapeKind::triangle);
  return restrict_to(triangle, Shape::right(triangle.n(), l));
}

Pattern extract_rectangle(const Pattern& triangle, int k, int l) {
  require_kind(triangle, ShapeKind::triangle);
  return restrict_to(triangle, Shape::rectangle(triangle.n(), k, l));
}

Pattern mirror(const Pattern& p) {
  if (!is_triangle(p)) throw InvalidInput("mirror needs a Gog triangle");
  const int n = p.n();
  return Pattern::generate(p.shape(), [&](int i, int j) { return n + 1 - p(i, i + 1 - j); });
}

Pattern fill_left(const Pattern& t) {
  require_kind(t, ShapeKind::left);
  const int n = t.n();
  const int k = t.shape().left_width();
  return Pattern::generate(Shape::triangle(n), [&](int i, int j) {
    if (j <= k) return t(i, j);
    int best = 0;
    for (int s = 0; s <= j - k; ++s) best = std::max(best, t(i - s, k) + j - k - s);
    return best;
  });
}

Pattern complete_left(const Pattern& t) {
  if (!is_left_trapezoid(t)) throw InvalidInput("not a left Gog trapezoid");
  return fill_left(t);
}

Pattern complete_right(const Pattern& t) {
  require_kind(t, ShapeKind::right);
  return Pattern::generate(Shape::triangle(t.n()),
                           [&](int i, int j) { return t.contains(i, j) ? t(i, j) : j; });
}

Pattern rectangle_to_left(const Pattern& r) {
  require_kind(r, ShapeKind::rectangle);
  return Pattern::generate(Shape::left(r.n(), r.shape().left_width()),
                           [&](int i, int j) { return r.contains(i, j) ? r(i, j) : j; });
}

Pattern complete_rectangle(const Pattern& r) { return fill_left(rectangle_to_left(r)); }

}  // namespace gtp::gog
