#include "gtp/shape.hpp"

#include "gtp/error.hpp"

namespace gtp {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

Shape::Shape(ShapeKind kind, int n, int k, int l) : kind_(kind), n_(n), k_(k), l_(l) {
  if (n < 1) throw InvalidShape("shape size must be positive, got " + std::to_string(n));
  if (k < 1 || k > n) throw InvalidShape("left width must lie in [1, n], got " + std::to_string(k));
  if (l < 1 || l > n) throw InvalidShape("right width must lie in [1, n], got " + std::to_string(l));
  if (kind == ShapeKind::rectangle && k + l > n + 1)
    throw InvalidShape("rectangle needs k + l <= n + 1");
  row_offset_.assign(n + 2, 0);
  int offset = 0;
  for (int i = n; i >= 1; --i) {
    row_offset_[i] = offset;
    offset += row_size(i);
  }
  size_ = offset;
}

Shape Shape::triangle(int n) { return Shape(ShapeKind::triangle, n, n, n); }
Shape Shape::left(int n, int k) { return Shape(ShapeKind::left, n, k, n); }
Shape Shape::right(int n, int l) { return Shape(ShapeKind::right, n, n, l); }
Shape Shape::rectangle(int n, int k, int l) { return Shape(ShapeKind::rectangle, n, k, l); }

int Shape::top_row() const {
  int i = n_;
  while (i > 1 && row_size(i) == 0) --i;
  return i;
}

std::vector<Cell> Shape::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (int i = n_; i >= 1; --i)
    for (int j = row_first(i); j <= row_last(i); ++j) out.push_back({i, j});
  return out;
}

bool Shape::is_subset_of(const Shape& other) const {
  if (n_ != other.n_) return false;
  return k_ <= other.k_ && l_ <= other.l_;
}

std::string kind_name(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::triangle: return "triangle";
    case ShapeKind::left: return "left";
    case ShapeKind::right: return "right";
    case ShapeKind::rectangle: return "rect";
  }
  return "?";
}

ShapeKind parse_kind(const std::string& name) {
  if (name == "triangle") return ShapeKind::triangle;
  if (name == "left") return ShapeKind::left;
  if (name == "right") return ShapeKind::right;
  if (name == "rect" || name == "rectangle") return ShapeKind::rectangle;
  throw ParseError("unknown shape kind '" + name + "'");
}

std::string header(const Shape& s) {
  std::string h = kind_name(s.kind()) + " " + std::to_string(s.n());
  switch (s.kind()) {
    case ShapeKind::triangle: break;
    case ShapeKind::left: h += " " + std::to_string(s.left_width()); break;
    case ShapeKind::right: h += " " + std::to_string(s.right_width()); break;
    case ShapeKind::rectangle:
      h += " " + std::to_string(s.left_width()) + " " + std::to_string(s.right_width());
      break;
  }
  return h;
}

}  // namespace gtp
