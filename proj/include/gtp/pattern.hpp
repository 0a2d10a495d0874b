#pragma once

#include <span>
#include <vector>

#include "gtp/shape.hpp"

namespace gtp {

/// Positive integer array over a Shape. Immutable once built; use
/// PatternBuilder (or `generate`) to construct one cell by cell.
class Pattern {
 public:
  // Entries in Shape::index order (top row first). Throws MalformedPattern
  // when the count does not match the shape or an entry is below 1.
  Pattern(Shape shape, std::vector<int> entries);

  static Pattern from_rows(Shape shape, const std::vector<std::vector<int>>& rows_top_first);

  template <class F>
  static Pattern generate(const Shape& shape, F&& value_at) {
    std::vector<int> v;
    v.reserve(shape.size());
    for (int i = shape.n(); i >= 1; --i)
      for (int j = shape.row_first(i); j <= shape.row_last(i); ++j) v.push_back(value_at(i, j));
    return Pattern(shape, std::move(v));
  }

  const Shape& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  bool contains(int i, int j) const { return shape_.contains(i, j); }
  int operator()(int i, int j) const { return entries_[shape_.index(i, j)]; }
  int at(int i, int j) const;  // bounds-checked
  std::span<const int> entries() const { return entries_; }
  std::vector<int> row(int i) const;

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.shape_ == b.shape_ && a.entries_ == b.entries_;
  }

 private:
  Shape shape_;
  std::vector<int> entries_;
};

// Lexicographic order of the row-major entry list; shapes must agree.
bool lex_less(const Pattern& a, const Pattern& b);

class PatternBuilder {
 public:
  explicit PatternBuilder(Shape shape, int fill = 1);
  explicit PatternBuilder(const Pattern& from);

  const Shape& shape() const { return shape_; }
  int& operator()(int i, int j) { return entries_[shape_.index(i, j)]; }
  int operator()(int i, int j) const { return entries_[shape_.index(i, j)]; }
  Pattern build() const { return Pattern(shape_, entries_); }

 private:
  Shape shape_;
  std::vector<int> entries_;
};

/// Cells where X_{i+1,j} <= X_{i,j} <= X_{i+1,j+1} fails, restricted to the
/// comparands present in the shape. Empty iff the pattern is Gelfand-Tsetlin.
std::vector<Cell> validate_gt(const Pattern& p);
bool is_gt(const Pattern& p);

// Entrywise partial order and lattice operations. Throw ShapeMismatch.
bool leq(const Pattern& p, const Pattern& q);
Pattern join(const Pattern& p, const Pattern& q);
Pattern meet(const Pattern& p, const Pattern& q);

// Restriction of the entry map to a sub-shape of the same size n.
Pattern restrict_to(const Pattern& p, const Shape& target);

}  // namespace gtp
