#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gtp {

enum class ShapeKind { triangle, left, right, rectangle };

// Row i counts from the bottom (i = 1) to the top (i = n); column j indexes
// the NW-SE diagonals from the left. A cell exists when n >= i >= j >= 1.
struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// Set of cells of a triangular array of size n, optionally cut down to the
/// k leftmost NW-SE diagonals (j <= k) and/or the l rightmost SW-NE
/// diagonals (i - j <= l - 1).
///
/// Cells are stored row-major with the top row first and increasing j inside
/// a row; `index` maps a cell to that position.
class Shape {
 public:
  static Shape triangle(int n);
  static Shape left(int n, int k);
  static Shape right(int n, int l);
  static Shape rectangle(int n, int k, int l);

  ShapeKind kind() const { return kind_; }
  int n() const { return n_; }
  // Number of NW-SE diagonals kept; n when the shape is not cut on the left.
  int left_width() const { return k_; }
  // Number of SW-NE diagonals kept; n when the shape is not cut on the right.
  int right_width() const { return l_; }

  bool contains(int i, int j) const {
    return j >= 1 && i >= j && i <= n_ && j <= k_ && i - j <= l_ - 1;
  }
  bool contains(Cell c) const { return contains(c.i, c.j); }

  // Column range of row i; empty when first > last.
  int row_first(int i) const { return i - l_ + 1 > 1 ? i - l_ + 1 : 1; }
  int row_last(int i) const { return i < k_ ? i : k_; }
  int row_size(int i) const {
    int s = row_last(i) - row_first(i) + 1;
    return s > 0 ? s : 0;
  }
  // Highest row holding at least one cell.
  int top_row() const;

  int size() const { return size_; }
  int index(int i, int j) const { return row_offset_[i] + (j - row_first(i)); }

  std::vector<Cell> cells() const;
  bool is_subset_of(const Shape& other) const;

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_ && a.k_ == b.k_ && a.l_ == b.l_;
  }

 private:
  Shape(ShapeKind kind, int n, int k, int l);

  ShapeKind kind_;
  int n_;
  int k_;
  int l_;
  int size_ = 0;
  std::vector<int> row_offset_;
};

// "triangle 5", "left 5 2", "right 5 2", "rect 5 2 3"
std::string header(const Shape& s);
std::string kind_name(ShapeKind kind);
ShapeKind parse_kind(const std::string& name);

}  // namespace gtp
