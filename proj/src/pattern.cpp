#include "gtp/pattern.hpp"

#include <algorithm>

#include "gtp/error.hpp"

namespace gtp {

Pattern::Pattern(Shape shape, std::vector<int> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<int>(entries_.size()) != shape_.size())
    throw MalformedPattern(header(shape_) + " needs " + std::to_string(shape_.size()) +
                           " entries, got " + std::to_string(entries_.size()));
  for (int v : entries_)
    if (v < 1) throw MalformedPattern("entries must be positive, got " + std::to_string(v));
}

Pattern Pattern::from_rows(Shape shape, const std::vector<std::vector<int>>& rows_top_first) {
  const int top = shape.top_row();
  if (static_cast<int>(rows_top_first.size()) != top)
    throw MalformedPattern(header(shape) + " needs " + std::to_string(top) + " rows, got " +
                           std::to_string(rows_top_first.size()));
  std::vector<int> v;
  v.reserve(shape.size());
  for (int r = 0; r < top; ++r) {
    const int i = top - r;
    if (static_cast<int>(rows_top_first[r].size()) != shape.row_size(i))
      throw MalformedPattern("row " + std::to_string(i) + " needs " +
                             std::to_string(shape.row_size(i)) + " entries");
    v.insert(v.end(), rows_top_first[r].begin(), rows_top_first[r].end());
  }
  return Pattern(std::move(shape), std::move(v));
}

int Pattern::at(int i, int j) const {
  if (!shape_.contains(i, j))
    throw MalformedPattern("cell " + to_string(Cell{i, j}) + " is not in " + header(shape_));
  return (*this)(i, j);
}

std::vector<int> Pattern::row(int i) const {
  std::vector<int> r;
  for (int j = shape_.row_first(i); j <= shape_.row_last(i); ++j) r.push_back((*this)(i, j));
  return r;
}

bool lex_less(const Pattern& a, const Pattern& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                      b.entries().begin(), b.entries().end());
}

PatternBuilder::PatternBuilder(Shape shape, int fill)
    : shape_(std::move(shape)), entries_(shape_.size(), fill) {}

PatternBuilder::PatternBuilder(const Pattern& from)
    : shape_(from.shape()), entries_(from.entries().begin(), from.entries().end()) {}

std::vector<Cell> validate_gt(const Pattern& p) {
  const Shape& s = p.shape();
  std::vector<Cell> bad;
  for (const Cell& c : s.cells()) {
    const int x = p(c.i, c.j);
    bool ok = true;
    if (s.contains(c.i + 1, c.j) && p(c.i + 1, c.j) > x) ok = false;
    if (s.contains(c.i + 1, c.j + 1) && x > p(c.i + 1, c.j + 1)) ok = false;
    if (!ok) bad.push_back(c);
  }
  return bad;
}

bool is_gt(const Pattern& p) { return validate_gt(p).empty(); }

namespace {

void require_same_shape(const Pattern& p, const Pattern& q) {
  if (!(p.shape() == q.shape()))
    throw ShapeMismatch(header(p.shape()) + " vs " + header(q.shape()));
}

template <class Op>
Pattern entrywise(const Pattern& p, const Pattern& q, Op op) {
  require_same_shape(p, q);
  std::vector<int> v(p.entries().size());
  std::transform(p.entries().begin(), p.entries().end(), q.entries().begin(), v.begin(), op);
  return Pattern(p.shape(), std::move(v));
}

}  // namespace

bool leq(const Pattern& p, const Pattern& q) {
  require_same_shape(p, q);
  return std::equal(p.entries().begin(), p.entries().end(), q.entries().begin(),
                    [](int a, int b) { return a <= b; });
}

Pattern join(const Pattern& p, const Pattern& q) {
  return entrywise(p, q, [](int a, int b) { return std::max(a, b); });
}

Pattern meet(const Pattern& p, const Pattern& q) {
  return entrywise(p, q, [](int a, int b) { return std::min(a, b); });
}

Pattern restrict_to(const Pattern& p, const Shape& target) {
  if (!target.is_subset_of(p.shape()))
    throw ShapeMismatch(header(target) + " is not contained in " + header(p.shape()));
  return Pattern::generate(target, [&](int i, int j) { return p(i, j); });
}

}  // namespace gtp
