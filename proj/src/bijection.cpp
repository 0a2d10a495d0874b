#include "gtp/bijection.hpp"

#include <algorithm>

#include "gtp/error.hpp"
#include "gtp/gog.hpp"
#include "gtp/gogam.hpp"
#include "gtp/io.hpp"

namespace gtp {

std::vector<Inversion> inversions(const Pattern& p) {
  const Shape& s = p.shape();
  std::vector<Inversion> out;
  for (int j = s.n(); j >= 1; --j)
    for (int i = s.n() - 1; i >= j; --i)
      if (s.contains(i, j) && s.contains(i + 1, j) && p(i, j) == p(i + 1, j)) out.push_back({i, j});
  return out;
}

std::vector<int> first_column_inversions(const Pattern& p) {
  std::vector<int> rows;
  for (int i = p.n() - 1; i >= 1; --i)
    if (p.contains(i, 1) && p.contains(i + 1, 1) && p(i, 1) == p(i + 1, 1)) rows.push_back(i);
  return rows;
}

std::vector<Cell> covered_cells(const Pattern& t) {
  if (t.shape().kind() != ShapeKind::triangle)
    throw ShapeMismatch("covered_cells needs a triangle");
  std::vector<Cell> out;
  for (const Inversion& inv : inversions(t))
    for (int q = 1; q <= t.n() - inv.i; ++q) out.push_back({inv.i + q, inv.j + q});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProcedureResult standard_procedure(const Pattern& t, int diagonals) {
  if (t.shape().kind() != ShapeKind::triangle)
    throw ShapeMismatch("standard_procedure needs a triangle");
  const int n = t.n();
  if (diagonals < 1 || diagonals > n) throw InvalidInput("diagonal count must lie in [1, n]");
  PatternBuilder y(t);
  for (int j = n; j >= n - diagonals + 1; --j) {
    for (int i = n - 1; i >= j; --i) {
      if (y(i, j) != y(i + 1, j)) continue;
      for (int q = 1; q <= n - i; ++q)
        if (y(i + q, j + q) <= 1) return {y.build(), false};
      for (int q = 1; q <= n - i; ++q) y(i + q, j + q) -= 1;
    }
  }
  Pattern out = y.build();
  const bool ok = is_gt(out);
  return {std::move(out), ok};
}

bool left_completion_invariance(const Pattern& t) {
  if (!gog::is_left_trapezoid(t)) throw InvalidInput("not a left Gog trapezoid");
  const int n = t.n();
  const int k = t.shape().left_width();
  const Pattern x = gog::fill_left(t);
  const auto res = standard_procedure(x, n - k + 1);
  if (!res.gt_valid) return false;
  for (int i = k; i <= n; ++i)
    for (int l = 1; l <= n - i; ++l)
      if (res.pattern(i + l, k + l) != x(i, k)) return false;
  return true;
}

namespace {

int left_width_for_map(const Pattern& t) {
  if (t.shape().kind() != ShapeKind::left)
    throw ShapeMismatch("bijection needs a left trapezoid, got " + header(t.shape()));
  const int k = t.shape().left_width();
  if (k > 2) throw InvalidInput("bijection is only defined for widths 1 and 2");
  return k;
}

}  // namespace

MapResult gog_to_gogam_left(const Pattern& x) {
  const int k = left_width_for_map(x);
  if (!gog::is_left_trapezoid(x)) throw InvalidInput("input is not a left Gog trapezoid");
  BijectionTrace trace{Direction::gog_to_gogam, {}, true};
  if (k == 1) return {x, trace};

  const int n = x.n();
  PatternBuilder y(x);
  int l = 0;
  for (int r : first_column_inversions(x)) {
    ++l;
    const int target = y(r + 1, 2);
    int m = n;
    while (y(m, 2) != target) --m;
    for (int i = r + 1; i <= m - 1; ++i) y(i, 1) = y(i + 1, 1);
    for (int i = r + 1; i <= m; ++i) {
      if (y(i, 2) <= 1) trace.valid = false;
      y(i, 2) = std::max(1, y(i, 2) - 1);
    }
    trace.steps.push_back({l, r, m, y.build()});
  }
  return {y.build(), std::move(trace)};
}

MapResult gogam_to_gog_left(const Pattern& y0) {
  const int k = left_width_for_map(y0);
  if (k == 1) {
    if (!gog::is_left_trapezoid(y0)) throw InvalidInput("input is not a left (n,1) trapezoid");
    return {y0, {Direction::gogam_to_gog, {}, true}};
  }
  if (!gogam::is_left_n2(y0)) throw InvalidInput("input is not a left GOGAm (n,2) trapezoid");
  BijectionTrace trace{Direction::gogam_to_gog, {}, true};

  const auto inv = first_column_inversions(y0);
  PatternBuilder y(y0);
  for (int l = static_cast<int>(inv.size()); l >= 1; --l) {
    const int r = inv[l - 1];
    const int target = y(r + 1, 2);
    int p = 2;
    while (y(p, 2) != target) ++p;
    for (int i = r; i >= p; --i) y(i, 1) = y(i - 1, 1);
    for (int i = p; i <= r + 1; ++i) y(i, 2) += 1;
    trace.steps.push_back({l, r, p, y.build()});
  }
  return {y.build(), std::move(trace)};
}

Pattern rectangle_map_n2(const Pattern& r, Direction direction) {
  if (r.shape().kind() != ShapeKind::rectangle || r.shape().left_width() != 2)
    throw ShapeMismatch("rectangle map needs an (n,2,l) rectangle, got " + header(r.shape()));
  if (direction == Direction::gog_to_gogam) {
    if (!gog::is_rectangle(r)) throw InvalidInput("input is not a Gog rectangle");
    return restrict_to(gog_to_gogam_left(gog::rectangle_to_left(r)).image, r.shape());
  }
  if (!gogam::is_rectangle(r)) throw InvalidInput("input is not a GOGAm rectangle");
  return restrict_to(gogam_to_gog_left(gogam::rectangle_to_left(r)).image, r.shape());
}

std::string dump_trace(const BijectionTrace& trace) {
  std::string out;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const auto& st = trace.steps[s];
    if (s > 0) out += '\n';
    out += "# step l=" + std::to_string(st.step) + " inv=" + std::to_string(st.inversion) +
           " pivot=" + std::to_string(st.pivot) + "\n";
    out += to_text(st.pattern);
  }
  return out;
}

}  // namespace gtp
