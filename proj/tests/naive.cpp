#include "naive.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace naive {

using gtp::Pattern;
using gtp::Shape;

void for_each_gt_triangle(int n, int max_entry, const std::function<void(const Pattern&)>& visit) {
  const Shape s = Shape::triangle(n);
  std::vector<std::vector<int>> rows(n);
  for (int r = 0; r < n; ++r) rows[r].resize(n - r);
  std::function<void(int, int)> fill = [&](int r, int j) {
    if (r == n) {
      visit(Pattern::from_rows(s, rows));
      return;
    }
    if (j == n - r) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1, hi = max_entry;
    if (r == 0 && j > 0) lo = rows[0][j - 1];
    if (r > 0) {
      lo = rows[r - 1][j];
      hi = rows[r - 1][j + 1];
    }
    for (int v = lo; v <= hi; ++v) {
      rows[r][j] = v;
      fill(r, j + 1);
    }
  };
  fill(0, 0);
}

void for_each_gt_array(const Shape& shape, int max_entry, const std::function<void(const Pattern&)>& visit) {
  const auto cells = shape.cells();
  std::vector<int> v(cells.size());
  std::function<void(std::size_t)> fill = [&](std::size_t t) {
    if (t == cells.size()) {
      visit(Pattern(shape, v));
      return;
    }
    const auto [i, j] = cells[t];
    int lo = 1, hi = max_entry;
    if (shape.contains(i + 1, j)) lo = std::max(lo, v[shape.index(i + 1, j)]);
    if (shape.contains(i + 1, j + 1)) hi = std::min(hi, v[shape.index(i + 1, j + 1)]);
    for (int x = lo; x <= hi; ++x) {
      v[t] = x;
      fill(t + 1);
    }
  };
  fill(0);
}

bool is_gog_triangle(const Pattern& p) {
  const int n = p.n();
  for (int j = 1; j <= n; ++j)
    if (p(n, j) != j) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < i; ++j)
      if (p(i, j) >= p(i, j + 1)) return false;
  return true;
}

namespace {

// X_d(c) = X_{c+d, c}
int diag(const Pattern& p, int d, int c) { return p(c + d, c); }

bool level_holds(const Pattern& p, int k) {
  const int n = p.n();
  const int last = n - k;
  std::vector<int> j(last + 1);
  j[0] = n;
  std::function<bool(int)> rec = [&](int d) {
    if (d > last) {
      int lhs = 0;
      for (int t = 0; t < last; ++t) lhs += diag(p, t, j[t]) - diag(p, t, j[t + 1]);
      lhs += diag(p, last, j[last]);
      return lhs <= k;
    }
    for (int c = 1; c < j[d - 1]; ++c) {
      if (c + d > n) break;
      j[d] = c;
      if (!rec(d + 1)) return false;
    }
    return true;
  };
  return rec(1);
}

}  // namespace

bool is_gogam_triangle(const Pattern& p) {
  const int n = p.n();
  if (p(n, n) > n) return false;
  for (int k = 1; k <= n - 1; ++k)
    if (!level_holds(p, k)) return false;
  return true;
}

const Triangles& triangles(int n) {
  static std::map<int, Triangles> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Triangles t;
  for_each_gt_triangle(n, n, [&](const Pattern& p) {
    if (is_gog_triangle(p)) t.gog.push_back(p);
    if (is_gogam_triangle(p)) t.gogam.push_back(p);
  });
  std::sort(t.gog.begin(), t.gog.end(), gtp::lex_less);
  std::sort(t.gogam.begin(), t.gogam.end(), gtp::lex_less);
  return cache.emplace(n, std::move(t)).first->second;
}

std::vector<Pattern> family(const gtp::FamilySpec& spec) {
  const auto& t = triangles(spec.shape.n());
  const auto& source = spec.family == gtp::Family::gog ? t.gog : t.gogam;
  std::vector<Pattern> out;
  for (const auto& p : source) out.push_back(gtp::restrict_to(p, spec.shape));
  std::sort(out.begin(), out.end(), gtp::lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<gtp::AsmMatrix> all_asms(int n) {
  // Rows are {-1,0,1} vectors whose partial sums stay in {0,1} and end at 1;
  // column partial sums must stay in {0,1} as well.
  std::vector<std::vector<int>> row_choices;
  std::vector<int> row(n);
  std::function<void(int, int)> make_row = [&](int c, int sum) {
    if (c == n) {
      if (sum == 1) row_choices.push_back(row);
      return;
    }
    for (int v : {-1, 0, 1}) {
      if (sum + v < 0 || sum + v > 1) continue;
      row[c] = v;
      make_row(c + 1, sum + v);
    }
  };
  make_row(0, 0);

  std::vector<gtp::AsmMatrix> out;
  std::vector<int> entries;
  std::vector<int> col_sum(n, 0);
  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      if (std::all_of(col_sum.begin(), col_sum.end(), [](int v) { return v == 1; }))
        out.emplace_back(n, entries);
      return;
    }
    for (const auto& choice : row_choices) {
      bool ok = true;
      for (int c = 0; c < n && ok; ++c) ok = col_sum[c] + choice[c] >= 0 && col_sum[c] + choice[c] <= 1;
      if (!ok) continue;
      for (int c = 0; c < n; ++c) col_sum[c] += choice[c];
      entries.insert(entries.end(), choice.begin(), choice.end());
      rec(r + 1);
      entries.resize(entries.size() - n);
      for (int c = 0; c < n; ++c) col_sum[c] -= choice[c];
    }
  };
  rec(0);
  return out;
}

}  // namespace naive
