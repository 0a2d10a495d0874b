#include "gtp/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "gtp/asm.hpp"
#include "gtp/bijection.hpp"
#include "gtp/fixtures.hpp"
#include "gtp/gog.hpp"
#include "gtp/gogam.hpp"
#include "gtp/io.hpp"

namespace gtp::verify {

nlohmann::json to_json(const CheckResult& r) {
  return {{"check", r.name},
          {"status", r.passed ? "pass" : "fail"},
          {"details", r.details},
          {"seconds", r.seconds}};
}

std::string to_line(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.seconds << " s)";
  if (!r.details.empty()) {
    std::string d = r.details;
    if (!d.empty() && d.back() == '\n') d.pop_back();
    if (d.find('\n') == std::string::npos)
      os << ": " << d;
    else
      os << "\n" << d;
  }
  return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

// A check body fills `details` and returns pass/fail; exceptions count as fail.
using Body = std::function<bool(std::string& details)>;

void run_check(std::vector<CheckResult>& out, std::string name, const Body& body) {
  const auto start = Clock::now();
  CheckResult r;
  r.name = std::move(name);
  try {
    r.passed = body(r.details);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  out.push_back(std::move(r));
}

bool same_text(std::string& details, const std::string& got, std::string_view want) {
  if (got == want) return true;
  details = "expected:\n" + std::string(want) + "got:\n" + got;
  return false;
}

std::string cells_text(const std::vector<Cell>& cells) {
  std::string s = "cells " + std::to_string(cells.size()) + "\n";
  for (const auto& c : cells) s += std::to_string(c.i) + " " + std::to_string(c.j) + "\n";
  return s;
}

std::string counterexample(const std::string& what, const Pattern& p) {
  return what + "\n" + to_text(p);
}

SearchOptions search_options(const SuiteOptions& opt) {
  SearchOptions s;
  s.threads = opt.threads;
  s.seed = opt.seed;
  return s;
}

std::string totals(std::uint64_t a, std::uint64_t b) {
  return "gog " + std::to_string(a) + " / gogam " + std::to_string(b);
}

std::string hist_text(const std::map<int, std::uint64_t>& h) {
  std::string s = "{";
  for (const auto& [v, c] : h) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(v) + ":" + std::to_string(c);
  }
  return s + "}";
}

std::vector<gogam::DiagonalSequence> all_sequences(int n, int level) {
  std::vector<gogam::DiagonalSequence> out;
  const int picks = n - level;
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int below) {
    if (static_cast<int>(chosen.size()) == picks) {
      std::vector<int> idx{n};
      idx.insert(idx.end(), chosen.begin(), chosen.end());
      out.emplace_back(n, level, idx);
      return;
    }
    const int remaining = picks - static_cast<int>(chosen.size());
    for (int c = below - 1; c >= remaining; --c) {
      chosen.push_back(c);
      rec(c);
      chosen.pop_back();
    }
  };
  rec(n);
  return out;
}

// Every sequence at every level: LHS(after) <= LHS(before).
bool lhs_never_increases(const Pattern& before, const Pattern& after) {
  for (int k = 1; k <= before.n() - 1; ++k)
    for (const auto& s : all_sequences(before.n(), k))
      if (gogam::eval_lhs(after, s) > gogam::eval_lhs(before, s)) return false;
  return true;
}

// Induction invariants of a forward trace: each step is GT, below X, equal
// to X on rows <= i_l, and satisfies the (n,2) inequalities above i_l.
bool forward_steps_ok(const Pattern& x, const BijectionTrace& trace, std::string& why) {
  const int n = x.n();
  for (const auto& st : trace.steps) {
    const Pattern& y = st.pattern;
    if (!is_gt(y)) return why = "step not GT", false;
    if (!leq(y, x)) return why = "step not below input", false;
    for (int i = 1; i <= st.inversion; ++i)
      for (int j = 1; j <= std::min(i, 2); ++j)
        if (y(i, j) != x(i, j)) return why = "step changed a row below the inversion", false;
    for (int i = std::max(2, st.inversion + 1); i <= n; ++i) {
      if (y(i, 2) > n - i + 2) return why = "step breaks X_{i,2} <= n-i+2", false;
      if (y(i, 2) - y(i - 1, 1) + y(i, 1) > n - i + 1)
        return why = "step breaks X_{i,2} - X_{i-1,1} + X_{i,1} <= n-i+1", false;
    }
  }
  return true;
}

std::uint64_t catalan_number(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int a = 0; a < m; ++a) c[m] += c[a] * c[m - 1 - a];
  return c[n];
}

// Column sequences X_{n,1}, ..., X_{1,1}: weakly increasing downward with
// X_{j,1} <= n - j + 1.
std::vector<Pattern> bounded_columns(int n) {
  std::vector<Pattern> out;
  std::vector<int> col;
  std::function<void(int, int)> rec = [&](int row, int floor) {
    if (row == 0) {
      out.emplace_back(Shape::left(n, 1), col);
      return;
    }
    for (int v = floor; v <= n - row + 1; ++v) {
      col.push_back(v);
      rec(row - 1, v);
      col.pop_back();
    }
  };
  rec(n, 1);
  return out;
}

}  // namespace

std::vector<CheckResult> reference_examples() {
  std::vector<CheckResult> out;

  run_check(out, "gog triangle (n=5) example is Gog", [](std::string& d) {
    const Pattern p = fixture_pattern("gog_triangle_5.txt");
    d = "violations: " + std::to_string(validate_gt(p).size());
    return validate_gt(p).empty() && gog::is_triangle(p) && !gogam::is_triangle(p);
  });
  run_check(out, "right Gog (5,2) example is a right Gog trapezoid",
            [](std::string&) { return gog::is_right_trapezoid(fixture_pattern("right_gog_5_2.txt")); });
  run_check(out, "left Gog (5,2) example is a left Gog trapezoid", [](std::string&) {
    const Pattern t = fixture_pattern("left_gog_5_2.txt");
    return gog::is_left_trapezoid(t) && gog::is_triangle(gog::fill_left(t));
  });
  run_check(out, "left Gog (5,2) completion", [](std::string& d) {
    return same_text(d, to_text(gog::complete_left(fixture_pattern("left_gog_5_2.txt"))),
                     fixture("left_gog_5_2_completion.txt"));
  });
  run_check(out, "right GOGAm (5,2) example is a right GOGAm trapezoid", [](std::string&) {
    return gogam::is_right_trapezoid(fixture_pattern("right_gogam_5_2.txt"));
  });
  run_check(out, "left GOGAm (5,2) example is a left GOGAm trapezoid", [](std::string&) {
    const Pattern t = fixture_pattern("left_gogam_5_2.txt");
    return gogam::is_left_trapezoid(t) && gogam::is_left_n2(t) && !gog::is_left_trapezoid(t);
  });
  run_check(out, "left GOGAm (5,2) completion", [](std::string& d) {
    const Pattern c = gogam::complete_left(fixture_pattern("left_gogam_5_2.txt"));
    return same_text(d, to_text(c), fixture("left_gogam_5_2_completion.txt")) && gogam::is_triangle(c);
  });
  run_check(out, "standard procedure on the (5,2) completion, 4 diagonals", [](std::string& d) {
    const auto res = standard_procedure(fixture_pattern("left_gog_5_2_completion.txt"), 4);
    return same_text(d, to_text(res.pattern), fixture("standard_procedure_5_2.txt")) && res.gt_valid;
  });
  run_check(out, "inversions of the n=5 example", [](std::string& d) {
    const auto inv = inversions(fixture_pattern("inversion_triangle_5.txt"));
    const std::vector<Inversion> want{{2, 2}, {4, 1}, {3, 1}};
    for (const auto& v : inv) d += to_string(Cell{v.i, v.j}) + " ";
    return inv == want;
  });
  run_check(out, "covered cells of the n=5 example", [](std::string& d) {
    return same_text(d, cells_text(covered_cells(fixture_pattern("inversion_triangle_5.txt"))),
                     fixture("covered_cells_5.txt"));
  });
  run_check(out, "worked (7,2) example: forward trace", [](std::string& d) {
    const Pattern x = fixture_pattern("worked_example_step0.txt");
    const auto r = gog_to_gogam_left(x);
    if (!same_text(d, dump_trace(r.trace), fixture("worked_example_trace.txt"))) return false;
    std::vector<int> pivots, invs;
    for (const auto& st : r.trace.steps) {
      pivots.push_back(st.pivot);
      invs.push_back(st.inversion);
    }
    for (int l = 1; l <= 4; ++l) {
      const std::string name = "worked_example_step" + std::to_string(l) + ".txt";
      if (!same_text(d, to_text(r.trace.steps[l - 1].pattern), fixture(name))) return false;
    }
    d = "inversions 6,5,2,1 pivots 7,6,5,2";
    return pivots == std::vector<int>{7, 6, 5, 2} && invs == std::vector<int>{6, 5, 2, 1} &&
           to_text(r.image) == fixture("worked_example_step4.txt") && r.trace.valid;
  });
  run_check(out, "worked (7,2) example: inverse replays the trace", [](std::string& d) {
    const Pattern y = fixture_pattern("worked_example_step4.txt");
    const auto r = gogam_to_gog_left(y);
    // Inverse step l produces the forward intermediate l-1.
    for (const auto& st : r.trace.steps) {
      const std::string name = "worked_example_step" + std::to_string(st.step - 1) + ".txt";
      if (!same_text(d, to_text(st.pattern), fixture(name))) return false;
    }
    if (first_column_inversions(y) != std::vector<int>{6, 5, 4, 1}) {
      d = "output inversions differ from {6,5,4,1}";
      return false;
    }
    return same_text(d, to_text(r.image), fixture("worked_example_step0.txt")) &&
           r.trace.steps.size() == 4;
  });
  return out;
}

std::vector<CheckResult> catalan(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (int n = 1; n <= opt.n_max; ++n) {
    run_check(out, "(n,1) Catalan n=" + std::to_string(n), [&](std::string& d) {
      const auto gog_set = enumerate({Family::gog, Shape::left(n, 1)}, search_options(opt));
      const auto gogam_set = enumerate({Family::gogam, Shape::left(n, 1)}, search_options(opt));
      const auto direct = bounded_columns(n);
      d = totals(gog_set.size(), gogam_set.size()) + ", Catalan " + std::to_string(catalan_number(n));
      for (const auto& t : gog_set) {
        if (!(gog_to_gogam_left(t).image == t)) {
          d = counterexample("identity map failed on", t);
          return false;
        }
      }
      return gog_set.size() == catalan_number(n) && gog_set == gogam_set && gog_set == direct;
    });
  }
  return out;
}

std::vector<CheckResult> roundtrip(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  for (int n = 2; n <= opt.n_max; ++n) {
    const auto gog_set = enumerate({Family::gog, Shape::left(n, 2)}, search_options(opt));
    const auto gogam_set = enumerate({Family::gogam, Shape::left(n, 2)}, search_options(opt));

    run_check(out, "(n,2) forward n=" + std::to_string(n), [&](std::string& d) {
      std::vector<Pattern> images;
      bool positions_differ = false;
      for (const auto& x : gog_set) {
        const auto r = gog_to_gogam_left(x);
        const Pattern& y = r.image;
        std::string why;
        if (!r.trace.valid) why = "trace dropped an entry below 1";
        else if (!gogam::is_left_n2(y)) why = "image fails the (n,2) inequalities";
        else if (!gogam::is_left_trapezoid(y)) why = "image completion is not GOGAm";
        else if (y(1, 1) != x(1, 1)) why = "bottom entry changed";
        else if (first_column_inversions(y).size() != first_column_inversions(x).size())
          why = "first-column inversion count changed";
        else if (!leq(y, x)) why = "image not below input";
        else if (!forward_steps_ok(x, r.trace, why)) {
        } else {
          const auto back = gogam_to_gog_left(y);
          if (!(back.image == x)) why = "inverse does not recover the input";
          else {
            for (const auto& st : back.trace.steps) {
              const Pattern& want = st.step == 1 ? x : r.trace.steps[st.step - 2].pattern;
              if (!(st.pattern == want)) why = "inverse intermediates differ from forward ones";
            }
          }
        }
        if (!why.empty()) {
          d = counterexample(why + " for", x);
          return false;
        }
        if (first_column_inversions(y) != first_column_inversions(x)) positions_differ = true;
        images.push_back(y);
      }
      std::sort(images.begin(), images.end(), lex_less);
      d = totals(gog_set.size(), gogam_set.size()) +
          (positions_differ ? ", inversion positions move" : "");
      return images == gogam_set;
    });

    run_check(out, "(n,2) inverse n=" + std::to_string(n), [&](std::string& d) {
      for (const auto& y : gogam_set) {
        const auto r = gogam_to_gog_left(y);
        std::string why;
        if (!gog::is_left_trapezoid(r.image)) why = "preimage is not a left Gog trapezoid";
        else if (!(gog_to_gogam_left(r.image).image == y)) why = "forward does not recover the input";
        else if (r.image(1, 1) != y(1, 1)) why = "bottom entry changed";
        if (!why.empty()) {
          d = counterexample(why + " for", y);
          return false;
        }
      }
      d = std::to_string(gogam_set.size()) + " GOGAm trapezoids";
      return true;
    });

    if (n > 6) continue;
    for (int l = 1; l <= n - 1; ++l) {
      const Shape rect = Shape::rectangle(n, 2, l);
      run_check(out, "(n,2,l) rectangle map n=" + std::to_string(n) + " l=" + std::to_string(l),
                [&](std::string& d) {
        // Images of arbitrary extensions may differ from the canonical one;
        // only the count is reported.
        std::size_t dependent = 0;
        for (const auto& x : gog_set)
          if (!(restrict_to(gog_to_gogam_left(x).image, rect) ==
                rectangle_map_n2(restrict_to(x, rect), Direction::gog_to_gogam)))
            ++dependent;
        const auto gog_r = enumerate({Family::gog, rect}, search_options(opt));
        const auto gogam_r = enumerate({Family::gogam, rect}, search_options(opt));
        std::vector<Pattern> images;
        for (const auto& r : gog_r) {
          const Pattern img = rectangle_map_n2(r, Direction::gog_to_gogam);
          if (!gogam::is_rectangle(img) || !(rectangle_map_n2(img, Direction::gogam_to_gog) == r)) {
            d = counterexample("rectangle round trip failed for", r);
            return false;
          }
          images.push_back(img);
        }
        std::sort(images.begin(), images.end(), lex_less);
        d = totals(gog_r.size(), gogam_r.size()) + ", " + std::to_string(dependent) + " of " +
            std::to_string(gog_set.size()) + " trapezoids restrict to a different image";
        return images == gogam_r;
      });
    }
  }
  return out;
}

std::vector<CheckResult> equienumeration(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const auto so = search_options(opt);
  for (int n = 1; n <= opt.n_max; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    run_check(out, "triangles" + tag, [&](std::string& d) {
      const auto a = count({Family::gog, Shape::triangle(n)}, so);
      const auto b = count({Family::gogam, Shape::triangle(n)}, so);
      d = totals(a.total, b.total);
      return a.total == b.total;
    });
    run_check(out, "right trapezoids (n,k), all k" + tag, [&](std::string& d) {
      for (int k = 1; k <= n; ++k) {
        const auto a = count({Family::gog, Shape::right(n, k)}, so);
        const auto b = count({Family::gogam, Shape::right(n, k)}, so);
        d += "k=" + std::to_string(k) + ": " + totals(a.total, b.total) + "\n";
        if (a.total != b.total) return false;
      }
      return true;
    });
    run_check(out, "left trapezoids (n,k) totals and X11 histograms" + tag, [&](std::string& d) {
      for (int k = 1; k <= n; ++k) {
        const auto a = count({Family::gog, Shape::left(n, k)}, so);
        const auto b = count({Family::gogam, Shape::left(n, k)}, so);
        d += "k=" + std::to_string(k) + ": " + totals(a.total, b.total) + " " +
             hist_text(a.by_bottom_entry) + "\n";
        if (a.total != b.total || a.by_bottom_entry != b.by_bottom_entry) {
          d += "gogam histogram " + hist_text(b.by_bottom_entry) + "\n";
          return false;
        }
      }
      return true;
    });
    run_check(out, "rectangles (n,k,l) totals and X11 histograms" + tag, [&](std::string& d) {
      for (int k = 1; k <= n; ++k)
        for (int l = 1; k + l <= n + 1; ++l) {
          const auto a = count({Family::gog, Shape::rectangle(n, k, l)}, so);
          const auto b = count({Family::gogam, Shape::rectangle(n, k, l)}, so);
          if (a.total != b.total || a.by_bottom_entry != b.by_bottom_entry) {
            d = "k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + totals(a.total, b.total) +
                " " + hist_text(a.by_bottom_entry) + " vs " + hist_text(b.by_bottom_entry);
            return false;
          }
        }
      d = "all (k,l) with k + l <= n + 1 agree";
      return true;
    });
    run_check(out, "left vs right Gog trapezoids through the mirror" + tag, [&](std::string& d) {
      const auto triangles = enumerate({Family::gog, Shape::triangle(n)}, so);
      for (int k = 1; k <= n; ++k) {
        const auto lefts = enumerate({Family::gog, Shape::left(n, k)}, so);
        const auto rights = enumerate({Family::gog, Shape::right(n, k)}, so);
        for (const auto& p : triangles) {
          const Pattern left = gog::extract_left(p, k);
          const Pattern right = gog::extract_right(gog::mirror(p), k);
          for (const Cell& c : right.shape().cells())
            if (right(c.i, c.j) != n + 1 - left(c.i, c.i + 1 - c.j)) {
              d = counterexample("mirror entry formula fails on", p);
              return false;
            }
        }
        std::vector<Pattern> images;
        for (const auto& t : lefts)
          images.push_back(gog::extract_right(gog::mirror(gog::complete_left(t)), k));
        std::sort(images.begin(), images.end(), lex_less);
        d += "k=" + std::to_string(k) + ": left " + std::to_string(lefts.size()) + " / right " +
             std::to_string(rights.size()) + "\n";
        if (images != rights) return false;
      }
      return true;
    });
  }
  return out;
}

std::vector<CheckResult> statistic(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const auto so = search_options(opt);
  for (int n = 1; n <= opt.n_max; ++n) {
    run_check(out, "bottom entry kept by the (n,1)/(n,2) maps n=" + std::to_string(n), [&](std::string& d) {
      for (int k = 1; k <= std::min(n, 2); ++k) {
        for (const auto& x : enumerate({Family::gog, Shape::left(n, k)}, so))
          if (gog_to_gogam_left(x).image(1, 1) != x(1, 1)) {
            d = counterexample("forward map moved X11 on", x);
            return false;
          }
        for (const auto& y : enumerate({Family::gogam, Shape::left(n, k)}, so))
          if (gogam_to_gog_left(y).image(1, 1) != y(1, 1)) {
            d = counterexample("inverse map moved X11 on", y);
            return false;
          }
      }
      return true;
    });
    run_check(out, "left X11 histograms, all k, n=" + std::to_string(n), [&](std::string& d) {
      for (int k = 1; k <= n; ++k) {
        const auto a = count({Family::gog, Shape::left(n, k)}, so);
        const auto b = count({Family::gogam, Shape::left(n, k)}, so);
        if (a.by_bottom_entry != b.by_bottom_entry) {
          d = "k=" + std::to_string(k) + ": " + hist_text(a.by_bottom_entry) + " vs " +
              hist_text(b.by_bottom_entry);
          return false;
        }
      }
      return true;
    });
  }
  return out;
}

std::vector<CheckResult> gogam_oracle(const SuiteOptions& opt, int exhaustive_n, int random_n,
                                      int samples_per_n) {
  std::vector<CheckResult> out;
  auto agree = [](const Pattern& p, std::string& d) {
    for (int k = 1; k <= p.n() - 1; ++k) {
      const auto fast = gogam::max_lhs(p, k);
      const auto slow = gogam::max_lhs_brute(p, k);
      if (fast.value != slow.value || !(fast.witness == slow.witness)) {
        d = counterexample("level " + std::to_string(k) + ": dp " + std::to_string(fast.value) +
                               " vs brute " + std::to_string(slow.value) + " on",
                           p);
        return false;
      }
    }
    return true;
  };
  run_check(out, "max LHS: every Gog and GOGAm triangle n<=" + std::to_string(exhaustive_n),
            [&](std::string& d) {
    std::size_t checked = 0;
    for (int n = 1; n <= exhaustive_n; ++n)
      for (Family f : {Family::gog, Family::gogam})
        for (const auto& p : enumerate({f, Shape::triangle(n)}, search_options(opt))) {
          if (!agree(p, d)) return false;
          ++checked;
        }
    d = std::to_string(checked) + " triangles";
    return true;
  });
  run_check(out, "max LHS: random GT triangles n<=" + std::to_string(random_n), [&](std::string& d) {
    std::mt19937_64 rng(opt.seed);
    std::size_t checked = 0;
    for (int n = 2; n <= random_n; ++n)
      for (int s = 0; s < samples_per_n; ++s) {
        const Pattern p = Pattern::from_rows(Shape::triangle(n), random_gt_rows(n, n, rng));
        if (!is_gt(p)) {
          d = counterexample("generator produced a non-GT triangle", p);
          return false;
        }
        if (!agree(p, d)) return false;
        ++checked;
      }
    d = std::to_string(checked) + " triangles, seed " + std::to_string(opt.seed);
    return true;
  });
  return out;
}

std::vector<CheckResult> lattice(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const int top = std::min(opt.n_max, 4);
  for (int n = 1; n <= top; ++n) {
    run_check(out, "Gog triangles closed under join/meet, order laws n=" + std::to_string(n),
              [&](std::string& d) {
      const auto set = enumerate({Family::gog, Shape::triangle(n)}, search_options(opt));
      for (const auto& p : set) {
        if (!leq(p, p)) return d = "reflexivity", false;
        for (const auto& q : set) {
          const Pattern j = join(p, q), m = meet(p, q);
          if (!gog::is_triangle(j) || !gog::is_triangle(m)) {
            d = counterexample("join/meet leaves the family for", p) + to_text(q);
            return false;
          }
          if (leq(p, q) && leq(q, p) && !(p == q)) return d = "antisymmetry", false;
          if (!leq(m, p) || !leq(m, q) || !leq(p, j) || !leq(q, j)) return d = "bounds", false;
          if (!(join(p, meet(p, q)) == p) || !(meet(p, join(p, q)) == p)) return d = "absorption", false;
          for (const auto& r : set) {
            if (leq(p, q) && leq(q, r) && !leq(p, r)) return d = "transitivity", false;
            if (leq(p, r) && leq(q, r) && !leq(j, r)) return d = "join is not least", false;
            if (leq(r, p) && leq(r, q) && !leq(r, m)) return d = "meet is not greatest", false;
          }
        }
      }
      d = std::to_string(set.size()) + " triangles";
      return true;
    });
  }
  run_check(out, "GOGAm triangles are not join/meet closed (pinned witness)", [&](std::string& d) {
    const auto pair = parse_text_stream(fixture("gogam_lattice_witness.txt"));
    if (pair.size() != 2) return d = "witness fixture must hold two triangles", false;
    const Pattern& p = pair[0];
    const Pattern& q = pair[1];
    const bool join_out = !gogam::is_triangle(join(p, q));
    const bool meet_out = !gogam::is_triangle(meet(p, q));
    d = std::string(join_out ? "join" : "") + (join_out && meet_out ? " and " : "") +
        (meet_out ? "meet" : "") + (join_out && meet_out ? " leave" : " leaves") + " the family";
    return gogam::is_triangle(p) && gogam::is_triangle(q) && (join_out || meet_out);
  });
  return out;
}

std::vector<CheckResult> replacement(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const int top = std::min(opt.n_max, 5);
  for (int n = 1; n <= top; ++n) {
    const auto set = enumerate({Family::gogam, Shape::triangle(n)}, search_options(opt));
    run_check(out, "ones above the cut keep GOGAm n=" + std::to_string(n), [&](std::string& d) {
      for (const auto& x : set)
        for (int k = 1; k <= n; ++k) {
          const Pattern y = gogam::clear_upper_left(x, k);
          if (!gogam::is_triangle(y) || !lhs_never_increases(x, y)) {
            d = counterexample("cut k=" + std::to_string(k) + " fails on", x);
            return false;
          }
        }
      d = std::to_string(set.size()) + " triangles";
      return true;
    });
    run_check(out, "diagonal propagation keeps GOGAm n=" + std::to_string(n), [&](std::string& d) {
      std::size_t applied = 0;
      for (const auto& x : set)
        for (int m = 1; m <= n; ++m)
          for (int k = 1; k <= m; ++k) {
            const auto y = gogam::propagate_diagonal(x, m, k);
            if (!y) continue;
            ++applied;
            if (!gogam::is_triangle(*y) || !lhs_never_increases(x, *y)) {
              d = counterexample("m=" + std::to_string(m) + " k=" + std::to_string(k) + " fails on", x);
              return false;
            }
          }
      d = std::to_string(applied) + " replacements";
      return true;
    });
  }
  return out;
}

std::vector<CheckResult> standard_procedure_suite(const SuiteOptions& opt, int permutation_n) {
  std::vector<CheckResult> out;
  const int top = std::min(opt.n_max, 5);
  for (int n = 1; n <= top; ++n) {
    run_check(out, "procedure on left Gog completions, all k, n=" + std::to_string(n), [&](std::string& d) {
      std::size_t checked = 0;
      for (int k = 1; k <= n; ++k)
        for (const auto& t : enumerate({Family::gog, Shape::left(n, k)}, search_options(opt))) {
          if (!left_completion_invariance(t)) {
            d = counterexample("invariance fails on", t);
            return false;
          }
          ++checked;
        }
      d = std::to_string(checked) + " trapezoids";
      return true;
    });
  }
  for (int n = 1; n <= permutation_n; ++n) {
    run_check(out, "procedure on permutation Gog triangles n=" + std::to_string(n), [&](std::string& d) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      std::size_t checked = 0;
      do {
        const Pattern p = gog_from_asm(AsmMatrix::from_permutation(perm));
        const auto res = standard_procedure(p, n);
        if (!res.gt_valid || !gogam::is_triangle(res.pattern)) {
          d = counterexample("result is not a GOGAm triangle for", p);
          return false;
        }
        ++checked;
      } while (std::next_permutation(perm.begin(), perm.end()));
      d = std::to_string(checked) + " permutations";
      return true;
    });
  }
  return out;
}

}  // namespace gtp::verify
