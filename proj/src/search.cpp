#include "gtp/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

#include "gtp/error.hpp"
#include "gtp/gog.hpp"
#include "gtp/gogam.hpp"

namespace gtp {

std::string family_name(Family f) { return f == Family::gog ? "gog" : "gogam"; }

Family parse_family(const std::string& name) {
  if (name == "gog") return Family::gog;
  if (name == "gogam") return Family::gogam;
  throw ParseError("unknown family '" + name + "'");
}

std::string to_string(const FamilySpec& spec) {
  return family_name(spec.family) + " " + header(spec.shape);
}

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json shape;
  shape["kind"] = kind_name(r.spec.shape.kind());
  shape["n"] = r.spec.shape.n();
  const auto kind = r.spec.shape.kind();
  if (kind == ShapeKind::left || kind == ShapeKind::rectangle) shape["k"] = r.spec.shape.left_width();
  if (kind == ShapeKind::right || kind == ShapeKind::rectangle) shape["l"] = r.spec.shape.right_width();
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [v, c] : r.by_bottom_entry) hist[std::to_string(v)] = c;
  return {{"family", family_name(r.spec.family)},
          {"shape", shape},
          {"total", r.total},
          {"by_bottom_entry", hist}};
}

bool is_member(const FamilySpec& spec, const Pattern& p) {
  if (!(p.shape() == spec.shape)) return false;
  switch (spec.shape.kind()) {
    case ShapeKind::triangle:
      return spec.family == Family::gog ? gog::is_triangle(p) : gogam::is_triangle(p);
    case ShapeKind::left:
      return spec.family == Family::gog ? gog::is_left_trapezoid(p) : gogam::is_left_trapezoid(p);
    case ShapeKind::right:
      return spec.family == Family::gog ? gog::is_right_trapezoid(p) : gogam::is_right_trapezoid(p);
    case ShapeKind::rectangle:
      return spec.family == Family::gog ? gog::is_rectangle(p) : gogam::is_rectangle(p);
  }
  return false;
}

unsigned default_threads() {
  if (const char* env = std::getenv("GOGAM_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct CellRule {
  bool copy = false;  // value forced to the NE neighbour X_{i+1,j+1}
  int lo = 1;
  int hi = 1;
};

struct Plan {
  FamilySpec spec;
  Shape grid;
  std::vector<CellRule> rules;  // indexed by grid.index
  bool strict_rows = false;
  bool inequality_levels = false;
};

Plan make_plan(const FamilySpec& spec) {
  const Shape& s = spec.shape;
  const int n = s.n();
  const int k = s.left_width();
  const int l = s.right_width();
  if (spec.family == Family::gog) {
    Plan plan{spec, Shape::left(n, k), {}, true, false};
    plan.rules.resize(plan.grid.size());
    for (const Cell& c : plan.grid.cells()) {
      auto& r = plan.rules[plan.grid.index(c.i, c.j)];
      r.lo = c.j;
      r.hi = c.i - c.j >= l ? c.j : n - c.i + c.j;
    }
    return plan;
  }
  Plan plan{spec, Shape::triangle(n), {}, false, true};
  plan.rules.resize(plan.grid.size());
  for (const Cell& c : plan.grid.cells()) {
    auto& r = plan.rules[plan.grid.index(c.i, c.j)];
    r.copy = c.i < n && c.j >= k;
    r.lo = 1;
    r.hi = (c.j <= k && c.i - c.j >= l) ? 1 : n;
  }
  return plan;
}

using LeafSink = std::function<void(const std::vector<int>&)>;

class Walker {
 public:
  Walker(const Plan& plan, std::vector<int> start) : plan_(plan), g_(plan.grid), x_(std::move(start)) {
    x_.resize(g_.size(), 0);
  }

  // Enumerates assignments of the top row only.
  void top_rows(const LeafSink& sink) {
    sink_ = &sink;
    stop_after_top_ = true;
    cell(g_.n(), g_.row_first(g_.n()));
  }

  // Continues from a complete top row held in the start vector.
  void finish_from_top(const LeafSink& sink) {
    sink_ = &sink;
    stop_after_top_ = false;
    finish_row(g_.n());
  }

 private:
  int& at(int i, int j) { return x_[g_.index(i, j)]; }

  void cell(int i, int j) {
    if (j > g_.row_last(i)) {
      if (stop_after_top_) {
        (*sink_)(x_);
        return;
      }
      finish_row(i);
      return;
    }
    const CellRule& rule = plan_.rules[g_.index(i, j)];
    int lo = rule.lo;
    int hi = rule.hi;
    if (g_.contains(i + 1, j)) lo = std::max(lo, at(i + 1, j));
    if (g_.contains(i + 1, j + 1)) hi = std::min(hi, at(i + 1, j + 1));
    if (j > g_.row_first(i)) lo = std::max(lo, at(i, j - 1) + (plan_.strict_rows ? 1 : 0));
    if (rule.copy) {
      const int v = at(i + 1, j + 1);
      if (v < lo || v > hi) return;
      at(i, j) = v;
      cell(i, j + 1);
      return;
    }
    for (int v = lo; v <= hi; ++v) {
      at(i, j) = v;
      cell(i, j + 1);
    }
  }

  void finish_row(int i) {
    const int n = g_.n();
    if (plan_.inequality_levels && i < n) {
      const int level = n - i;
      auto get = [this](int a, int b) { return x_[g_.index(a, b)]; };
      if (gogam::detail::max_lhs_dp(get, n, level, nullptr) > level) return;
    }
    if (i == 1) {
      (*sink_)(x_);
      return;
    }
    cell(i - 1, g_.row_first(i - 1));
  }

  const Plan& plan_;
  const Shape& g_;
  std::vector<int> x_;
  const LeafSink* sink_ = nullptr;
  bool stop_after_top_ = false;
};

struct TaskResult {
  std::vector<Pattern> members;
  std::uint64_t total = 0;
  std::map<int, std::uint64_t> hist;
};

void check_against_brute(const Pattern& triangle) {
  for (int k = 1; k <= triangle.n() - 1; ++k) {
    const auto fast = gogam::max_lhs(triangle, k);
    const auto slow = gogam::max_lhs_brute(triangle, k);
    if (fast.value != slow.value || !(fast.witness == slow.witness))
      throw std::logic_error("optimized inequality evaluator disagrees with brute force");
  }
}

std::vector<TaskResult> run(const FamilySpec& spec, const SearchOptions& opt, bool keep) {
  const Plan plan = make_plan(spec);
  std::vector<std::vector<int>> tops;
  {
    Walker w(plan, {});
    LeafSink collect = [&](const std::vector<int>& x) { tops.push_back(x); };
    w.top_rows(collect);
  }
  std::vector<TaskResult> results(tops.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (std::size_t t = next++; t < tops.size(); t = next++) {
      TaskResult& res = results[t];
      std::mt19937_64 rng(opt.seed ^ (0x2545f4914f6cdd1dULL * (t + 1)));
      std::bernoulli_distribution sample(std::clamp(opt.oracle_sample_rate, 0.0, 1.0));
      LeafSink sink = [&](const std::vector<int>& x) {
        Pattern grid_pattern(plan.grid, x);
        Pattern member = restrict_to(grid_pattern, spec.shape);
        if (!is_member(spec, member))
          throw std::logic_error("search produced a non-member: " + to_string(spec));
        if (spec.family == Family::gogam && sample(rng)) check_against_brute(grid_pattern);
        ++res.total;
        ++res.hist[member(1, 1)];
        if (keep) res.members.push_back(std::move(member));
      };
      Walker w(plan, tops[t]);
      w.finish_from_top(sink);
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, tops.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          worker();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = tops.size();
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  return results;
}

}  // namespace

std::vector<Pattern> enumerate(const FamilySpec& spec, const SearchOptions& options) {
  std::vector<Pattern> out;
  for (auto& r : run(spec, options, true))
    for (auto& p : r.members) out.push_back(std::move(p));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

CountReport count(const FamilySpec& spec, const SearchOptions& options) {
  CountReport report{spec, 0, {}};
  for (const auto& r : run(spec, options, false)) {
    report.total += r.total;
    for (const auto& [v, c] : r.hist) report.by_bottom_entry[v] += c;
  }
  return report;
}

}  // namespace gtp
