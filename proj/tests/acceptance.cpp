// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "gtp/search.hpp"
#include "gtp/verify.hpp"
#include "naive.hpp"

using namespace gtp;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::string details;
};

// Folds suite results into one outcome, keeping the failing lines.
void absorb(Outcome& out, const std::vector<verify::CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) {
      out.passed = false;
      out.details += verify::to_line(r) + "\n";
    }
}

bool criterion(const std::string& id, const std::string& title, double budget_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.passed = false;
    o.details = std::string("exception: ") + e.what() + "\n";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_seconds) {
    o.passed = false;
    o.details += "over budget: " + std::to_string(secs) + " s > " + std::to_string(budget_seconds) + " s\n";
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.passed ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << secs << " s, budget "
       << budget_seconds << " s)";
  std::cout << line.str() << "\n" << o.details << std::flush;
  return o.passed;
}

verify::SuiteOptions options(int n_max) {
  verify::SuiteOptions opt;
  opt.n_max = n_max;
  opt.threads = default_threads();
  return opt;
}

}  // namespace

int main() {
  bool ok = true;

  ok &= criterion("AC1", "worked examples, completions, procedure, inversions and the (7,2) trace", 1.0, [] {
    Outcome o;
    absorb(o, verify::reference_examples());
    return o;
  });

  ok &= criterion("AC2", "(n,1) counts are Catalan for n = 1..7 in both families", 10.0, [] {
    Outcome o;
    absorb(o, verify::catalan(options(7)));
    const std::uint64_t want[] = {1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 7; ++n)
      for (Family f : {Family::gog, Family::gogam}) {
        const auto got = count({f, Shape::left(n, 1)}).total;
        if (got != want[n - 1]) {
          o.passed = false;
          o.details += family_name(f) + " n=" + std::to_string(n) + ": " + std::to_string(got) + "\n";
        }
      }
    return o;
  });

  ok &= criterion("AC3", "(n,2) maps are mutually inverse bijections for n <= 8", 300.0, [] {
    Outcome o;
    absorb(o, verify::roundtrip(options(8)));
    return o;
  });

  ok &= criterion("AC4", "equienumeration: right, left, rectangles, mirror, n <= 6", 600.0, [] {
    Outcome o;
    absorb(o, verify::equienumeration(options(6)));
    return o;
  });

  ok &= criterion("AC5", "optimized max LHS equals enumeration", 60.0, [] {
    Outcome o;
    absorb(o, verify::gogam_oracle(options(5), 5, 7, 10000));
    return o;
  });

  ok &= criterion("AC6", "replacement closure n <= 5, Gog lattice n <= 4, GOGAm non-closure witness", 60.0, [] {
    Outcome o;
    absorb(o, verify::replacement(options(5)));
    absorb(o, verify::lattice(options(4)));
    return o;
  });

  ok &= criterion("AC7", "standard procedure on left Gog completions and permutation triangles", 60.0, [] {
    Outcome o;
    absorb(o, verify::standard_procedure_suite(options(5), 6));
    return o;
  });

  ok &= criterion("AC8", "pruned enumeration equals generate-and-filter; triangle totals", 300.0, [] {
    Outcome o;
    SearchOptions so;
    so.threads = default_threads();
    auto compare = [&](const FamilySpec& spec, const std::vector<Pattern>& want) {
      const auto got = enumerate(spec, so);
      if (got != want) {
        o.passed = false;
        o.details += to_string(spec) + ": " + std::to_string(got.size()) + " vs naive " +
                     std::to_string(want.size()) + "\n";
      }
    };
    for (int n = 1; n <= 6; ++n) {
      const auto& tri = naive::triangles(n);
      compare({Family::gog, Shape::triangle(n)}, tri.gog);
      compare({Family::gogam, Shape::triangle(n)}, tri.gogam);
      for (Family f : {Family::gog, Family::gogam})
        for (int k = 1; k <= n; ++k) {
          compare({f, Shape::left(n, k)}, naive::family({f, Shape::left(n, k)}));
          compare({f, Shape::right(n, k)}, naive::family({f, Shape::right(n, k)}));
          for (int l = 1; k + l <= n + 1; ++l)
            compare({f, Shape::rectangle(n, k, l)}, naive::family({f, Shape::rectangle(n, k, l)}));
        }
    }
    const std::uint64_t want[] = {1, 2, 7, 42, 429, 7436};
    for (int n = 1; n <= 6; ++n)
      for (Family f : {Family::gog, Family::gogam}) {
        const auto got = count({f, Shape::triangle(n)}, so).total;
        if (got != want[n - 1]) {
          o.passed = false;
          o.details += family_name(f) + " triangles n=" + std::to_string(n) + ": " + std::to_string(got) + "\n";
        }
      }
    return o;
  });

  std::cout << (ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: some criteria FAILED") << "\n";
  return ok ? 0 : 1;
}
