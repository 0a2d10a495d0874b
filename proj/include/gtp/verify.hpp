#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtp/search.hpp"

// Verification suites over the golden fixtures and exhaustive sets.
namespace gtp::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  // Counts compared, or the first counterexample in text form.
  std::string details;
  double seconds = 0.0;
};

nlohmann::json to_json(const CheckResult& r);
std::string to_line(const CheckResult& r);
bool all_passed(const std::vector<CheckResult>& results);

struct SuiteOptions {
  int n_max = 6;
  std::uint64_t seed = 20240917;
  unsigned threads = 1;
};

// Worked examples, completions, procedure output and the (7,2) trace, byte for byte.
std::vector<CheckResult> reference_examples();

// (n,1) Gog and GOGAm counts against Catalan numbers; both sets coincide
// with {X_{j,1} <= n-j+1}.
std::vector<CheckResult> catalan(const SuiteOptions& opt);

// (n,2) maps: image lands in the target family, both compositions are the
// identity, X_{1,1} and the first-column inversion count are kept, the
// forward image is below its input and every trace step meets the induction
// invariants. Also the (n,2,l) rectangle maps through canonical completions,
// n <= min(n_max, 6).
std::vector<CheckResult> roundtrip(const SuiteOptions& opt);

// Gog vs GOGAm totals and X_{1,1} histograms: triangles, right and left
// trapezoids, rectangles; left vs right Gog through the mirror map.
std::vector<CheckResult> equienumeration(const SuiteOptions& opt);

// X_{1,1} preservation by the (n,1)/(n,2) maps and left histogram equality.
std::vector<CheckResult> statistic(const SuiteOptions& opt);

// Optimized max-LHS against literal enumeration: every Gog and GOGAm
// triangle up to `exhaustive_n`, plus `samples_per_n` random GT triangles
// (entries in [1,n]) for each n <= `random_n`.
std::vector<CheckResult> gogam_oracle(const SuiteOptions& opt, int exhaustive_n = 5,
                                      int random_n = 7, int samples_per_n = 10000);

// Gog join/meet closure; pinned GOGAm non-closure witness; partial order laws.
std::vector<CheckResult> lattice(const SuiteOptions& opt);

// Replacement closures for GOGAm triangles (ones above a cut, constant
// diagonal propagation) and the per-sequence non-increase of the LHS.
std::vector<CheckResult> replacement(const SuiteOptions& opt);

// Procedure on canonical completions of left Gog trapezoids, and on
// permutation Gog triangles (result must be GOGAm).
std::vector<CheckResult> standard_procedure_suite(const SuiteOptions& opt, int permutation_n = 6);

// Random GT triangle of size n with entries in [1, max_entry], rows top first.
// Not uniform over GT triangles: each row is drawn inside the interlacing
// window of the row above.
template <class Rng>
std::vector<std::vector<int>> random_gt_rows(int n, int max_entry, Rng& rng) {
  std::vector<std::vector<int>> rows(n);
  std::uniform_int_distribution<int> top(1, max_entry);
  rows[0].resize(n);
  for (auto& v : rows[0]) v = top(rng);
  std::sort(rows[0].begin(), rows[0].end());
  for (int r = 1; r < n; ++r) {
    const auto& above = rows[r - 1];
    auto& row = rows[r];
    row.resize(n - r);
    for (int j = 0; j < n - r; ++j) {
      std::uniform_int_distribution<int> pick(above[j], above[j + 1]);
      row[j] = pick(rng);
    }
  }
  return rows;
}

}  // namespace gtp::verify
