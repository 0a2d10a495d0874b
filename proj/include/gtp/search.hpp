#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtp/pattern.hpp"

namespace gtp {

enum class Family { gog, gogam };

std::string family_name(Family f);
Family parse_family(const std::string& name);

struct FamilySpec {
  Family family;
  Shape shape;
};

std::string to_string(const FamilySpec& spec);

struct CountReport {
  FamilySpec spec;
  std::uint64_t total = 0;
  // X_{1,1} value -> number of members
  std::map<int, std::uint64_t> by_bottom_entry;
};

nlohmann::json to_json(const CountReport& r);

struct SearchOptions {
  unsigned threads = 1;
  // Seeds the sample of GOGAm leaves re-checked by the brute-force evaluator.
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  double oracle_sample_rate = 0.01;
};

// Family predicate on a pattern of spec.shape (completion based).
bool is_member(const FamilySpec& spec, const Pattern& p);

/// Every member of the family exactly once, sorted lexicographically by the
/// row-major entry list.
///
/// The search fills the canonical completion row by row from the top. Gog
/// shapes run on the left (n,k) array with strict rows, the bounds
/// j <= X_{i,j} <= n-i+j and X_{i,j} = j above the rectangle cut. GOGAm shapes
/// run on the full triangle with entries in [1,n], ones above the cut, cells
/// right of column k copied from their NE neighbour, and each completed row i
/// closing the inequality level n-i. Leaves are re-checked with is_member.
std::vector<Pattern> enumerate(const FamilySpec& spec, const SearchOptions& options = {});

CountReport count(const FamilySpec& spec, const SearchOptions& options = {});

// Worker count from GOGAM_THREADS, else hardware concurrency (at least 1).
unsigned default_threads();

}  // namespace gtp
