// gogam: enumerate, count, map, complete and check Gog / GOGAm patterns.
//
// Exit codes: 0 success, 1 membership or check failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gtp/bijection.hpp"
#include "gtp/error.hpp"
#include "gtp/gog.hpp"
#include "gtp/gogam.hpp"
#include "gtp/io.hpp"
#include "gtp/search.hpp"
#include "gtp/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeFlags {
  std::string family = "gog";
  std::string shape = "triangle";
  int n = 0;
  std::optional<int> k;
  std::optional<int> l;
};

void add_shape_flags(CLI::App* cmd, ShapeFlags& f) {
  cmd->add_option("--family", f.family, "gog or gogam")->check(CLI::IsMember({"gog", "gogam"}));
  cmd->add_option("--shape", f.shape, "triangle, left, right or rect")
      ->check(CLI::IsMember({"triangle", "left", "right", "rect", "rectangle"}));
  cmd->add_option("--n", f.n, "size")->required();
  cmd->add_option("--k", f.k, "left width (left, rect)");
  cmd->add_option("--l", f.l, "right width (right, rect)");
}

gtp::FamilySpec make_spec(const ShapeFlags& f) {
  using gtp::Shape;
  auto need = [](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
  };
  const auto family = gtp::parse_family(f.family);
  switch (gtp::parse_kind(f.shape)) {
    case gtp::ShapeKind::triangle:
      return {family, Shape::triangle(f.n)};
    case gtp::ShapeKind::left:
      return {family, Shape::left(f.n, need(f.k, "--k"))};
    case gtp::ShapeKind::right:
      return {family, Shape::right(f.n, need(f.l, "--l"))};
    case gtp::ShapeKind::rectangle:
      return {family, Shape::rectangle(f.n, need(f.k, "--k"), need(f.l, "--l"))};
  }
  throw UsageError("unknown shape");
}

gtp::Pattern read_input(const std::string& file) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw UsageError("cannot open " + file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return gtp::parse_text(text);
}

int cmd_enumerate(const ShapeFlags& f, const std::string& format) {
  gtp::SearchOptions opt;
  opt.threads = gtp::default_threads();
  const auto members = gtp::enumerate(make_spec(f), opt);
  bool first = true;
  for (const auto& p : members) {
    if (format == "json") {
      std::cout << gtp::to_json(p).dump() << "\n";
    } else {
      if (!first) std::cout << "\n";
      std::cout << gtp::to_text(p);
    }
    first = false;
  }
  return kOk;
}

int cmd_count(const ShapeFlags& f, bool by_bottom, const std::string& format) {
  gtp::SearchOptions opt;
  opt.threads = gtp::default_threads();
  const auto report = gtp::count(make_spec(f), opt);
  if (format == "json") {
    std::cout << gtp::to_json(report).dump() << "\n";
    return kOk;
  }
  std::cout << report.total << "\n";
  if (by_bottom)
    for (const auto& [v, c] : report.by_bottom_entry) std::cout << "X11=" << v << " " << c << "\n";
  return kOk;
}

int cmd_map(const std::string& direction, std::optional<int> k, bool trace, const std::string& file) {
  const gtp::Pattern input = read_input(file);
  if (input.shape().kind() != gtp::ShapeKind::left)
    throw UsageError("map expects a left trapezoid, got '" + gtp::header(input.shape()) + "'");
  if (k && *k != input.shape().left_width())
    throw UsageError("--k does not match the input width " + std::to_string(input.shape().left_width()));
  const int width = input.shape().left_width();
  if (width > 2) throw UsageError("map supports widths 1 and 2 only");
  const bool forward = direction == "gog-to-gogam";
  if (forward && !gtp::gog::is_left_trapezoid(input)) {
    std::cerr << "input is not a left Gog trapezoid\n";
    return kFailure;
  }
  if (!forward && !gtp::gogam::is_left_trapezoid(input)) {
    std::cerr << "input is not a left GOGAm trapezoid\n";
    return kFailure;
  }
  const auto res = forward ? gtp::gog_to_gogam_left(input) : gtp::gogam_to_gog_left(input);
  std::cout << gtp::to_text(res.image);
  if (trace && !res.trace.steps.empty()) std::cout << "\n" << gtp::dump_trace(res.trace);
  return kOk;
}

int cmd_complete(const std::string& family, const std::string& side, const std::string& file) {
  const gtp::Pattern input = read_input(file);
  const auto kind = input.shape().kind();
  const bool want_left = side == "left";
  if ((want_left && kind != gtp::ShapeKind::left) || (!want_left && kind != gtp::ShapeKind::right))
    throw UsageError("--side " + side + " does not match '" + gtp::header(input.shape()) + "'");
  const bool gog = family == "gog";
  try {
    const gtp::Pattern out = gog ? (want_left ? gtp::gog::complete_left(input) : gtp::gog::complete_right(input))
                                 : (want_left ? gtp::gogam::complete_left(input)
                                              : gtp::gogam::complete_right(input));
    const bool ok = gog ? gtp::gog::is_triangle(out) : gtp::gogam::is_triangle(out);
    if (!ok) {
      std::cerr << "input is not a " << side << " " << family << " trapezoid\n";
      return kFailure;
    }
    std::cout << gtp::to_text(out);
  } catch (const gtp::InvalidInput& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

std::vector<gtp::verify::CheckResult> run_suite(const std::string& suite, gtp::verify::SuiteOptions opt,
                                                bool n_max_given) {
  namespace v = gtp::verify;
  if (suite == "examples" || suite == "paper-examples") return v::reference_examples();
  if (suite == "catalan") {
    if (!n_max_given) opt.n_max = 7;
    return v::catalan(opt);
  }
  if (suite == "roundtrip") {
    if (!n_max_given) opt.n_max = 8;
    return v::roundtrip(opt);
  }
  if (suite == "equienumeration") return v::equienumeration(opt);
  if (suite == "statistic") return v::statistic(opt);
  if (suite == "gogam-oracle") return v::gogam_oracle(opt);
  if (suite == "lattice") return v::lattice(opt);
  if (suite == "replacement") return v::replacement(opt);
  if (suite == "standard-procedure") return v::standard_procedure_suite(opt);
  if (suite == "all") {
    std::vector<v::CheckResult> all;
    for (const char* s : {"examples", "catalan", "roundtrip", "equienumeration", "statistic", "gogam-oracle",
                          "lattice", "replacement", "standard-procedure"}) {
      auto part = run_suite(s, opt, n_max_given);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw UsageError("unknown check '" + suite + "'");
}

int cmd_check(const std::string& suite, std::optional<int> n_max, std::uint64_t seed, const std::string& format) {
  gtp::verify::SuiteOptions opt;
  if (n_max) {
    if (*n_max < 1 || *n_max > 9) throw UsageError("--n-max must be in [1, 9]");
    opt.n_max = *n_max;
  }
  opt.seed = seed;
  opt.threads = gtp::default_threads();
  const auto results = run_suite(suite, opt, n_max.has_value());
  for (const auto& r : results) {
    if (format == "json")
      std::cout << gtp::verify::to_json(r).dump() << "\n";
    else
      std::cout << gtp::verify::to_line(r) << "\n";
  }
  const bool ok = gtp::verify::all_passed(results);
  if (format != "json")
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << " (" << results.size() << ")\n";
  return ok ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gog and GOGAm triangles and trapezoids"};
  app.require_subcommand(1);

  ShapeFlags enum_flags;
  std::string enum_format = "text";
  auto* enumerate = app.add_subcommand("enumerate", "print every member of a family");
  add_shape_flags(enumerate, enum_flags);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"text", "json"}));

  ShapeFlags count_flags;
  std::string count_format = "text";
  bool by_bottom = false;
  auto* count = app.add_subcommand("count", "count the members of a family");
  add_shape_flags(count, count_flags);
  count->add_flag("--by-bottom", by_bottom, "histogram of X11");
  count->add_option("--format", count_format)->check(CLI::IsMember({"text", "json"}));

  std::string direction = "gog-to-gogam";
  std::optional<int> map_k;
  bool trace = false;
  std::string map_file;
  auto* map = app.add_subcommand("map", "apply the (n,1)/(n,2) left trapezoid bijection");
  map->add_option("--direction", direction)->check(CLI::IsMember({"gog-to-gogam", "gogam-to-gog"}));
  map->add_option("--k", map_k)->check(CLI::Range(1, 2));
  map->add_flag("--trace", trace, "print the intermediate patterns");
  map->add_option("--file", map_file, "input file (default stdin)");

  std::string complete_family = "gog";
  std::string side = "left";
  std::string complete_file;
  auto* complete = app.add_subcommand("complete", "canonical triangle of a trapezoid");
  complete->add_option("--family", complete_family)->check(CLI::IsMember({"gog", "gogam"}));
  complete->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  complete->add_option("--file", complete_file, "input file (default stdin)");

  std::string suite;
  std::optional<int> n_max;
  std::uint64_t seed = gtp::verify::SuiteOptions{}.seed;
  std::string check_format = "text";
  auto* check = app.add_subcommand("check", "run a verification suite");
  check->add_option("suite", suite,
                    "examples | paper-examples | catalan | equienumeration | roundtrip | statistic | "
                    "gogam-oracle | lattice | replacement | standard-procedure | all")
      ->required();
  check->add_option("--n-max", n_max, "largest n (default 6, roundtrip 8, catalan 7)");
  check->add_option("--seed", seed, "seed of the random oracle sample");
  check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(enum_flags, enum_format);
    if (*count) return cmd_count(count_flags, by_bottom, count_format);
    if (*map) return cmd_map(direction, map_k, trace, map_file);
    if (*complete) return cmd_complete(complete_family, side, complete_file);
    if (*check) return cmd_check(suite, n_max, seed, check_format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gtp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const gtp::InvalidShape& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const gtp::MalformedPattern& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const gtp::InvalidInput& e) {
    std::cerr << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
