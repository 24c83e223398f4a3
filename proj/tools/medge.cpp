// Command-line front end: exact counting, height tables, vertex tables, the
// d-ary bijection, uniform sampling, and the asymptotic validation harness.
// Machine-readable output goes to stdout; diagnostics go to stderr. The
// MEDGE_CACHE_DIR environment variable, when set, holds memoized series
// tables.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "medge/asymptotics.hpp"
#include "medge/bigint.hpp"
#include "medge/bijection.hpp"
#include "medge/counting.hpp"
#include "medge/enumerate.hpp"
#include "medge/sampler.hpp"
#include "medge/tree.hpp"
#include "medge/validate.hpp"

namespace {

std::string cache_dir_from_env() {
  const char* dir = std::getenv("MEDGE_CACHE_DIR");
  return dir ? dir : "";
}

int run_count(long n_max, const std::string& format) {
  const auto seq = medge::a_sequence(n_max);
  if (format == "bfile") {
    medge::write_bfile(std::cout, seq);
  } else if (format == "csv") {
    std::cout << "n,a_n\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
      std::cout << i << ',' << seq[i] << '\n';
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < seq.size(); ++i) {
      rows.push_back({{"n", i}, {"a", seq[i].get_str()}});
    }
    std::cout << rows.dump(2) << '\n';
  }
  return 0;
}

int run_height_table(long n, const std::string& method, long h_max) {
  medge::HeightCountTable table;
  if (method == "formula") {
    table = medge::height_table_formula(n);
  } else if (method == "series") {
    auto tables = medge::height_tables_series(n, h_max < 0 ? n : h_max,
                                              cache_dir_from_env());
    table = tables.back();
  } else {
    table = medge::height_table_brute(n, medge::kOracleCeiling);
  }
  // Identical rows regardless of method: h = 0 only for the single vertex,
  // otherwise 1..n.
  std::cout << "h,count\n";
  if (n == 0) {
    std::cout << "0," << table.count_eq[0] << '\n';
    return 0;
  }
  for (long h = 1; h <= n && h <= table.h_max(); ++h) {
    std::cout << h << ',' << table.count_eq[static_cast<std::size_t>(h)]
              << '\n';
  }
  return 0;
}

int run_vertices(long n, const std::string& format) {
  const auto table = medge::vertex_table(n);
  if (format == "csv") {
    std::cout << "k,count\n";
    for (std::size_t k = 0; k < table.count.size(); ++k) {
      if (table.count[k] == 0) continue;
      std::cout << k << ',' << table.count[k] << '\n';
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t k = 0; k < table.count.size(); ++k) {
      if (table.count[k] == 0) continue;
      rows.push_back({{"k", k}, {"count", table.count[k].get_str()}});
    }
    std::cout << rows.dump(2) << '\n';
  }
  return 0;
}

int run_bijection(int bound, std::string text, bool inverse,
                  const std::string& format) {
  if (text.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
      text.pop_back();
    }
  }
  std::string image_text;
  medge::TreeStats input_stats, image_stats;
  if (!inverse) {
    medge::DAryMultiEdgeTree input{bound, medge::parse_tree(text)};
    const medge::DAryTree image = medge::to_dary(input);
    input_stats = medge::stats(input);
    image_stats = medge::stats(image);
    image_text = medge::format_dary(image.root);
  } else {
    medge::DAryTree input{bound, medge::parse_dary(text)};
    if (!medge::is_valid(input)) {
      throw std::invalid_argument("input is not a valid d-ary tree");
    }
    const medge::DAryMultiEdgeTree image = medge::from_dary(input);
    input_stats = medge::stats(input);
    image_stats = medge::stats(image);
    image_text = medge::format_tree(image.tree);
  }
  if (format == "text") {
    std::cout << image_text << '\n';
    std::cout << "input:  " << medge::stats_json(input_stats) << '\n';
    std::cout << "image:  " << medge::stats_json(image_stats) << '\n';
  } else {
    nlohmann::json j{
        {"image", image_text},
        {"input_stats", nlohmann::json::parse(medge::stats_json(input_stats))},
        {"image_stats", nlohmann::json::parse(medge::stats_json(image_stats))},
    };
    std::cout << j.dump(2) << '\n';
  }
  const bool preserved = input_stats.height == image_stats.height &&
                         input_stats.vertices == image_stats.vertices &&
                         input_stats.leaves == image_stats.leaves &&
                         input_stats.children_histogram ==
                             image_stats.children_histogram;
  if (!preserved) {
    std::cerr << "statistics not preserved; the input violates an invariant\n";
    return 1;
  }
  return 0;
}

int run_sample(long n, long count, std::uint64_t seed,
               const std::string& histogram) {
  medge::Sampler rng(seed);
  std::map<long, long> buckets;
  for (long i = 0; i < count; ++i) {
    const medge::MultiEdgeTree tree = medge::sample_tree(n, rng);
    if (histogram == "none") {
      std::cout << medge::format_tree(tree) << '\n';
    } else {
      const medge::TreeStats s = medge::stats(tree);
      buckets[histogram == "height" ? s.height : s.vertices] += 1;
    }
  }
  if (histogram != "none") {
    std::cout << (histogram == "height" ? "height,count\n" : "vertices,count\n");
    for (const auto& [value, freq] : buckets) {
      std::cout << value << ',' << freq << '\n';
    }
  }
  return 0;
}

int run_validate(const std::string& claim, const std::vector<long>& grid,
                 const std::string& format) {
  std::vector<std::string> names;
  if (claim == "all") {
    names = medge::claim_names();
  } else {
    names.push_back(claim);
  }
  bool all_pass = true;
  std::vector<medge::ValidationReport> reports;
  for (const auto& name : names) {
    reports.push_back(medge::validate_claim(name, grid));
    std::cerr << (reports.back().pass ? "PASS " : "FAIL ") << name << '\n';
    all_pass = all_pass && reports.back().pass;
  }
  if (format == "json") {
    medge::write_json(std::cout, reports);
  } else {
    medge::write_csv(std::cout, reports);
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration, sampling and asymptotic validation of "
               "plane multi-edge trees"};
  app.require_subcommand(1);

  // count
  long count_n_max = 0;
  std::string count_format = "bfile";
  auto* count = app.add_subcommand("count", "Print A_0..A_n");
  count->add_option("--n-max", count_n_max, "Largest size n")
      ->required()
      ->check(CLI::NonNegativeNumber);
  count->add_option("--format", count_format, "bfile, csv or json")
      ->check(CLI::IsMember({"bfile", "csv", "json"}));

  // height-table
  long ht_n = 0;
  long ht_h_max = -1;
  std::string ht_method = "formula";
  auto* height_table =
      app.add_subcommand("height-table", "Exact per-height counts at size n");
  height_table->add_option("--n", ht_n, "Tree size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  height_table
      ->add_option("--method", ht_method,
                   "formula, series or brute (brute obeys the oracle ceiling)")
      ->check(CLI::IsMember({"formula", "series", "brute"}));
  height_table->add_option("--h-max", ht_h_max,
                           "Height cutoff for the series method (default n)");

  // vertices
  long vt_n = 0;
  std::string vt_format = "csv";
  auto* vertices =
      app.add_subcommand("vertices", "Exact per-vertex-count table at size n");
  vertices->add_option("--n", vt_n, "Tree size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  vertices->add_option("--format", vt_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // bijection
  int bj_bound = 0;
  std::string bj_tree;
  std::string bj_format = "text";
  bool bj_inverse = false;
  auto* bijection = app.add_subcommand(
      "bijection", "Map a multi-edge tree to its d-ary image (or back)");
  bijection->add_option("--d", bj_bound, "Degree bound")
      ->required()
      ->check(CLI::PositiveNumber);
  bijection->add_option("--tree", bj_tree,
                        "Canonical tree text (stdin when omitted)");
  bijection->add_flag("--inverse", bj_inverse,
                      "Read a d-ary tree and print its multi-edge preimage");
  bijection->add_option("--format", bj_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // sample
  long sp_n = 0;
  long sp_count = 1;
  std::uint64_t sp_seed = 0;
  std::string sp_histogram = "none";
  auto* sample =
      app.add_subcommand("sample", "Uniform random multi-edge trees of size n");
  sample->add_option("--n", sp_n, "Tree size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sample->add_option("--count", sp_count, "Number of draws")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", sp_seed, "RNG seed (required, no silent entropy)")
      ->required();
  sample
      ->add_option("--histogram", sp_histogram,
                   "Aggregate into a height or vertices histogram")
      ->check(CLI::IsMember({"none", "height", "vertices"}));

  // validate
  std::string vd_claim = "all";
  std::vector<long> vd_grid;
  std::string vd_format = "json";
  auto* validate = app.add_subcommand(
      "validate", "Run exact-vs-asymptotic validation claims");
  validate->add_option("--claim", vd_claim, "Claim name or 'all'");
  validate->add_option("--grid", vd_grid,
                       "n grid for claims that take one (comma separated)")
      ->delimiter(',');
  validate->add_option("--format", vd_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return run_count(count_n_max, count_format);
    if (height_table->parsed()) return run_height_table(ht_n, ht_method, ht_h_max);
    if (vertices->parsed()) return run_vertices(vt_n, vt_format);
    if (bijection->parsed()) {
      return run_bijection(bj_bound, bj_tree, bj_inverse, bj_format);
    }
    if (sample->parsed()) return run_sample(sp_n, sp_count, sp_seed, sp_histogram);
    if (validate->parsed()) {
      if (vd_claim != "all") {
        const auto names = medge::claim_names();
        if (std::find(names.begin(), names.end(), vd_claim) == names.end()) {
          std::cerr << "unknown claim '" << vd_claim << "'; known:";
          for (const auto& name : names) std::cerr << ' ' << name;
          std::cerr << '\n';
          return 2;
        }
      }
      return run_validate(vd_claim, vd_grid, vd_format);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
