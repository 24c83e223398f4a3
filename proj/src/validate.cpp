#include "medge/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "medge/asymptotics.hpp"
#include "medge/bigint.hpp"
#include "medge/counting.hpp"
#include "medge/enumerate.hpp"
#include "medge/sampler.hpp"

namespace medge {

namespace {

constexpr double kPi = 3.14159265358979323846;

double abs_err(const ValidationRow& row) {
  return std::abs(row.exact - row.approx);
}

double rel_err(const ValidationRow& row) {
  const double scale = std::abs(row.exact);
  return scale > 0.0 ? abs_err(row) / scale : abs_err(row);
}

std::string format_note(const std::string& label, double value) {
  std::ostringstream os;
  os << label << " = " << value;
  return os.str();
}

ValidationReport claim_sequence(std::vector<long> grid) {
  if (grid.empty()) grid = {9, 50, 100, 200, 400};
  ValidationReport report;
  report.claim = "sequence";
  std::vector<double> deviations;
  bool in_band = true;
  for (long n : grid) {
    const double exact_log = log_bigint(a_n(n));
    const double asym_log = a_n_asym_log(n);
    report.rows.push_back({n, "log A_n", exact_log, asym_log});
    const double ratio = std::exp(exact_log - asym_log);
    deviations.push_back(std::abs(1.0 - ratio));
    in_band = in_band && ratio > 0.8 && ratio < 1.2;
    report.notes.push_back(format_note(
        "exact/asymptotic ratio at n=" + std::to_string(n), ratio));
  }
  bool shrinking = true;
  for (std::size_t i = 1; i < deviations.size(); ++i) {
    shrinking = shrinking && deviations[i] <= deviations[i - 1];
  }
  report.pass = in_band && shrinking;
  report.notes.push_back("pass = every ratio in (0.8, 1.2) and |1 - ratio| "
                         "non-increasing along the grid");
  return report;
}

ValidationReport claim_expected_height(std::vector<long> grid) {
  if (grid.empty()) grid = {100, 200, 400};
  ValidationReport report;
  report.claim = "expected-height";
  std::vector<double> scaled, raw;
  for (long n : grid) {
    const double exact = to_double(expected_height_exact(n));
    const double asym = expected_height_asym(n);
    report.rows.push_back({n, "E(H_n)", exact, asym});
    raw.push_back(std::abs(exact - asym));
    scaled.push_back(raw.back() * std::sqrt(static_cast<double>(n)));
    report.notes.push_back(format_note(
        "scaled error |E - asym|*sqrt(n) at n=" + std::to_string(n),
        scaled.back()));
  }
  const double bound = 1.0;
  bool bounded = true;
  for (double s : scaled) bounded = bounded && s <= bound;
  // The scaled error settles onto its limiting constant from below, so the
  // trend comparison carries a 0.1% slack; the raw error must still shrink.
  bool trend = true, raw_decreasing = true;
  for (std::size_t i = 1; i < scaled.size(); ++i) {
    trend = trend && scaled[i] <= scaled[i - 1] * 1.001;
    raw_decreasing = raw_decreasing && raw[i] < raw[i - 1];
  }
  report.pass = bounded && trend && raw_decreasing;
  report.notes.push_back(
      "pass = scaled error <= 1.0, non-increasing within 0.1% slack, and "
      "raw error strictly decreasing");
  if (!scaled.empty()) {
    report.notes.push_back(format_note(
        "reported constant (max scaled error)",
        *std::max_element(scaled.begin(), scaled.end())));
  }
  return report;
}

ValidationReport claim_poisson(const std::vector<long>&) {
  ValidationReport report;
  report.claim = "poisson";
  report.notes.push_back("grid ignored: alpha values are pinned");
  const double alphas[] = {0.5, 1.0, 1.5, 2.0, 3.0};
  bool ok = true;
  for (double alpha : alphas) {
    const double primal = g_alpha(alpha, GForm::primal);
    const double dual = g_alpha(alpha, GForm::dual);
    std::ostringstream name;
    name << "G(" << alpha << ") primal vs dual";
    report.rows.push_back({0, name.str(), primal, dual});
    const double tol =
        1e-12 * std::max({1.0, std::abs(primal), std::abs(dual)});
    ok = ok && std::abs(primal - dual) <= tol;
  }
  report.pass = ok;
  report.notes.push_back(
      "pass = |primal - dual| <= 1e-12 * max(1, |primal|, |dual|); the "
      "absolute floor matters near alpha = 0.5 where G itself is ~3e-13");
  return report;
}

ValidationReport claim_height_llt(std::vector<long> grid) {
  if (grid.empty()) grid = {500};
  const long n = grid.front();
  ValidationReport report;
  report.claim = "height-llt";

  const HeightCountTable table = height_table_formula(n);
  const BigInt total = a_n(n);
  std::vector<double> prob(static_cast<std::size_t>(n) + 1, 0.0);
  for (long h = 0; h <= n; ++h) {
    BigRational p(table.count_eq[static_cast<std::size_t>(h)], total);
    p.canonicalize();
    prob[static_cast<std::size_t>(h)] = to_double(p);
  }
  long mode = 0;
  double mean = 0.0, second = 0.0;
  for (long h = 0; h <= n; ++h) {
    if (prob[static_cast<std::size_t>(h)] >
        prob[static_cast<std::size_t>(mode)]) {
      mode = h;
    }
    mean += h * prob[static_cast<std::size_t>(h)];
    second += static_cast<double>(h) * h * prob[static_cast<std::size_t>(h)];
  }
  const double sigma = std::sqrt(second - mean * mean);
  const long lo = std::max<long>(1, static_cast<long>(std::ceil(mode - sigma)));
  const long hi = std::min<long>(n, static_cast<long>(std::floor(mode + sigma)));

  double worst = 0.0, worst_shifted = 0.0;
  long worst_h = lo;
  for (long h = lo; h <= hi; ++h) {
    const double density = llt_density_multi(n, static_cast<double>(h));
    const double exact = prob[static_cast<std::size_t>(h)];
    report.rows.push_back({h, "P(H=h)", exact, density});
    const double rel = std::abs(density - exact) / exact;
    if (rel > worst) {
      worst = rel;
      worst_h = h;
    }
    const double shifted = llt_density_multi(n, static_cast<double>(h + 1));
    worst_shifted =
        std::max(worst_shifted, std::abs(shifted - exact) / exact);
  }

  double density_sum = 0.0;
  for (long h = 1; h <= 20 * n; ++h) {
    const double term = llt_density_multi(n, static_cast<double>(h));
    density_sum += term;
    if (h > mode && term < 1e-18) break;
  }

  report.pass = worst < 0.05 && std::abs(density_sum - 1.0) <= 0.01;
  report.notes.push_back(format_note("n", static_cast<double>(n)));
  report.notes.push_back(format_note("mode of exact distribution",
                                     static_cast<double>(mode)));
  report.notes.push_back(format_note("sigma of exact distribution", sigma));
  report.notes.push_back("window = [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "] (mode +- one sigma)");
  report.notes.push_back(format_note(
      "worst relative error in window (at h=" + std::to_string(worst_h) + ")",
      worst));
  report.notes.push_back(format_note("approximate density sum", density_sum));
  report.notes.push_back(format_note(
      "diagnostic: worst error comparing density(h+1) to P(H=h)",
      worst_shifted));
  report.notes.push_back(
      "pass = worst relative error < 5% in the window and density sum "
      "within 1% of 1");
  return report;
}

ValidationReport claim_vertex_stats(const std::vector<long>&) {
  ValidationReport report;
  report.claim = "vertex-stats";
  report.notes.push_back(
      "grid ignored: thresholds are pinned at n = 100 (moments) and "
      "n = 500 (local limit)");

  const auto [mean, variance] = vertex_moments_exact(100);
  const double mean_exact = to_double(mean);
  const double mean_asym = 4.0 * 100 / 5.0 + 9.0 / 10.0;
  const double var_exact = to_double(variance);
  const double var_asym = 4.0 * 100 / 25.0 + 2.0 / 25.0;
  report.rows.push_back({100, "E(V_n)", mean_exact, mean_asym});
  report.rows.push_back({100, "V(V_n)", var_exact, var_asym});

  const long n = 500;
  const long k = std::lround(4.0 * n / 5.0);
  BigRational p(count_vertices_eq(n, k), a_n(n));
  p.canonicalize();
  const double llt_exact = to_double(p);
  const double llt_approx = vertex_llt(n, static_cast<double>(k));
  report.rows.push_back({n, "P(V_n = 4n/5)", llt_exact, llt_approx});

  const bool mean_ok = std::abs(mean_exact - mean_asym) < 0.05;
  const bool var_ok = std::abs(var_exact - var_asym) < 0.1;
  const bool llt_ok = std::abs(llt_approx - llt_exact) / llt_exact < 0.02;
  report.pass = mean_ok && var_ok && llt_ok;
  report.notes.push_back(
      "pass = |mean - (4n/5 + 9/10)| < 0.05, |variance - (4n/25 + 2/25)| < "
      "0.1 at n=100, and local-limit density within 2% at k = 4n/5, n=500");
  return report;
}

ValidationReport claim_conformal(const std::vector<long>&) {
  ValidationReport report;
  report.claim = "conformal";
  report.notes.push_back("grid ignored: point count and radius are pinned");

  Sampler rng(0x5eedULL);
  const std::complex<double> pole(-(3.0 - std::sqrt(5.0)) / 2.0, 0.0);
  double worst_round_trip = 0.0;
  double worst_roots = 0.0;
  int points = 0;
  while (points < 200) {
    const double radius =
        0.9 * std::sqrt(static_cast<double>(rng.next_u64()) / 18446744073709551615.0);
    const double angle =
        2.0 * kPi * (static_cast<double>(rng.next_u64()) / 18446744073709551615.0);
    const std::complex<double> u = std::polar(radius, angle);
    if (std::abs(u - pole) < 0.01) continue;  // excluded point of the domain
    ++points;
    if (points <= 100) {
      worst_round_trip = std::max(worst_round_trip, std::abs(upsilon(zeta(u)) - u));
    }
    const ConformalPoint p = ConformalPoint::from_u(u);
    worst_roots = std::max(
        {worst_roots, std::abs(p.alpha + p.beta - (1.0 - p.z)),
         std::abs(p.alpha * p.beta - p.z * (1.0 - p.z))});
  }
  report.rows.push_back({0, "max |upsilon(zeta(u)) - u|", 0.0, worst_round_trip});
  report.rows.push_back({0, "max characteristic-root defect", 0.0, worst_roots});

  // Maclaurin coefficients of upsilon by a trapezoidal Cauchy integral on a
  // small circle; spectrally accurate, so machine precision scaled by r^-n.
  const double radius = 0.05;
  const int samples = 1024;
  bool coeffs_ok = true;
  for (long n = 1; n <= 6; ++n) {
    std::complex<double> acc(0.0, 0.0);
    for (int j = 0; j < samples; ++j) {
      const double angle = 2.0 * kPi * j / samples;
      const std::complex<double> z = std::polar(radius, angle);
      acc += upsilon(z) * std::polar(1.0, -angle * static_cast<double>(n));
    }
    const double coeff =
        (acc / static_cast<double>(samples)).real() / std::pow(radius, n);
    const double expected = mpz_get_d(a_n(n).get_mpz_t());
    report.rows.push_back({n, "Maclaurin coefficient of upsilon", expected,
                           coeff});
    coeffs_ok = coeffs_ok && std::abs(coeff - expected) < 1e-6;
  }

  report.pass = worst_round_trip < 1e-12 && worst_roots < 1e-12 && coeffs_ok;
  report.notes.push_back(
      "pass = round trip and root relations below 1e-12 on 100/200 random "
      "disk points (radius 0.9), coefficients within 1e-6 of A_1..A_6");
  return report;
}

ValidationReport claim_children(const std::vector<long>&) {
  ValidationReport report;
  report.claim = "children";
  report.notes.push_back("grid ignored: d values are pinned");

  bool sums_ok = true;
  for (int d = 2; d <= 10; ++d) {
    double sum = 0.0;
    for (int r = 0; r <= d; ++r) sum += children_proportion(d, r);
    report.rows.push_back({d, "sum_r proportion(d, r)", 1.0, sum});
    sums_ok = sums_ok && std::abs(sum - 1.0) < 1e-12;
  }

  const double limit = std::exp(-1.0);
  const double at50 = children_proportion(50, 0);
  report.rows.push_back({50, "leaf proportion limit", limit, at50});
  const bool limit_ok = std::abs(at50 - limit) < 0.01;

  // Exhaustive mean proportion of leaves over pruned binary trees with 10
  // vertices.
  long long trees = 0;
  long long leaves = 0;
  enumerate_dary(2, 10, [&](const DAryTree& t) {
    ++trees;
    leaves += stats(t).leaves;
  });
  const double proportion =
      static_cast<double>(leaves) / (10.0 * static_cast<double>(trees));
  report.rows.push_back({10, "mean leaf proportion, d=2", 0.25, proportion});
  const bool empirical_ok = std::abs(proportion - 0.25) < 0.05;

  report.pass = sums_ok && limit_ok && empirical_ok;
  report.notes.push_back(
      "pass = proportions sum to 1 (1e-12), d=50 leaf share within 0.01 of "
      "1/e, exhaustive d=2 n=10 leaf share within 0.05 of 1/4");
  return report;
}

ValidationReport claim_dary_height(const std::vector<long>&) {
  ValidationReport report;
  report.claim = "dary-height";
  report.notes.push_back("grid ignored: d = 2 with 12 vertices is pinned");

  const int d = 2;
  const int vertices = 12;
  long long trees = 0;
  long long height_sum = 0;
  enumerate_dary(
      d, vertices,
      [&](const DAryTree& t) {
        ++trees;
        height_sum += stats(t).height;
      },
      vertices);
  const double mean_exact =
      static_cast<double>(height_sum) / static_cast<double>(trees);
  const double mean_asym = avg_height_dary(d, vertices);
  report.rows.push_back({vertices, "mean height, d=2", mean_exact, mean_asym});

  double density_sum = 0.0;
  for (long h = 1; h <= 400; ++h) {
    density_sum += llt_density_dary(d, vertices, static_cast<double>(h));
  }
  report.rows.push_back({vertices, "density sum, d=2", 1.0, density_sum});

  const double rel = std::abs(mean_exact - mean_asym) / mean_asym;
  report.pass = rel <= 0.15;
  report.notes.push_back(format_note("exact mean height", mean_exact));
  report.notes.push_back(format_note("asymptotic sqrt(2 pi d n/(d-1))",
                                     mean_asym));
  report.notes.push_back(format_note("relative deviation", rel));
  report.notes.push_back(
      "pass = exhaustive mean height within 15% of the asymptotic value; "
      "12 vertices sit far below the asymptotic regime, so this check "
      "documents the measured gap rather than confirming the limit");
  return report;
}

}  // namespace

std::vector<std::string> claim_names() {
  return {"sequence",     "expected-height", "poisson",
          "height-llt",   "vertex-stats",    "conformal",
          "children",     "dary-height"};
}

ValidationReport validate_claim(const std::string& name,
                                const std::vector<long>& grid) {
  if (name == "sequence") return claim_sequence(grid);
  if (name == "expected-height") return claim_expected_height(grid);
  if (name == "poisson") return claim_poisson(grid);
  if (name == "height-llt") return claim_height_llt(grid);
  if (name == "vertex-stats") return claim_vertex_stats(grid);
  if (name == "conformal") return claim_conformal(grid);
  if (name == "children") return claim_children(grid);
  if (name == "dary-height") return claim_dary_height(grid);
  throw std::invalid_argument("unknown claim: " + name);
}

namespace {

nlohmann::json report_to_json(const ValidationReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"n", row.n},
                    {"quantity", row.quantity},
                    {"exact", row.exact},
                    {"approx", row.approx},
                    {"abs_err", abs_err(row)},
                    {"rel_err", rel_err(row)}});
  }
  return {{"claim", report.claim},
          {"pass", report.pass},
          {"rows", rows},
          {"notes", report.notes}};
}

void csv_body(std::ostream& os, const ValidationReport& report) {
  std::ostringstream value;
  value.precision(17);
  for (const auto& row : report.rows) {
    value.str("");
    value << report.claim << ",\"" << row.quantity << "\"," << row.n << ','
          << row.exact << ',' << row.approx << ',' << abs_err(row) << ','
          << rel_err(row);
    os << value.str() << '\n';
  }
  for (const auto& note : report.notes) {
    os << "# " << note << '\n';
  }
  os << "# pass: " << (report.pass ? "true" : "false") << '\n';
}

}  // namespace

void write_json(std::ostream& os, const ValidationReport& report) {
  os << report_to_json(report).dump(2) << '\n';
}

void write_csv(std::ostream& os, const ValidationReport& report) {
  os << "claim,quantity,n,exact,approx,abs_err,rel_err\n";
  csv_body(os, report);
}

void write_json(std::ostream& os,
                const std::vector<ValidationReport>& reports) {
  nlohmann::json array = nlohmann::json::array();
  for (const auto& report : reports) array.push_back(report_to_json(report));
  os << array.dump(2) << '\n';
}

void write_csv(std::ostream& os, const std::vector<ValidationReport>& reports) {
  os << "claim,quantity,n,exact,approx,abs_err,rel_err\n";
  for (const auto& report : reports) csv_body(os, report);
}

}  // namespace medge
