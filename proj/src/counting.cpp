#include "medge/counting.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "medge/enumerate.hpp"
#include "medge/series.hpp"

namespace medge {

namespace {

std::mutex g_sequence_mutex;
std::vector<BigInt>& sequence_cache() {
  static std::vector<BigInt> cache;
  return cache;
}

void extend_sequence(long n_max) {
  auto& cache = sequence_cache();
  if (cache.empty()) cache.push_back(1);
  if (static_cast<long>(cache.size()) > n_max) return;
  if (cache.size() == 1) cache.push_back(1);
  for (long n = static_cast<long>(cache.size()); n <= n_max; ++n) {
    BigInt conv = 0;
    for (long i = 0; i < n; ++i) {
      conv += cache[static_cast<std::size_t>(i)] *
              cache[static_cast<std::size_t>(n - 1 - i)];
    }
    cache.push_back(cache.back() + conv);
  }
}

std::mutex g_row_mutex;

const BigInt& row_at(const std::vector<BigInt>& row, long k) {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<long>(row.size())) return zero;
  return row[static_cast<std::size_t>(k)];
}

void check_nonneg(long v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

BigInt a_n(long n) {
  check_nonneg(n, "n");
  std::lock_guard<std::mutex> lock(g_sequence_mutex);
  extend_sequence(n);
  return sequence_cache()[static_cast<std::size_t>(n)];
}

std::vector<BigInt> a_sequence(long n_max) {
  check_nonneg(n_max, "n_max");
  std::lock_guard<std::mutex> lock(g_sequence_mutex);
  extend_sequence(n_max);
  const auto& cache = sequence_cache();
  return {cache.begin(), cache.begin() + n_max + 1};
}

const std::vector<BigInt>& trinomial_row(long n) {
  check_nonneg(n, "n");
  std::lock_guard<std::mutex> lock(g_row_mutex);
  static std::map<long, std::unique_ptr<const std::vector<BigInt>>> rows;
  auto it = rows.find(n);
  if (it == rows.end()) {
    std::vector<BigInt> row{1};
    for (long step = 0; step < n; ++step) {
      std::vector<BigInt> next(row.size() + 2);
      for (std::size_t i = 0; i < row.size(); ++i) {
        next[i] += row[i];
        next[i + 1] += 3 * row[i];
        next[i + 2] += row[i];
      }
      row = std::move(next);
    }
    it = rows.emplace(n, std::make_unique<const std::vector<BigInt>>(
                             std::move(row)))
             .first;
  }
  return *it->second;
}

BigInt trinomial_131(long n, long k) {
  check_nonneg(n, "n");
  if (k < 0 || k > 2 * n) return 0;
  return row_at(trinomial_row(n), k);
}

BigInt count_height_gt(long n, long h) {
  check_nonneg(n, "n");
  check_nonneg(h, "h");
  if (n == 0) return 0;  // the isolated vertex has height 0
  const auto& row = trinomial_row(n - 1);
  BigInt total = 0;
  for (long k = 0;; ++k) {
    const long j = n - (h + 1) - (h + 2) * k;
    if (j < 0) break;
    total += row_at(row, j) - 2 * row_at(row, j - 2) + row_at(row, j - 4);
  }
  return total;
}

BigInt count_height_eq(long n, long h) {
  check_nonneg(n, "n");
  check_nonneg(h, "h");
  if (h == 0) return n == 0 ? 1 : 0;
  return count_height_gt(n, h - 1) - count_height_gt(n, h);
}

BigInt HeightCountTable::total() const {
  BigInt sum = count_gt.empty() ? BigInt(0) : count_gt.back();
  for (const auto& c : count_eq) sum += c;
  return sum;
}

HeightCountTable height_table_formula(long n) {
  check_nonneg(n, "n");
  HeightCountTable table;
  table.n = n;
  table.count_gt.resize(static_cast<std::size_t>(n) + 1);
  table.count_eq.resize(static_cast<std::size_t>(n) + 1);
  for (long h = 0; h <= n; ++h) {
    table.count_gt[static_cast<std::size_t>(h)] = count_height_gt(n, h);
  }
  table.count_eq[0] = n == 0 ? 1 : 0;
  for (long h = 1; h <= n; ++h) {
    table.count_eq[static_cast<std::size_t>(h)] =
        table.count_gt[static_cast<std::size_t>(h - 1)] -
        table.count_gt[static_cast<std::size_t>(h)];
  }
  return table;
}

namespace {

std::vector<HeightCountTable> tables_from_eq_rows(
    long n_max, long h_max,
    const std::vector<std::vector<BigInt>>& eq_by_n) {
  std::vector<HeightCountTable> tables(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    auto& t = tables[static_cast<std::size_t>(n)];
    t.n = n;
    t.count_eq = eq_by_n[static_cast<std::size_t>(n)];
    t.count_gt.assign(static_cast<std::size_t>(h_max) + 1, 0);
    // No tree of size n is taller than n, so the tail vanishes once the
    // rows reach h = n; otherwise it is whatever the rows do not cover.
    BigInt tail = 0;
    if (h_max < n) {
      BigInt covered = 0;
      for (const auto& c : t.count_eq) covered += c;
      tail = a_n(n) - covered;
    }
    for (long h = h_max; h >= 0; --h) {
      t.count_gt[static_cast<std::size_t>(h)] = tail;
      tail += t.count_eq[static_cast<std::size_t>(h)];
    }
  }
  return tables;
}

std::filesystem::path cache_file(const std::string& cache_dir, long n_max,
                                 long h_max) {
  return std::filesystem::path(cache_dir) /
         ("height_series_n" + std::to_string(n_max) + "_h" +
          std::to_string(h_max) + ".txt");
}

std::optional<std::vector<std::vector<BigInt>>> load_eq_rows(
    const std::filesystem::path& file, long n_max, long h_max) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string tag;
  long fn = -1, fh = -1;
  in >> tag >> fn >> fh;
  if (tag != "medge-height-series-v1" || fn != n_max || fh != h_max) {
    return std::nullopt;
  }
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n_max) + 1);
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(h_max) + 1);
    for (auto& value : row) {
      std::string digits;
      if (!(in >> digits)) return std::nullopt;
      try {
        value = BigInt(digits);
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    }
  }
  return rows;
}

void store_eq_rows(const std::filesystem::path& file, long n_max, long h_max,
                   const std::vector<std::vector<BigInt>>& rows) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ofstream out(file);
  if (!out) return;  // cache is best-effort
  out << "medge-height-series-v1 " << n_max << ' ' << h_max << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << row[i] << (i + 1 == row.size() ? '\n' : ' ');
    }
  }
}

}  // namespace

std::vector<HeightCountTable> height_tables_series(long n_max, long h_max,
                                                   const std::string&
                                                       cache_dir) {
  check_nonneg(n_max, "n_max");
  check_nonneg(h_max, "h_max");

  if (!cache_dir.empty()) {
    if (auto rows = load_eq_rows(cache_file(cache_dir, n_max, h_max), n_max,
                                 h_max)) {
      return tables_from_eq_rows(n_max, h_max, *rows);
    }
  }

  const int order = static_cast<int>(n_max);
  const TruncatedSeries one_minus_z =
      TruncatedSeries::constant(order, 1) -
      TruncatedSeries::monomial(order, 1, 1);

  // eq rows: eq_by_n[n][h] = [z^n](T_h - T_{h-1}); T_{-1} taken as 0.
  std::vector<std::vector<BigInt>> eq_by_n(
      static_cast<std::size_t>(n_max) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(h_max) + 1));

  TruncatedSeries previous = TruncatedSeries::constant(order, 1);  // T_0
  for (long n = 0; n <= n_max; ++n) {
    eq_by_n[static_cast<std::size_t>(n)][0] = previous.coeff(static_cast<int>(n));
  }
  for (long h = 1; h <= h_max; ++h) {
    const TruncatedSeries denom = one_minus_z - previous.shift(1);
    TruncatedSeries current = one_minus_z * denom.reciprocal();
    for (long n = 0; n <= n_max; ++n) {
      eq_by_n[static_cast<std::size_t>(n)][static_cast<std::size_t>(h)] =
          current.coeff(static_cast<int>(n)) -
          previous.coeff(static_cast<int>(n));
    }
    previous = std::move(current);
  }

  if (!cache_dir.empty()) {
    store_eq_rows(cache_file(cache_dir, n_max, h_max), n_max, h_max, eq_by_n);
  }
  return tables_from_eq_rows(n_max, h_max, eq_by_n);
}

HeightCountTable height_table_brute(long n, int ceiling) {
  check_nonneg(n, "n");
  HeightCountTable table;
  table.n = n;
  table.count_eq.assign(static_cast<std::size_t>(n) + 1, 0);
  table.count_gt.assign(static_cast<std::size_t>(n) + 1, 0);
  enumerate_multi_edge(
      static_cast<int>(n),
      [&](const MultiEdgeTree& t) {
        const long h = stats(t).height;
        table.count_eq[static_cast<std::size_t>(h)] += 1;
      },
      ceiling);
  BigInt tail = 0;  // no tree of size n has height > n
  for (long h = n; h >= 0; --h) {
    table.count_gt[static_cast<std::size_t>(h)] = tail;
    tail += table.count_eq[static_cast<std::size_t>(h)];
  }
  return table;
}

BigInt count_vertices_eq(long n, long k) {
  check_nonneg(n, "n");
  if (n == 0) return k == 1 ? 1 : 0;
  if (k < 2 || k > n + 1) return 0;
  const BigInt numerator = binomial(2 * k - 2, k - 1) * binomial(n - 1, k - 2);
  return divide_exact(numerator, k);
}

VertexCountTable vertex_table(long n) {
  check_nonneg(n, "n");
  VertexCountTable table;
  table.n = n;
  table.count.resize(static_cast<std::size_t>(n) + 2);
  for (long k = 0; k <= n + 1; ++k) {
    table.count[static_cast<std::size_t>(k)] = count_vertices_eq(n, k);
  }
  return table;
}

BigInt fuss_catalan(long d, long n) {
  if (d < 1 || n < 1) throw std::invalid_argument("fuss_catalan needs d,n >= 1");
  return divide_exact(binomial(n * d, n - 1), n);
}

BigRational expected_height_exact(long n) {
  check_nonneg(n, "n");
  if (n == 0) return BigRational(0);
  BigInt numerator = 0;
  for (long h = 0; h < n; ++h) {
    numerator += count_height_gt(n, h);
  }
  BigRational result(numerator, a_n(n));
  result.canonicalize();
  return result;
}

std::pair<BigRational, BigRational> vertex_moments_exact(long n) {
  check_nonneg(n, "n");
  BigInt total = a_n(n);
  BigInt first = 0, second = 0;
  for (long k = 0; k <= n + 1; ++k) {
    const BigInt c = count_vertices_eq(n, k);
    first += k * c;
    second += k * k * c;
  }
  BigRational mean(first, total);
  mean.canonicalize();
  BigRational m2(second, total);
  m2.canonicalize();
  BigRational variance = m2 - mean * mean;
  variance.canonicalize();
  return {mean, variance};
}

void write_bfile(std::ostream& os, const std::vector<BigInt>& seq, long n0) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    os << n0 + static_cast<long>(i) << ' ' << seq[i] << '\n';
  }
}

void write_csv(std::ostream& os, const HeightCountTable& table) {
  os << "h,count_eq,count_gt\n";
  for (long h = 0; h <= table.h_max(); ++h) {
    os << h << ',' << table.count_eq[static_cast<std::size_t>(h)] << ','
       << table.count_gt[static_cast<std::size_t>(h)] << '\n';
  }
}

void write_csv(std::ostream& os, const VertexCountTable& table) {
  os << "k,count\n";
  for (std::size_t k = 0; k < table.count.size(); ++k) {
    os << k << ',' << table.count[k] << '\n';
  }
}

}  // namespace medge
