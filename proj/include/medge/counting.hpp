#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medge/bigint.hpp"

namespace medge {

/// Number of plane rooted multi-edge trees with n edges
/// (1, 1, 3, 10, 36, 137, ...). Computed from the convolution recurrence of
/// the quadratic functional equation z*T^2 - (1-z)*T + (1-z) = 0:
///   A_0 = A_1 = 1,  A_n = A_{n-1} + sum_{i=0}^{n-1} A_i A_{n-1-i}.
BigInt a_n(long n);

/// A_0..A_{n_max}.
std::vector<BigInt> a_sequence(long n_max);

/// Weighted trinomial coefficient [v^k](1+3v+v^2)^n; 0 for k < 0 or k > 2n.
BigInt trinomial_131(long n, long k);

/// Full coefficient row of (1+3v+v^2)^n (indices 0..2n). Rows are cached;
/// the returned reference stays valid for the process lifetime.
const std::vector<BigInt>& trinomial_row(long n);

/// Number of trees of size n with height > h, by the closed trinomial sum
///   sum_{k>=0} [ T(n-1; j) - 2 T(n-1; j-2) + T(n-1; j-4) ],
///   j = n-(h+1)-(h+2)k,
/// where the sum stops once j < 0.
BigInt count_height_gt(long n, long h);

/// Number of trees of size n with height exactly h.
BigInt count_height_eq(long n, long h);

/// Exact height distribution of trees of size n: count_eq[h] and
/// count_gt[h] for h = 0..h_max.
struct HeightCountTable {
  long n = 0;
  std::vector<BigInt> count_eq;
  std::vector<BigInt> count_gt;

  long h_max() const { return static_cast<long>(count_eq.size()) - 1; }
  /// Trees accounted for: sum of count_eq plus the tail beyond h_max.
  BigInt total() const;

  friend bool operator==(const HeightCountTable&,
                         const HeightCountTable&) = default;
};

/// Table from the closed trinomial formula, rows h = 0..n.
HeightCountTable height_table_formula(long n);

/// Tables for every n <= n_max from the truncated-series recurrence
/// T_h = (1-z) / (1-z - z*T_{h-1}), T_0 = 1, rows h = 0..h_max.
/// count_gt is the reverse cumulative sum of the rows, so the result is
/// derived from the series route alone. When `cache_dir` is nonempty, a
/// previously stored result for the same (n_max, h_max) is reused and fresh
/// results are persisted there.
std::vector<HeightCountTable> height_tables_series(
    long n_max, long h_max, const std::string& cache_dir = "");

/// Table by exhaustive enumeration (subject to the oracle ceiling).
HeightCountTable height_table_brute(long n, int ceiling);

/// Exact vertex-count distribution for trees of size n: count[k] for
/// k = 0..n+1.
struct VertexCountTable {
  long n = 0;
  std::vector<BigInt> count;

  friend bool operator==(const VertexCountTable&,
                         const VertexCountTable&) = default;
};

/// Number of trees of size n with exactly k vertices:
/// (1/k) C(2k-2, k-1) C(n-1, k-2). Nonzero only for (n=0, k=1) -- the
/// isolated vertex -- and for n >= 1, 2 <= k <= n+1.
BigInt count_vertices_eq(long n, long k);

VertexCountTable vertex_table(long n);

/// Fuss-Catalan number (1/n) C(nd, n-1): d-ary trees with n vertices.
BigInt fuss_catalan(long d, long n);

/// E(H_n) = sum_{h>=0} count_height_gt(n, h) / A_n, exact.
BigRational expected_height_exact(long n);

/// Exact (mean, variance) of the vertex count of a random tree of size n.
std::pair<BigRational, BigRational> vertex_moments_exact(long n);

/// OEIS b-file lines: "n a(n)\n" for n = n0, n0+1, ...
void write_bfile(std::ostream& os, const std::vector<BigInt>& seq,
                 long n0 = 0);

/// CSV with header "h,count_eq,count_gt".
void write_csv(std::ostream& os, const HeightCountTable& table);
/// CSV with header "k,count".
void write_csv(std::ostream& os, const VertexCountTable& table);

}  // namespace medge
