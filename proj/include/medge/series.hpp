#pragma once

#include <vector>

#include "medge/bigint.hpp"

namespace medge {

/// Formal power series with exact integer coefficients, truncated at a fixed
/// order N. All arithmetic is exact for every coefficient up to order N.
/// Values are immutable once built; operations return new series.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);

  /// Series from explicit coefficients c_0..c_N (shorter vectors are
  /// zero-padded up to the order).
  TruncatedSeries(int order, std::vector<BigInt> coeffs);

  static TruncatedSeries constant(int order, BigInt c0);
  /// coeff * z^degree.
  static TruncatedSeries monomial(int order, int degree, BigInt coeff);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& coeff(int i) const;

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  /// Cauchy product, truncated at the common order.
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  TruncatedSeries scalar_mul(const BigInt& c) const;

  /// Multiplication by z^k (coefficients shift up, the tail truncates).
  TruncatedSeries shift(int k) const;

  /// Multiplicative inverse via the O(N^2) recurrence. Requires a unit
  /// constant term (c_0 = +-1); throws std::domain_error otherwise.
  TruncatedSeries reciprocal() const;

  bool operator==(const TruncatedSeries& rhs) const {
    return coeffs_ == rhs.coeffs_;
  }

 private:
  std::vector<BigInt> coeffs_;  // index = degree, size = order + 1
};

inline TruncatedSeries operator*(const BigInt& c, const TruncatedSeries& s) {
  return s.scalar_mul(c);
}

}  // namespace medge
