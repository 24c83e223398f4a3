#include "medge/series.hpp"

#include <stdexcept>
#include <utility>

namespace medge {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series order mismatch: " +
                                std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

int checked_order(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  return order;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order)
    : coeffs_(static_cast<std::size_t>(checked_order(order)) + 1) {}

TruncatedSeries::TruncatedSeries(int order, std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  checked_order(order);
  if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
    throw std::invalid_argument("more coefficients than the order allows");
  }
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, BigInt c0) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(c0);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int degree,
                                          BigInt coeff) {
  TruncatedSeries s(order);
  if (degree < 0) throw std::invalid_argument("monomial degree must be >= 0");
  if (degree <= order) s.coeffs_[degree] = std::move(coeff);
  return s;
}

const BigInt& TruncatedSeries::coeff(int i) const {
  if (i < 0 || i > order()) {
    throw std::out_of_range("coefficient index " + std::to_string(i) +
                            " outside 0.." + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
  }
  return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
  require_same_order(*this, rhs);
  TruncatedSeries out(order());
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scalar_mul(const BigInt& c) const {
  TruncatedSeries out(order());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i] * c;
  }
  return out;
}

TruncatedSeries TruncatedSeries::shift(int k) const {
  if (k < 0) throw std::invalid_argument("shift must be >= 0");
  TruncatedSeries out(order());
  for (std::size_t i = static_cast<std::size_t>(k); i < coeffs_.size(); ++i) {
    out.coeffs_[i] = coeffs_[i - static_cast<std::size_t>(k)];
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const BigInt& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1) {
    throw std::domain_error(
        "reciprocal requires a unit constant term (+1 or -1)");
  }
  // b_0 = 1/c_0 = c_0; b_n = -c_0 * sum_{i=1..n} c_i b_{n-i}.
  TruncatedSeries out(order());
  out.coeffs_[0] = c0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    BigInt acc = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (coeffs_[i] == 0) continue;
      acc += coeffs_[i] * out.coeffs_[n - i];
    }
    out.coeffs_[n] = -c0 * acc;
  }
  return out;
}

}  // namespace medge
