#include "medge/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace medge {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt divide_exact(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return q;
}

double to_double(const BigRational& q) { return q.get_d(); }

double log_bigint(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log_bigint: value must be positive");
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

}  // namespace medge
