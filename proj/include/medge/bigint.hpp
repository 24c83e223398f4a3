#pragma once

#include <gmpxx.h>

#include <string>

namespace medge {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Binomial coefficient C(n, k); out-of-range indices (k < 0, k > n, n < 0)
/// give 0.
BigInt binomial(long n, long k);

/// a / b, throwing std::logic_error if the division leaves a remainder.
BigInt divide_exact(const BigInt& a, const BigInt& b);

double to_double(const BigRational& q);

/// Natural log of a positive big integer, accurate to double precision even
/// when the value itself overflows double range.
double log_bigint(const BigInt& v);

}  // namespace medge
