#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "qhex/errors.hpp"

namespace qhex {

/// Exact rational coefficient. Canonical form is maintained by GMP:
/// denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
using BigRational = mpq_class;
using BigInt = mpz_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den) {
    return make_rational(BigInt(num), BigInt(den));
}

/// 1 / 2^n for n >= 0, 2^{-n} for n < 0.
inline BigRational pow2_rational(long long n) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
    return n >= 0 ? BigRational(p) : BigRational(1, p);
}

// Checked exponent arithmetic. Exponents are int64 throughout; anything that
// would wrap is a hard error.
inline std::int64_t exp_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ExponentOverflow("exponent addition overflow");
    return r;
}

inline std::int64_t exp_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ExponentOverflow("exponent subtraction overflow");
    return r;
}

inline std::int64_t exp_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ExponentOverflow("exponent multiplication overflow");
    return r;
}

}  // namespace qhex
