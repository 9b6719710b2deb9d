#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhex/rational.hpp"

namespace qhex {

/// Sparse univariate Laurent polynomial in q over BigRational.
///
/// Canonical form: terms sorted by ascending exponent, no zero coefficients,
/// exponents pairwise distinct. Values are immutable after construction and
/// all operations are pure, so instances may be shared freely across threads.
class LaurentPoly {
  public:
    struct Term {
        std::int64_t exp;
        BigRational coeff;
    };

    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(BigRational(1), 0); }
    static LaurentPoly monomial(const BigRational& coeff, std::int64_t exp);
    /// Canonicalizes an arbitrary term list (merges exponents, drops zeros).
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t min_exp() const;  // requires !is_zero()
    std::int64_t max_exp() const;  // requires !is_zero()
    const BigRational* coeff_at(std::int64_t exp) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& r) const;
    LaurentPoly operator-(const LaurentPoly& r) const;
    LaurentPoly operator*(const LaurentPoly& r) const;
    LaurentPoly scaled(const BigRational& c) const;
    LaurentPoly pow(std::uint64_t n) const;

    bool operator==(const LaurentPoly& r) const;
    bool operator!=(const LaurentPoly& r) const { return !(*this == r); }

    /// q -> q^t for t >= 1: multiplies every exponent by t.
    LaurentPoly substitute_power(std::int64_t t) const;

    /// Exact evaluation at a rational point. x must be nonzero when a
    /// negative exponent is present.
    BigRational eval(const BigRational& x) const;

    std::string to_string() const;

  private:
    std::vector<Term> terms_;
};

/// Exact quotient a / b; throws InexactDivision when b does not divide a.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical JSON: {"var":"q","terms":[{"exp":E,"num":"N","den":"D"},...]},
/// terms ascending by exp, num/den decimal strings, den > 0, gcd-reduced,
/// no zero terms. serialize(parse(s)) == s for every canonical s.
std::string to_canonical_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace qhex
