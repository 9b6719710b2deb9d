#pragma once

#include "qhex/laurent.hpp"

namespace qhex {

/// Quotient of two Laurent polynomials. No reduced form is maintained;
/// equality is cross-multiplication.
struct RationalFn {
    LaurentPoly num;
    LaurentPoly den;

    RationalFn() : num(LaurentPoly::zero()), den(LaurentPoly::one()) {}
    RationalFn(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
    }

    static RationalFn from_poly(LaurentPoly p) { return RationalFn(std::move(p), LaurentPoly::one()); }

    RationalFn operator*(const RationalFn& r) const { return RationalFn(num * r.num, den * r.den); }
    RationalFn operator*(const LaurentPoly& p) const { return RationalFn(num * p, den); }
};

/// f = g by cross-multiplication: f.num * g.den == g.num * f.den.
inline bool rf_eq(const RationalFn& f, const RationalFn& g) {
    return f.num * g.den == g.num * f.den;
}

inline bool rf_eq(const RationalFn& f, const LaurentPoly& p) {
    return rf_eq(f, RationalFn::from_poly(p));
}

}  // namespace qhex
