#include "qhex/qseries.hpp"

#include "qhex/errors.hpp"

namespace qhex {

namespace {

// 1 - s q^e as a canonical polynomial (zero when s = +1 and e = 0).
LaurentPoly one_minus_monomial(int sign, std::int64_t e) {
    return LaurentPoly::from_terms({{0, BigRational(1)}, {e, BigRational(-sign)}});
}

}  // namespace

LaurentPoly qpoch(MonomialArg a, std::int64_t base_exponent, std::int64_t n) {
    if (base_exponent < 1) throw std::invalid_argument("qpoch base exponent must be >= 1");
    if (n < 0) throw std::invalid_argument("qpoch requires n >= 0");
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("monomial sign must be +-1");
    LaurentPoly prod = LaurentPoly::one();
    for (std::int64_t j = 0; j < n; ++j) {
        prod = prod * one_minus_monomial(a.sign, exp_add(a.exponent, exp_mul(j, base_exponent)));
        if (prod.is_zero()) break;
    }
    return prod;
}

RationalFn qpoch_neg(MonomialArg a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("qpoch_neg requires n >= 1");
    if (a.sign != 1 && a.sign != -1) throw std::invalid_argument("monomial sign must be +-1");
    // Denominator (a q^{-1}; q^{-1})_n = prod_{j=0}^{n-1} (1 - a q^{-1-j}).
    LaurentPoly den = LaurentPoly::one();
    for (std::int64_t j = 0; j < n; ++j) {
        std::int64_t e = exp_sub(a.exponent, exp_add(1, j));
        if (a.sign == 1 && e == 0)
            throw ZeroDenominator("negative-index symbol has an identically zero factor");
        den = den * one_minus_monomial(a.sign, e);
    }
    return RationalFn(LaurentPoly::one(), den);
}

LaurentPoly weight(std::int64_t label) {
    if (label == 0) return LaurentPoly::one();
    BigRational half(1, 2);
    return LaurentPoly::from_terms({{label, half}, {-label, half}});
}

LaurentPoly weight_product(std::span<const std::int64_t> labels) {
    LaurentPoly prod = LaurentPoly::one();
    for (std::int64_t l : labels) prod = prod * weight(l);
    return prod;
}

}  // namespace qhex
