#pragma once

#include <cstdint>
#include <span>

#include "qhex/laurent.hpp"
#include "qhex/rational_fn.hpp"

namespace qhex {

/// Signed monomial +-q^exponent, the only argument shape the finite
/// products below ever need.
struct MonomialArg {
    int sign = +1;  // +1 or -1
    std::int64_t exponent = 0;

    static MonomialArg plus(std::int64_t e) { return {+1, e}; }
    static MonomialArg minus(std::int64_t e) { return {-1, e}; }
};

/// (a; q^base)_n = prod_{j=0}^{n-1} (1 - a q^{base j}), expanded exactly.
/// (a; .)_0 = 1. Requires base >= 1, n >= 0.
LaurentPoly qpoch(MonomialArg a, std::int64_t base_exponent, std::int64_t n);

/// Negative-index symbol for n >= 1: (a;q)_{-n} = 1 / (a q^{-1}; q^{-1})_n.
/// Throws ZeroDenominator when a factor of the denominator vanishes
/// identically (a = q^{j+1} for some 0 <= j < n).
RationalFn qpoch_neg(MonomialArg a, std::int64_t n);

/// Lozenge weight (q^l + q^{-l}) / 2; symmetric in the sign of the label.
LaurentPoly weight(std::int64_t label);

/// Product of weights over a label multiset.
LaurentPoly weight_product(std::span<const std::int64_t> labels);

}  // namespace qhex
