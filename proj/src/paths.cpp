#include "qhex/paths.hpp"

#include <vector>

#include "qhex/errors.hpp"

namespace qhex {

LaurentPoly step_weight(LatticePoint p) {
    return weight(exp_sub(p.x, exp_mul(2, p.y)));
}

LaurentPoly gf_dp(const PathSpec& spec) {
    const std::int64_t a = spec.start.x, b = spec.start.y;
    const std::int64_t c = spec.end.x, d = spec.end.y;
    if (a > c || b < d) return LaurentPoly::zero();

    const std::size_t width = static_cast<std::size_t>(c - a) + 1;
    const std::size_t height = static_cast<std::size_t>(b - d) + 1;
    // table[ix][iy] = gf(a+ix, d+iy, c, d)
    std::vector<std::vector<LaurentPoly>> table(width, std::vector<LaurentPoly>(height));
    for (std::size_t iy = 0; iy < height; ++iy) table[width - 1][iy] = LaurentPoly::one();
    for (std::size_t ix = width - 1; ix-- > 0;) {
        for (std::size_t iy = 0; iy < height; ++iy) {
            LaurentPoly v = step_weight({a + static_cast<std::int64_t>(ix),
                                         d + static_cast<std::int64_t>(iy)}) *
                            table[ix + 1][iy];
            if (iy > 0) v = v + table[ix][iy - 1];
            table[ix][iy] = std::move(v);
        }
    }
    return table[0][height - 1];
}

RationalFn gf_closed(const PathSpec& spec) {
    const std::int64_t a = spec.start.x, b = spec.start.y;
    const std::int64_t c = spec.end.x, d = spec.end.y;
    if (a > c || b < d) throw std::invalid_argument("gf_closed requires start.x <= end.x and start.y >= end.y");

    const std::int64_t len = c - a;
    // (a-c)(a+c-4d-1) is always even.
    const std::int64_t e = exp_mul(a - c, exp_sub(exp_add(a, c), exp_add(exp_mul(4, d), 1))) / 2;
    LaurentPoly num = LaurentPoly::monomial(pow2_rational(a - c), e);
    num = num * qpoch(MonomialArg::plus(exp_mul(2, exp_add(exp_sub(b, d), 1))), 2, len);
    num = num * qpoch(MonomialArg::minus(exp_mul(2, exp_sub(a, exp_add(b, d)))), 2, len);
    LaurentPoly den = qpoch(MonomialArg::plus(2), 2, len);
    return RationalFn(std::move(num), std::move(den));
}

namespace {

void check_entry_indices(int i, int m, int k) {
    if (m < 1 || i < 1 || i > m) throw std::invalid_argument("row index must satisfy 1 <= i <= m");
    if (k < 0) throw std::invalid_argument("height parameter k must be >= 0");
}

}  // namespace

LaurentPoly gf_entry(int i, int m, int k, std::int64_t a_j) {
    check_entry_indices(i, m, k);
    return gf_dp({{2 * static_cast<std::int64_t>(i) - 1, i - 1},
                  {2 * static_cast<std::int64_t>(m) - 1 + k, a_j}});
}

RationalFn gf_entry_closed(int i, int m, int k, std::int64_t a_j) {
    check_entry_indices(i, m, k);
    const std::int64_t n = 2 * static_cast<std::int64_t>(m) + k - 2 * i;
    const std::int64_t lead = 2 * static_cast<std::int64_t>(i) - k - 2 * m;
    const std::int64_t e =
        exp_mul(lead, exp_sub(exp_add(2 * static_cast<std::int64_t>(i) + k + 2 * m, -3),
                              exp_mul(4, a_j))) / 2;
    LaurentPoly num = LaurentPoly::monomial(pow2_rational(lead), e);
    num = num * qpoch(MonomialArg::plus(exp_mul(4, exp_sub(i, a_j))), 4, n);
    LaurentPoly den = qpoch(MonomialArg::plus(2), 2, n);
    return RationalFn(std::move(num), std::move(den));
}

}  // namespace qhex
