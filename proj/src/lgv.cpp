#include "qhex/lgv.hpp"

#include <algorithm>

#include "qhex/qseries.hpp"

namespace qhex {

PolyMatrix PolyMatrix::without(const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) const {
    auto keep = [](const std::vector<std::size_t>& dropped, std::size_t idx) {
        return std::find(dropped.begin(), dropped.end(), idx) == dropped.end();
    };
    std::vector<std::size_t> ri, ci;
    for (std::size_t i = 1; i <= n_; ++i)
        if (keep(rows, i)) ri.push_back(i);
    for (std::size_t j = 1; j <= n_; ++j)
        if (keep(cols, j)) ci.push_back(j);
    if (ri.size() != ci.size()) throw std::invalid_argument("minor must be square");
    PolyMatrix out(ri.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
        for (std::size_t j = 0; j < ci.size(); ++j) out.at(i + 1, j + 1) = at(ri[i], ci[j]);
    return out;
}

LaurentPoly det_cofactor(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j + 1;
    auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& active) -> LaurentPoly {
        if (active.empty()) return LaurentPoly::one();
        LaurentPoly sum = LaurentPoly::zero();
        for (std::size_t idx = 0; idx < active.size(); ++idx) {
            const LaurentPoly& entry = m.at(row, active[idx]);
            if (entry.is_zero()) continue;
            std::vector<std::size_t> rest;
            rest.reserve(active.size() - 1);
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != idx) rest.push_back(active[j]);
            LaurentPoly contrib = entry * self(self, row + 1, rest);
            sum = (idx % 2 == 0) ? sum + contrib : sum - contrib;
        }
        return sum;
    };
    return rec(rec, 1, cols);
}

LaurentPoly det_bareiss(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::one();
    PolyMatrix w = m;
    int sign = 1;
    LaurentPoly prev = LaurentPoly::one();
    for (std::size_t k = 1; k < n; ++k) {
        if (w.at(k, k).is_zero()) {
            std::size_t swap_row = 0;
            for (std::size_t i = k + 1; i <= n; ++i) {
                if (!w.at(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row == 0) return LaurentPoly::zero();  // the whole column is zero
            for (std::size_t j = 1; j <= n; ++j) std::swap(w.at(k, j), w.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i <= n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                LaurentPoly num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = num.is_zero() ? LaurentPoly::zero() : divide_exact(num, prev);
            }
        }
        for (std::size_t i = k + 1; i <= n; ++i) w.at(i, k) = LaurentPoly::zero();
        prev = w.at(k, k);
    }
    LaurentPoly result = w.at(n, n);
    return sign == 1 ? result : -result;
}

LaurentPoly det(const PolyMatrix& m) {
    return m.size() <= 6 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix build_gf_matrix(const RegionSpec& region) {
    region.validate();
    const std::size_t n = static_cast<std::size_t>(region.m);
    PolyMatrix out(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            out.at(i, j) = gf_entry(static_cast<int>(i), region.m, region.k, region.dents[j - 1]);
    return out;
}

std::pair<Prefactor, PolyMatrix> reduce(const RegionSpec& region) {
    region.validate();
    const std::int64_t m = region.m, k = region.k;
    const std::size_t n = static_cast<std::size_t>(m);

    // Row factors 2^{2i-k-2m} q^{(2i-k-2m)(2i+k+2m-3)/2} / (q^2;q^2)_{2m+k-2i}
    // and column factors q^{(4m+2k) a_j}.
    BigRational coeff(1);
    std::int64_t exp = 0;
    LaurentPoly den = LaurentPoly::one();
    for (std::int64_t i = 1; i <= m; ++i) {
        coeff *= pow2_rational(2 * i - k - 2 * m);
        exp = exp_add(exp, exp_mul(2 * i - k - 2 * m, 2 * i + k + 2 * m - 3) / 2);
        den = den * qpoch(MonomialArg::plus(2), 2, 2 * m + k - 2 * i);
    }
    for (std::size_t j = 0; j < n; ++j)
        exp = exp_add(exp, exp_mul(4 * m + 2 * k, region.dents[j]));
    Prefactor pf{RationalFn(LaurentPoly::monomial(coeff, exp), std::move(den))};

    PolyMatrix reduced(n);
    for (std::int64_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            const std::int64_t a_j = region.dents[j - 1];
            reduced.at(static_cast<std::size_t>(i), j) =
                LaurentPoly::monomial(BigRational(1), exp_mul(-4 * i, a_j)) *
                qpoch(MonomialArg::plus(exp_mul(4, i - a_j)), 4, 2 * m + k - 2 * i);
        }
    }
    return {std::move(pf), std::move(reduced)};
}

LaurentPoly tiling_gf(const RegionSpec& region) {
    return det(build_gf_matrix(region));
}

}  // namespace qhex
