#include "qhex/identity.hpp"

#include <string>

#include "qhex/qseries.hpp"
#include "qhex/rng.hpp"

namespace qhex {

PolyMatrix build_prop_matrix(const PropMatrixSpec& spec) {
    const std::int64_t m = spec.m(), k = spec.k;
    PolyMatrix out(static_cast<std::size_t>(m));
    for (std::int64_t i = 1; i <= m; ++i) {
        for (std::int64_t j = 1; j <= m; ++j) {
            const std::int64_t a_j = spec.a[static_cast<std::size_t>(j - 1)];
            out.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                LaurentPoly::monomial(BigRational(1), exp_mul(-i, a_j)) *
                qpoch(MonomialArg::plus(exp_sub(i, a_j)), 1, 2 * m + k - 2 * i);
        }
    }
    return out;
}

LaurentPoly product_rhs(const PropMatrixSpec& spec) {
    const std::int64_t m = spec.m(), k = spec.k;
    std::int64_t e = m * (m - 1) * (2 * m + k - 1) / 2;
    for (std::int64_t l = 1; l <= m; ++l)
        e = exp_sub(e, exp_mul(spec.a[static_cast<std::size_t>(l - 1)], 2 * m - l));
    LaurentPoly out = LaurentPoly::monomial(BigRational(1), e);
    for (std::int64_t j = 0; j < m; ++j)
        out = out * qpoch(MonomialArg::plus(exp_sub(m, spec.a[static_cast<std::size_t>(j)])), 1, k);
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i + 1; j < m; ++j) {
            const std::int64_t ai = spec.a[static_cast<std::size_t>(i)];
            const std::int64_t aj = spec.a[static_cast<std::size_t>(j)];
            out = out * qpoch(MonomialArg::plus(exp_sub(ai, aj)), 1, 1);
            out = out * qpoch(MonomialArg::plus(exp_add(exp_sub(exp_add(ai, aj), 2 * m + k), 1)), 1, 1);
        }
    }
    return out;
}

bool prop1_check(const PropMatrixSpec& spec) {
    return det(build_prop_matrix(spec)) == product_rhs(spec);
}

DentOps dent_ops(const DentSequence& a) {
    return {a.drop_first(), a.drop_last(), a.drop_both(), a.shifted_down()};
}

namespace {

// entry (i, j) -> q^{left[i]} entry q^{right[j]}.
PolyMatrix diag_scale(const PolyMatrix& m, const std::vector<std::int64_t>& left,
                      const std::vector<std::int64_t>& right) {
    PolyMatrix out(m.size());
    for (std::size_t i = 1; i <= m.size(); ++i)
        for (std::size_t j = 1; j <= m.size(); ++j)
            out.at(i, j) =
                m.at(i, j) * LaurentPoly::monomial(BigRational(1), exp_add(left[i - 1], right[j - 1]));
    return out;
}

std::vector<std::int64_t> descending_powers(std::size_t count, std::int64_t first) {
    // (first, first-1, ...): exponents -1, -2, ... enter as first = -1.
    std::vector<std::int64_t> v(count);
    for (std::size_t i = 0; i < count; ++i) v[i] = first - static_cast<std::int64_t>(i);
    return v;
}

std::vector<std::int64_t> negated_dents(const DentSequence& a) {
    std::vector<std::int64_t> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = -a[i];
    return v;
}

}  // namespace

bool submatrix_identities_check(const PropMatrixSpec& spec) {
    const std::size_t m = static_cast<std::size_t>(spec.m());
    if (m < 2) throw std::invalid_argument("submatrix identities require m >= 2");
    const PolyMatrix M = build_prop_matrix(spec);
    const DentOps ops = dent_ops(spec.a);

    const PolyMatrix no_first = M.without({1}, {1});
    const PolyMatrix rebuilt_first =
        diag_scale(build_prop_matrix({spec.k, ops.front_dropped.shifted_down()}),
                   descending_powers(m - 1, -1), negated_dents(ops.front_dropped));
    if (!(no_first == rebuilt_first)) return false;

    if (!(M.without({m}, {m}) == build_prop_matrix({spec.k + 2, ops.back_dropped}))) return false;

    const PolyMatrix corner_ne = M.without({1}, {m});
    const PolyMatrix rebuilt_ne =
        diag_scale(build_prop_matrix({spec.k, ops.back_dropped.shifted_down()}),
                   descending_powers(m - 1, -1), negated_dents(ops.back_dropped));
    if (!(corner_ne == rebuilt_ne)) return false;

    if (!(M.without({m}, {1}) == build_prop_matrix({spec.k + 2, ops.front_dropped}))) return false;

    const PolyMatrix central = M.without({1, m}, {1, m});
    const PolyMatrix rebuilt_central =
        diag_scale(build_prop_matrix({spec.k + 2, ops.both_dropped.shifted_down()}),
                   descending_powers(m - 2, -1), negated_dents(ops.both_dropped));
    return central == rebuilt_central;
}

bool dodgson_check(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n < 2) throw std::invalid_argument("condensation requires size >= 2");
    const LaurentPoly lhs = det(m) * det(m.without({1, n}, {1, n}));
    const LaurentPoly rhs = det(m.without({1}, {1})) * det(m.without({n}, {n})) -
                            det(m.without({1}, {n})) * det(m.without({n}, {1}));
    return lhs == rhs;
}

bool recursion_check(const PropMatrixSpec& spec) {
    const std::int64_t m = spec.m();
    if (m < 2) throw std::invalid_argument("recursion requires m >= 2");
    const DentOps ops = dent_ops(spec.a);

    const LaurentPoly central = det(build_prop_matrix({spec.k + 2, ops.both_dropped.shifted_down()}));
    if (central.is_zero()) throw ZeroDenominator("central determinant vanishes");

    const LaurentPoly lhs = det(build_prop_matrix(spec)) * central;
    const std::int64_t a_first = spec.a[0];
    const std::int64_t a_last = spec.a[static_cast<std::size_t>(m - 1)];
    const LaurentPoly bracket =
        LaurentPoly::monomial(BigRational(1), -a_last) *
            det(build_prop_matrix({spec.k + 2, ops.back_dropped})) *
            det(build_prop_matrix({spec.k, ops.front_dropped.shifted_down()})) -
        LaurentPoly::monomial(BigRational(1), -a_first) *
            det(build_prop_matrix({spec.k + 2, ops.front_dropped})) *
            det(build_prop_matrix({spec.k, ops.back_dropped.shifted_down()}));
    const LaurentPoly rhs = LaurentPoly::monomial(BigRational(1), -(m - 1)) * bracket;
    return lhs == rhs;
}

namespace {

VarSet krat_vars(int m) {
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i) names.push_back("X" + std::to_string(i));
    for (int i = 2; i <= m; ++i) names.push_back("A" + std::to_string(i));
    names.push_back("C");
    return VarSet(std::move(names));
}

}  // namespace

std::vector<std::vector<MultiLaurent>> krat_lhs_matrix(int m) {
    if (m < 1) throw std::invalid_argument("lemma matrix requires m >= 1");
    const VarSet vars = krat_vars(m);
    std::vector<std::vector<MultiLaurent>> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            MultiLaurent e = MultiLaurent::constant(vars, BigRational(1));
            for (int l = j + 1; l <= m; ++l) {
                const std::string Xi = "X" + std::to_string(i);
                const std::string Al = "A" + std::to_string(l);
                MultiLaurent c_over_x = MultiLaurent::monomial(vars, BigRational(1), "C", 1) *
                                        MultiLaurent::monomial(vars, BigRational(1), Xi, -1);
                MultiLaurent a_l = MultiLaurent::monomial(vars, BigRational(1), Al, 1);
                MultiLaurent x_i = MultiLaurent::monomial(vars, BigRational(1), Xi, 1);
                e = e * (c_over_x + a_l) * (x_i + a_l);
            }
            out[static_cast<std::size_t>(i - 1)].push_back(std::move(e));
        }
    }
    return out;
}

MultiLaurent krat_rhs(int m) {
    if (m < 1) throw std::invalid_argument("lemma product requires m >= 1");
    const VarSet vars = krat_vars(m);
    MultiLaurent out = MultiLaurent::constant(vars, BigRational(1));
    for (int i = 2; i <= m; ++i)
        out = out * MultiLaurent::monomial(vars, BigRational(1), "A" + std::to_string(i), i - 1);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const std::string Xi = "X" + std::to_string(i);
            const std::string Xj = "X" + std::to_string(j);
            MultiLaurent diff = MultiLaurent::monomial(vars, BigRational(1), Xi, 1) -
                                MultiLaurent::monomial(vars, BigRational(1), Xj, 1);
            MultiLaurent cross = MultiLaurent::constant(vars, BigRational(1)) -
                                 MultiLaurent::monomial(vars, BigRational(1), "C", 1) *
                                     MultiLaurent::monomial(vars, BigRational(1), Xi, -1) *
                                     MultiLaurent::monomial(vars, BigRational(1), Xj, -1);
            out = out * diff * cross;
        }
    }
    return out;
}

bool krat_check(int m) {
    if (m > 3) throw SizeBoundExceeded("symbolic lemma verification is bounded at m = 3");
    return mv_det(krat_lhs_matrix(m), 3) == krat_rhs(m);
}

namespace {

BigRational rational_det(std::vector<std::vector<BigRational>> a) {
    const std::size_t n = a.size();
    BigRational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return BigRational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            BigRational f = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return result;
}

}  // namespace

bool krat_eval_check(int m, std::uint64_t seed, int points) {
    if (m < 1 || m > 6) throw SizeBoundExceeded("evaluation-based lemma verification is bounded at m = 6");
    const auto lhs = krat_lhs_matrix(m);
    const MultiLaurent rhs = krat_rhs(m);
    const std::size_t nvars = lhs[0][0].vars().size();

    SplitMix64 rng(seed);
    for (int p = 0; p < points; ++p) {
        std::vector<BigRational> point;
        point.reserve(nvars);
        for (std::size_t v = 0; v < nvars; ++v)
            point.push_back(make_rational(rng.range(2, 97), rng.range(1, 9)));
        std::vector<std::vector<BigRational>> numeric(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                numeric[static_cast<std::size_t>(i)].push_back(
                    lhs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(point));
        if (rational_det(std::move(numeric)) != rhs.eval(point)) return false;
    }
    return true;
}

bool krat_specialize_check(const PropMatrixSpec& spec) {
    const std::int64_t m = spec.m(), k = spec.k;
    const LaurentPoly d = det(build_prop_matrix(spec));

    LaurentPoly middle = LaurentPoly::one();
    for (std::int64_t j = 0; j < m; ++j)
        middle = middle * qpoch(MonomialArg::plus(exp_sub(m, spec.a[static_cast<std::size_t>(j)])), 1, k);

    // Column pull-out of the middle factors leaves the two short products.
    PolyMatrix pulled(static_cast<std::size_t>(m));
    for (std::int64_t i = 1; i <= m; ++i) {
        for (std::int64_t j = 1; j <= m; ++j) {
            const std::int64_t a_j = spec.a[static_cast<std::size_t>(j - 1)];
            pulled.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                LaurentPoly::monomial(BigRational(1), exp_mul(-i, a_j)) *
                qpoch(MonomialArg::plus(exp_sub(i, a_j)), 1, m - i) *
                qpoch(MonomialArg::plus(exp_sub(exp_add(m, k), a_j)), 1, m - i);
        }
    }
    if (!(d == middle * det(pulled))) return false;

    // Monomial prefactor from X_j = q^{-a_j}, A_i = q^{-i+1}, C = q^{-2m-k+1}
    // and the specialized product side of the lemma.
    std::int64_t e = 0;
    for (std::int64_t l = 1; l <= m; ++l) {
        e = exp_add(e, exp_mul(-m, spec.a[static_cast<std::size_t>(l - 1)]));
        e = exp_add(e, m * (m - 1) / 2 - l * (l - 1) / 2);
        e = exp_add(e, exp_mul(2 * m + k - 1, m - l));
    }
    for (std::int64_t i = 2; i <= m; ++i) e = exp_sub(e, (i - 1) * (i - 1));

    LaurentPoly closed = LaurentPoly::monomial(BigRational(1), e);
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t j = i + 1; j < m; ++j) {
            const std::int64_t ai = spec.a[static_cast<std::size_t>(i)];
            const std::int64_t aj = spec.a[static_cast<std::size_t>(j)];
            closed = closed * (LaurentPoly::monomial(BigRational(1), -ai) -
                               LaurentPoly::monomial(BigRational(1), -aj));
            closed = closed *
                     (LaurentPoly::one() -
                      LaurentPoly::monomial(BigRational(1), exp_add(exp_sub(exp_add(ai, aj), 2 * m + k), 1)));
        }
    }
    return d == middle * closed;
}

LaurentPoly closed_product_gf(const RegionSpec& region) {
    auto [pf, reduced] = reduce(region);
    (void)reduced;
    const LaurentPoly rhs4 = product_rhs({region.k, region.dents}).substitute_power(4);
    return divide_exact(pf.value.num * rhs4, pf.value.den);
}

}  // namespace qhex
