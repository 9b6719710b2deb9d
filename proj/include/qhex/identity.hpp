#pragma once

#include <cstdint>
#include <vector>

#include "qhex/lgv.hpp"
#include "qhex/mvpoly.hpp"
#include "qhex/region.hpp"

namespace qhex {

/// Parameters of the m x m matrix with entries
/// q^{-i a_j} (q^{i-a_j}; q)_{2m+k-2i}: a nonnegative height parameter k and
/// an arbitrary strictly increasing integer sequence (not restricted to the
/// dent window of a region).
struct PropMatrixSpec {
    int k = 0;
    DentSequence a;

    PropMatrixSpec() = default;
    PropMatrixSpec(int k_, DentSequence a_) : k(k_), a(std::move(a_)) {
        if (k < 0) throw std::invalid_argument("height parameter k must be >= 0");
    }

    int m() const { return static_cast<int>(a.size()); }
};

/// Entry (i, j) = q^{-i a_j} (q^{i-a_j}; q)_{2m+k-2i}. Supports m = 0 (the
/// empty matrix, determinant 1).
PolyMatrix build_prop_matrix(const PropMatrixSpec& spec);

/// The fully factored right-hand side:
/// q^{m(m-1)(2m+k-1)/2 - sum_l a_l (2m-l)} prod_j (q^{m-a_j}; q)_k
/// prod_{i<j} (1 - q^{a_i-a_j})(1 - q^{-2m-k+1+a_i+a_j}).
LaurentPoly product_rhs(const PropMatrixSpec& spec);

/// det(build_prop_matrix(spec)) == product_rhs(spec), exactly.
bool prop1_check(const PropMatrixSpec& spec);

/// The four derived sequences used by the decomposition identities.
struct DentOps {
    DentSequence front_dropped;  // (a_2, ..., a_m)
    DentSequence back_dropped;   // (a_1, ..., a_{m-1})
    DentSequence both_dropped;   // (a_2, ..., a_{m-1})
    DentSequence shifted;        // (a_1 - 1, ..., a_m - 1)
};
DentOps dent_ops(const DentSequence& a);  // requires length >= 2

/// The five decompositions of the deleted-row/column submatrices into
/// diagonally rescaled copies of smaller matrices of the same family,
/// checked entrywise. Requires m >= 2.
bool submatrix_identities_check(const PropMatrixSpec& spec);

/// det(M) det(M minus rows/cols {1, n}) ==
/// det(M minus 1,1) det(M minus n,n) - det(M minus 1,n) det(M minus n,1),
/// with the 0x0 convention det = 1. Requires n >= 2.
bool dodgson_check(const PolyMatrix& m);

/// The condensation recursion on determinants, checked in cross-multiplied
/// form. Requires m >= 2; throws ZeroDenominator when the doubly-deleted
/// central determinant vanishes (callers report and skip such cases).
bool recursion_check(const PropMatrixSpec& spec);

/// LHS matrix of the determinant lemma over X_1..X_m, A_2..A_m, C:
/// entry (i, j) = prod_{l=j+1}^m (C/X_i + A_l)(X_i + A_l).
std::vector<std::vector<MultiLaurent>> krat_lhs_matrix(int m);
/// RHS product: prod_i A_i^{i-1} prod_{i<j} (X_i - X_j)(1 - C/(X_i X_j)).
MultiLaurent krat_rhs(int m);

/// Full symbolic verification of the lemma; m <= 3.
bool krat_check(int m);

/// Evaluation-based verification at fixed-seed rational points; m <= 6.
bool krat_eval_check(int m, std::uint64_t seed, int points = 8);

/// The specialization chain X_j = q^{-a_j}, A_i = q^{-i+1}, C = q^{-2m-k+1}:
/// the middle-factor column pull-out and the resulting closed product are
/// both checked as exact Laurent identities against the determinant.
bool krat_specialize_check(const PropMatrixSpec& spec);

/// Closed-form tiling generating function of a region: the multilinearity
/// prefactor times product_rhs under q -> q^4, with the denominator cleared
/// by exact division. Agrees with tiling_gf and family_gf on the dent
/// window.
LaurentPoly closed_product_gf(const RegionSpec& region);

}  // namespace qhex
