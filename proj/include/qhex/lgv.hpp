#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qhex/oracle.hpp"
#include "qhex/rational_fn.hpp"
#include "qhex/region.hpp"

namespace qhex {

/// Square matrix of Laurent polynomials.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const { return n_; }
    /// 1-based access, matching the row/column indexing of the identities.
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return cells_[(i - 1) * n_ + (j - 1)]; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return cells_[(i - 1) * n_ + (j - 1)]; }

    /// Copy with the given 1-based rows and columns deleted.
    PolyMatrix without(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool operator==(const PolyMatrix& r) const { return n_ == r.n_ && cells_ == r.cells_; }

  private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> cells_;
};

/// Exact determinant by cofactor expansion; intended for small sizes.
LaurentPoly det_cofactor(const PolyMatrix& m);

/// Exact determinant by fraction-free elimination. Every division performed
/// is exact; an inexact one indicates an implementation bug and throws.
LaurentPoly det_bareiss(const PolyMatrix& m);

/// Dispatching determinant: cofactor expansion up to 6x6, fraction-free
/// elimination above. det of the 0x0 matrix is 1.
LaurentPoly det(const PolyMatrix& m);

/// Matrix of single-path generating functions: entry (i, j) is
/// gf_entry(i, m, k, dents[j]).
PolyMatrix build_gf_matrix(const RegionSpec& region);

/// The rational function pulled out of the generating-function matrix by
/// multilinearity (row denominators, row and column powers of q).
struct Prefactor {
    RationalFn value;
};

/// Splits det(gf matrix) as prefactor times the determinant of the reduced
/// matrix with entries q^{-4 i a_j} (q^{4(i-a_j)}; q^4)_{2m+k-2i}.
std::pair<Prefactor, PolyMatrix> reduce(const RegionSpec& region);

/// Tiling generating function of the region as the path-matrix determinant.
LaurentPoly tiling_gf(const RegionSpec& region);

}  // namespace qhex
