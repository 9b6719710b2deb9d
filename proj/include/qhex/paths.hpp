#pragma once

#include <cstdint>

#include "qhex/qseries.hpp"
#include "qhex/rational_fn.hpp"

namespace qhex {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool operator==(const LatticePoint&) const = default;
};

/// Endpoints of a lattice path with unit steps right and down. Infeasible
/// specs are legal inputs; their generating function is zero.
struct PathSpec {
    LatticePoint start;
    LatticePoint end;
};

/// Weight of the horizontal step p -> (p.x+1, p.y): the step is labelled
/// x - 2y and carries weight (q^{x-2y} + q^{2y-x}) / 2. Down steps have
/// weight 1.
LaurentPoly step_weight(LatticePoint p);

/// Generating function of all paths start -> end, by the two-term recursion
/// with a call-local memo table. Zero when start.x > end.x or start.y < end.y.
LaurentPoly gf_dp(const PathSpec& spec);

/// Closed form of the same generating function as an explicit quotient.
/// Requires start.x <= end.x and start.y >= end.y; callers handle the zero
/// cases themselves.
RationalFn gf_closed(const PathSpec& spec);

/// Matrix entry: the path generating function specialized to start
/// (2i-1, i-1) and end (2m-1+k, a_j). Polynomial route via gf_dp, so it is
/// defined (and zero) even when the path is infeasible (a_j >= i).
LaurentPoly gf_entry(int i, int m, int k, std::int64_t a_j);

/// The same entry assembled from the closed form: prefactor times a finite
/// q^4-base product over the q^2-base denominator product. Valid on the
/// combinatorial domain a_j < i (and, with a vanishing product, up to
/// a_j <= m+k-i-1).
RationalFn gf_entry_closed(int i, int m, int k, std::int64_t a_j);

}  // namespace qhex
