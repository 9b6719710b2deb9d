#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qhex/paths.hpp"
#include "qhex/region.hpp"

namespace qhex {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// A single monotone path with its weight (product of horizontal step
/// weights).
struct WeightedPath {
    std::vector<LatticePoint> points;
    LaurentPoly weight;
};

/// A family of m pairwise vertex-disjoint paths, path i running from
/// (2i-1, i-1) to (2m-1+k, dents[i]).
struct PathFamily {
    std::vector<std::vector<LatticePoint>> paths;

    /// Labels x - 2y of every horizontal step, over all paths.
    std::vector<std::int64_t> step_labels() const;
    LaurentPoly weight() const;
};

/// All monotone paths start -> end. The binomial path count is checked
/// against the cap before any enumeration starts.
std::vector<WeightedPath> enumerate_single(const PathSpec& spec, std::uint64_t cap = kDefaultEnumerationCap);

using FamilyVisitor = std::function<void(const PathFamily&)>;

/// Depth-first enumeration of vertex-disjoint families; the visitor is
/// called once per complete family. Throws CapExceeded when the number of
/// visited search states passes the cap.
void enumerate_families(const RegionSpec& region, std::uint64_t cap, const FamilyVisitor& visit);

/// Sum over all families of the product of path weights. This is the tiling
/// generating function of the region, by the weight-preserving bijection.
LaurentPoly family_gf(const RegionSpec& region, std::uint64_t cap = kDefaultEnumerationCap);

/// Number of families; equals family_gf evaluated at q = 1.
std::uint64_t family_count(const RegionSpec& region, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qhex
