#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qhex/oracle.hpp"
#include "qhex/region.hpp"

namespace qhex {

/// One rhombus of the tiling picture, anchored on the triangular corner
/// lattice. Vertical lozenges carry the label of the horizontal step they
/// correspond to; the slanted kind is crossed by down steps and the
/// background kind fills the rest of the region.
struct Lozenge {
    enum class Kind { Vertical, Slanted, Background };
    Kind kind;
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t label = 0;
};

/// A renderable picture: the region's lozenge tiling for one chosen family,
/// with the paths overlaid.
struct Scene {
    std::vector<Lozenge> lozenges;
    std::vector<std::vector<LatticePoint>> paths;  // path-space vertices
    std::uint64_t family_count = 0;
    std::uint64_t family_index = 0;
    bool include_paths = true;
};

/// Builds the tiling image of the family with the given index. Every
/// horizontal step becomes one labelled vertical lozenge, every down step a
/// slanted one; the region cells no path crosses become background lozenges.
/// The region is recovered as the union of all families' cells; if the
/// leftover cells of the chosen family fail to pair up into background
/// lozenges, the bijection bookkeeping is broken and this throws
/// InternalDisagreement.
Scene build_scene(const RegionSpec& region, std::uint64_t family_index, bool include_paths,
                  std::uint64_t cap = kDefaultEnumerationCap);

/// SVG 1.1 document for a scene: three lozenge orientations in three
/// colours, labels on the vertical lozenges, paths as white polylines.
std::string scene_to_svg(const Scene& scene);

/// Multiset of labels carried by the scene's vertical lozenges (sorted).
std::vector<std::int64_t> scene_vertical_labels(const Scene& scene);

}  // namespace qhex
