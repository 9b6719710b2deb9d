#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <regex>
#include <vector>

#include "qhex/render.hpp"
#include "test_util.hpp"

using namespace qhex;

namespace {

// Minimal well-formedness scan for the documents we generate: balanced tags,
// one root element, quoted attributes (no bare '<' or '&' in content).
bool well_formed_xml(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    if (text.rfind("<?xml", 0) == 0) {
        i = text.find("?>");
        if (i == std::string::npos) return false;
        i += 2;
    }
    bool root_seen = false;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '<') {
            const std::size_t end = text.find('>', i);
            if (end == std::string::npos) return false;
            std::string tag = text.substr(i + 1, end - i - 1);
            if (tag.empty()) return false;
            if (tag[0] == '/') {
                if (stack.empty()) return false;
                if (stack.back() != tag.substr(1)) return false;
                stack.pop_back();
            } else {
                const bool self_closing = tag.back() == '/';
                if (self_closing) tag.pop_back();
                const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
                if (name.empty()) return false;
                if (stack.empty()) {
                    if (root_seen) return false;
                    root_seen = true;
                }
                if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return false;
                if (!self_closing) stack.push_back(name);
            }
            i = end + 1;
        } else {
            if (c == '&' || c == '>') return false;
            ++i;
        }
    }
    return stack.empty() && root_seen;
}

std::vector<std::int64_t> labels_from_svg(const std::string& svg) {
    std::vector<std::int64_t> labels;
    const std::regex text_re(">(-?[0-9]+)</text>");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), text_re);
         it != std::sregex_iterator(); ++it)
        labels.push_back(std::stoll((*it)[1]));
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::vector<std::int64_t> sorted_step_labels(const PathFamily& f) {
    auto labels = f.step_labels();
    std::sort(labels.begin(), labels.end());
    return labels;
}

// Segment intersection over exact integer coordinates. Path polylines are
// drawn along images of unit path-space edges, scaled by 2 to stay integer.
struct IPoint {
    long long x, y;
};

long long cross(IPoint o, IPoint a, IPoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(IPoint p, IPoint a, IPoint b) {
    return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_touch(IPoint a, IPoint b, IPoint c, IPoint d) {
    const long long d1 = cross(c, d, a), d2 = cross(c, d, b);
    const long long d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

// Doubled image of a path vertex: (x, y) -> 2(x e2 - y e1) with e1 = (2, 0),
// e2 = (1, sqrt3); the sqrt3 factor scales out of incidence checks.
IPoint doubled_image(LatticePoint p) {
    return {p.x - 2 * p.y, p.x};
}

}  // namespace

TEST_CASE("single-step region renders one labelled vertical lozenge") {
    const Scene scene = build_scene(RegionSpec(1, 1, DS({0})), 0, true);
    CHECK(scene.family_count == 1);
    REQUIRE(scene.lozenges.size() == 1);
    CHECK(scene.lozenges[0].kind == Lozenge::Kind::Vertical);
    CHECK(scene.lozenges[0].label == 1);
    const std::string svg = scene_to_svg(scene);
    CHECK(well_formed_xml(svg));
    CHECK(labels_from_svg(svg) == std::vector<std::int64_t>{1});
}

TEST_CASE("empty-path region renders no vertical lozenges") {
    const Scene scene = build_scene(RegionSpec(1, 0, DS({0})), 0, true);
    CHECK(scene.family_count == 1);
    CHECK(scene_vertical_labels(scene).empty());
    CHECK(well_formed_xml(scene_to_svg(scene)));
}

TEST_CASE("rendered labels equal the family's step labels") {
    const RegionSpec region(3, 1, DS({-2, 0, 1}));
    const std::uint64_t count = family_count(region);
    std::vector<PathFamily> families;
    enumerate_families(region, kDefaultEnumerationCap,
                       [&](const PathFamily& f) { families.push_back(f); });
    REQUIRE(families.size() == count);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Scene scene = build_scene(region, idx, true);
        CHECK(scene_vertical_labels(scene) == sorted_step_labels(families[idx]));
        const std::string svg = scene_to_svg(scene);
        CHECK(well_formed_xml(svg));
        CHECK(labels_from_svg(svg) == sorted_step_labels(families[idx]));
    }
}

TEST_CASE("every family of a region decomposes over the same cell set") {
    // build_scene throws InternalDisagreement if the leftover cells of some
    // family fail to pair into background lozenges.
    for (const auto& region : {RegionSpec(2, 0, DS({-1, 0})), RegionSpec(2, 1, DS({-2, 0})),
                               RegionSpec(3, 0, DS({-2, -1, 1}))}) {
        const std::uint64_t count = family_count(region);
        std::size_t total_cells = 0;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            const Scene scene = build_scene(region, idx, true);
            if (idx == 0) total_cells = scene.lozenges.size();
            CHECK(scene.lozenges.size() == total_cells);  // same region every time
        }
    }
}

std::vector<std::pair<IPoint, IPoint>> polyline_segments(const std::vector<LatticePoint>& path) {
    std::vector<std::pair<IPoint, IPoint>> segments;
    if (path.size() == 1) segments.push_back({doubled_image(path[0]), doubled_image(path[0])});
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        segments.push_back({doubled_image(path[i]), doubled_image(path[i + 1])});
    return segments;
}

TEST_CASE("paths are drawn without crossing") {
    const RegionSpec region(3, 1, DS({-2, 0, 1}));
    const std::uint64_t count = family_count(region);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        const Scene scene = build_scene(region, idx, true);
        for (std::size_t p = 0; p < scene.paths.size(); ++p) {
            for (std::size_t r = p + 1; r < scene.paths.size(); ++r) {
                for (const auto& [a, b] : polyline_segments(scene.paths[p]))
                    for (const auto& [c, d] : polyline_segments(scene.paths[r]))
                        CHECK_FALSE(segments_touch(a, b, c, d));
            }
        }
    }
}

TEST_CASE("family index bounds and tiling-only mode") {
    CHECK_THROWS_AS(build_scene(RegionSpec(1, 0, DS({0})), 5, true), std::invalid_argument);
    const Scene scene = build_scene(RegionSpec(2, 0, DS({-1, 0})), 1, false);
    CHECK_FALSE(scene.include_paths);
    const std::string svg = scene_to_svg(scene);
    CHECK(well_formed_xml(svg));
    CHECK(svg.find("polyline") == std::string::npos);
}
