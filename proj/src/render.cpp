#include "qhex/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace qhex {

namespace {

// Triangles of the corner lattice: up-pointing U(alpha, beta) and
// down-pointing D(alpha, beta), the two halves of the unit rhombus spanned
// at (alpha, beta) by the basis (1,0) and (1/2, sqrt3/2).
struct Tri {
    bool up;
    std::int64_t alpha;
    std::int64_t beta;
    auto operator<=>(const Tri&) const = default;
};

struct Step {
    LatticePoint at;
    bool horizontal;
};

std::vector<Step> family_steps(const PathFamily& family) {
    std::vector<Step> steps;
    for (const auto& path : family.paths) {
        for (std::size_t s = 0; s + 1 < path.size(); ++s)
            steps.push_back({path[s], path[s + 1].x == path[s].x + 1});
    }
    return steps;
}

// Horizontal step at (x, y) covers U(-y-1, x+1) and D(-y-1, x); a down step
// covers D(-y-1, x) and U(-y, x). Each path-space vertex has at most one
// outgoing step per family, so these cells never collide.
std::pair<Tri, Tri> step_cells(const Step& s) {
    const std::int64_t a = -s.at.y - 1, b = s.at.x + 1;
    if (s.horizontal) return {Tri{true, a, b}, Tri{false, a, b - 1}};
    return {Tri{false, a, b - 1}, Tri{true, a + 1, b - 1}};
}

struct WorldPoint {
    double x;
    double y;
};

constexpr double kRoot3Half = 0.8660254037844386;

// Corner lattice sits at offset (1/4, -sqrt3/4) from the path lattice.
WorldPoint corner_point(std::int64_t alpha, std::int64_t beta) {
    return {0.25 + static_cast<double>(alpha) + 0.5 * static_cast<double>(beta),
            -0.5 * kRoot3Half + kRoot3Half * static_cast<double>(beta)};
}

WorldPoint path_point(LatticePoint p) {
    return {-static_cast<double>(p.y) + 0.5 * static_cast<double>(p.x),
            kRoot3Half * static_cast<double>(p.x)};
}

std::vector<WorldPoint> lozenge_corners(const Lozenge& l) {
    const std::int64_t a = l.alpha, b = l.beta;
    switch (l.kind) {
        case Lozenge::Kind::Vertical:
            return {corner_point(a, b), corner_point(a, b + 1), corner_point(a + 1, b),
                    corner_point(a + 1, b - 1)};
        case Lozenge::Kind::Slanted:
            return {corner_point(a, b), corner_point(a + 1, b), corner_point(a + 2, b - 1),
                    corner_point(a + 1, b - 1)};
        case Lozenge::Kind::Background:
            return {corner_point(a, b), corner_point(a + 1, b), corner_point(a + 1, b + 1),
                    corner_point(a, b + 1)};
    }
    return {};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

Scene build_scene(const RegionSpec& region, std::uint64_t family_index, bool include_paths,
                  std::uint64_t cap) {
    region.validate();

    std::set<Tri> all_cells;
    PathFamily chosen;
    bool found = false;
    std::uint64_t count = 0;
    enumerate_families(region, cap, [&](const PathFamily& f) {
        if (count == family_index) {
            chosen = f;
            found = true;
        }
        ++count;
        for (const Step& s : family_steps(f)) {
            auto [t1, t2] = step_cells(s);
            all_cells.insert(t1);
            all_cells.insert(t2);
        }
    });
    if (!found) throw std::invalid_argument("family index out of range");

    Scene scene;
    scene.family_count = count;
    scene.family_index = family_index;
    scene.include_paths = include_paths;
    scene.paths = chosen.paths;

    std::set<Tri> used;
    for (const Step& s : family_steps(chosen)) {
        auto [t1, t2] = step_cells(s);
        used.insert(t1);
        used.insert(t2);
        const std::int64_t a = -s.at.y - 1, b = s.at.x + 1;
        if (s.horizontal) {
            scene.lozenges.push_back(
                {Lozenge::Kind::Vertical, a, b, exp_sub(s.at.x, exp_mul(2, s.at.y))});
        } else {
            scene.lozenges.push_back({Lozenge::Kind::Slanted, a, b, 0});
        }
    }

    // The cells no path of the chosen family crosses must pair into whole
    // background rhombi; anything else means the bijection bookkeeping broke.
    std::map<std::pair<std::int64_t, std::int64_t>, int> leftovers;
    for (const Tri& t : all_cells) {
        if (used.count(t)) continue;
        leftovers[{t.alpha, t.beta}] += t.up ? 1 : 2;
    }
    for (const auto& [cell, mask] : leftovers) {
        if (mask != 3)
            throw InternalDisagreement("leftover region cells do not pair into lozenges");
        scene.lozenges.push_back({Lozenge::Kind::Background, cell.first, cell.second, 0});
    }
    return scene;
}

std::vector<std::int64_t> scene_vertical_labels(const Scene& scene) {
    std::vector<std::int64_t> labels;
    for (const Lozenge& l : scene.lozenges)
        if (l.kind == Lozenge::Kind::Vertical) labels.push_back(l.label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

std::string scene_to_svg(const Scene& scene) {
    const double scale = 42.0;
    double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
    auto grow = [&](WorldPoint p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    };
    for (const Lozenge& l : scene.lozenges)
        for (const WorldPoint& p : lozenge_corners(l)) grow(p);
    for (const auto& path : scene.paths)
        for (const LatticePoint& p : path) grow(path_point(p));
    if (scene.lozenges.empty() && scene.paths.empty()) {
        min_x = min_y = 0;
        max_x = max_y = 1;
    }
    const double pad = 0.6;
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;

    // World y grows toward the base line; SVG y grows downward, so mapping
    // y directly puts the base at the bottom like the region pictures.
    auto X = [&](double x) { return (x - min_x) * scale; };
    auto Y = [&](double y) { return (y - min_y) * scale; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt((max_x - min_x) * scale) << "\" height=\"" << fmt((max_y - min_y) * scale)
        << "\" viewBox=\"0 0 " << fmt((max_x - min_x) * scale) << " " << fmt((max_y - min_y) * scale)
        << "\">\n";

    auto colour = [](Lozenge::Kind k) {
        switch (k) {
            case Lozenge::Kind::Vertical: return "#d9b38c";
            case Lozenge::Kind::Slanted: return "#fbb982";
            case Lozenge::Kind::Background: return "#a6402e";
        }
        return "#000000";
    };

    for (const Lozenge& l : scene.lozenges) {
        svg << "<polygon points=\"";
        bool first = true;
        for (const WorldPoint& p : lozenge_corners(l)) {
            if (!first) svg << " ";
            first = false;
            svg << fmt(X(p.x)) << "," << fmt(Y(p.y));
        }
        svg << "\" fill=\"" << colour(l.kind) << "\" stroke=\"#5b4636\" stroke-width=\""
            << fmt(0.03 * scale) << "\"/>\n";
    }

    if (scene.include_paths) {
        for (const auto& path : scene.paths) {
            if (path.empty()) continue;
            svg << "<polyline points=\"";
            bool first = true;
            for (const LatticePoint& p : path) {
                const WorldPoint w = path_point(p);
                if (!first) svg << " ";
                first = false;
                svg << fmt(X(w.x)) << "," << fmt(Y(w.y));
            }
            svg << "\" fill=\"none\" stroke=\"#ffffff\" stroke-width=\"" << fmt(0.09 * scale)
                << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
        }
    }

    for (const Lozenge& l : scene.lozenges) {
        if (l.kind != Lozenge::Kind::Vertical) continue;
        const auto corners = lozenge_corners(l);
        double cx = 0, cy = 0;
        for (const WorldPoint& p : corners) {
            cx += p.x;
            cy += p.y;
        }
        cx /= 4;
        cy /= 4;
        svg << "<text x=\"" << fmt(X(cx)) << "\" y=\"" << fmt(Y(cy))
            << "\" font-size=\"" << fmt(0.4 * scale)
            << "\" text-anchor=\"middle\" dominant-baseline=\"central\" fill=\"#40342a\">"
            << l.label << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace qhex
