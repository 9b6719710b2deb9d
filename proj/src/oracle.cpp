#include "qhex/oracle.hpp"

#include <algorithm>
#include <limits>

namespace qhex {

std::vector<std::int64_t> PathFamily::step_labels() const {
    std::vector<std::int64_t> labels;
    for (const auto& path : paths) {
        for (std::size_t s = 0; s + 1 < path.size(); ++s) {
            if (path[s + 1].x == path[s].x + 1)
                labels.push_back(exp_sub(path[s].x, exp_mul(2, path[s].y)));
        }
    }
    return labels;
}

LaurentPoly PathFamily::weight() const {
    auto labels = step_labels();
    return weight_product(labels);
}

std::vector<WeightedPath> enumerate_single(const PathSpec& spec, std::uint64_t cap) {
    const std::int64_t dx = spec.end.x - spec.start.x;
    const std::int64_t dy = spec.start.y - spec.end.y;
    if (dx < 0 || dy < 0) return {};

    BigInt bound;
    mpz_bin_uiui(bound.get_mpz_t(), static_cast<unsigned long>(dx + dy), static_cast<unsigned long>(dx));
    if (bound > BigInt(static_cast<unsigned long>(cap)))
        throw CapExceeded("single-path enumeration exceeds cap");

    std::vector<WeightedPath> out;
    std::vector<LatticePoint> stack{spec.start};
    auto rec = [&](auto&& self, LatticePoint at, const LaurentPoly& w) -> void {
        if (at == spec.end) {
            out.push_back({stack, w});
            return;
        }
        if (at.x < spec.end.x) {
            stack.push_back({at.x + 1, at.y});
            self(self, stack.back(), w * step_weight(at));
            stack.pop_back();
        }
        if (at.y > spec.end.y) {
            stack.push_back({at.x, at.y - 1});
            self(self, stack.back(), w);
            stack.pop_back();
        }
    };
    rec(rec, spec.start, LaurentPoly::one());
    return out;
}

namespace {

struct RegionGeometry {
    std::int64_t x_max;
    std::int64_t y_floor;       // one below the lowest reachable y
    std::int64_t total_rsteps;  // identical for every family of the region
    std::int64_t max_label;     // largest |x - 2y| over the reachable grid

    explicit RegionGeometry(const RegionSpec& region) {
        x_max = 2 * static_cast<std::int64_t>(region.m) - 1 + region.k;
        y_floor = std::min<std::int64_t>(region.dents[0], 0) - 1;
        total_rsteps = 0;
        for (int i = 1; i <= region.m; ++i)
            total_rsteps += 2 * static_cast<std::int64_t>(region.m) + region.k - 2 * i;
        const std::int64_t y_top = std::max<std::int64_t>(region.m - 1,
                                                          region.dents[region.dents.size() - 1]);
        max_label = 0;
        for (std::int64_t y : {y_floor + 1, y_top})
            for (std::int64_t x : {std::int64_t{1}, x_max})
                max_label = std::max<std::int64_t>(max_label, std::llabs(x - 2 * y));
    }
};

// Depth-first search over families, path by path. Vertex-disjointness of an
// ordered monotone family is equivalent to each path staying strictly above
// the column profile of its predecessor, which prunes dead branches as soon
// as they dip into the previous path.
//
// The Weight policy threads the product of horizontal step weights through
// the search; weights of all families of a region share the global factor
// 2^{-total_rsteps}, so the policies work with integer coefficients.
template <typename Policy>
struct FamilySearch {
    const RegionSpec& region;
    const RegionGeometry geom;
    std::uint64_t cap;
    Policy& policy;

    std::uint64_t states = 0;
    PathFamily family;
    // profiles[i][x] = highest y of path i at column x; row 0 is the floor.
    std::vector<std::vector<std::int64_t>> profiles;

    FamilySearch(const RegionSpec& r, std::uint64_t c, Policy& p)
        : region(r), geom(r), cap(c), policy(p) {
        profiles.assign(static_cast<std::size_t>(region.m) + 1,
                        std::vector<std::int64_t>(static_cast<std::size_t>(geom.x_max) + 1,
                                                  geom.y_floor));
        family.paths.resize(static_cast<std::size_t>(region.m));
    }

    void tick() {
        if (++states > cap) throw CapExceeded("family enumeration exceeds cap");
    }

    void run() { place_path(0, 0); }

    void place_path(int i, int depth) {
        if (i == region.m) {
            policy.leaf(family, depth);
            return;
        }
        const LatticePoint start{2 * static_cast<std::int64_t>(i) + 1, i};
        const LatticePoint end{geom.x_max, region.dents[static_cast<std::size_t>(i)]};
        if (start.y < end.y) return;  // path i infeasible, hence no families
        auto& path = family.paths[static_cast<std::size_t>(i)];
        path.clear();
        if (start.y <= profiles[static_cast<std::size_t>(i)][static_cast<std::size_t>(start.x)]) return;
        path.push_back(start);
        extend(i, start, end, depth);
    }

    void extend(int i, LatticePoint at, LatticePoint end, int depth) {
        tick();
        auto& path = family.paths[static_cast<std::size_t>(i)];
        if (at == end) {
            auto& mine = profiles[static_cast<std::size_t>(i) + 1];
            for (const LatticePoint& p : path) {
                auto& h = mine[static_cast<std::size_t>(p.x)];
                h = std::max(h, p.y);
            }
            place_path(i + 1, depth);
            for (const LatticePoint& p : path) mine[static_cast<std::size_t>(p.x)] = geom.y_floor;
            return;
        }
        const auto& prev = profiles[static_cast<std::size_t>(i)];
        if (at.x < end.x && at.y > prev[static_cast<std::size_t>(at.x) + 1]) {
            const LatticePoint next{at.x + 1, at.y};
            path.push_back(next);
            policy.push_rstep(at.x - 2 * at.y, depth);
            extend(i, next, end, depth + 1);
            path.pop_back();
        }
        if (at.y > end.y && at.y - 1 > prev[static_cast<std::size_t>(at.x)]) {
            const LatticePoint next{at.x, at.y - 1};
            path.push_back(next);
            extend(i, next, end, depth);
            path.pop_back();
        }
    }
};

struct VisitPolicy {
    const FamilyVisitor& visit;
    void push_rstep(std::int64_t, int) {}
    void leaf(const PathFamily& family, int) { visit(family); }
};

// Weight accumulation over dense integer coefficient buffers, one per count
// of horizontal steps taken so far. Safe only when the binomial coefficient
// bound times the state cap fits in int64; the caller checks.
struct DenseWeightPolicy {
    std::int64_t max_abs_exp;
    std::size_t width;
    std::vector<std::vector<std::int64_t>> buffers;  // buffers[d] after d steps
    std::vector<std::pair<std::size_t, std::size_t>> occupied;
    std::vector<std::int64_t> acc;
    std::size_t acc_lo, acc_hi;

    DenseWeightPolicy(std::int64_t total_rsteps, std::int64_t max_label) {
        max_abs_exp = std::max<std::int64_t>(1, total_rsteps * max_label);
        width = static_cast<std::size_t>(2 * max_abs_exp + 1);
        buffers.assign(static_cast<std::size_t>(total_rsteps) + 1, {});
        occupied.assign(buffers.size(), {0, 0});
        for (auto& b : buffers) b.assign(width, 0);
        const std::size_t mid = static_cast<std::size_t>(max_abs_exp);
        buffers[0][mid] = 1;
        occupied[0] = {mid, mid};
        acc.assign(width, 0);
        acc_lo = width;
        acc_hi = 0;
    }

    void push_rstep(std::int64_t label, int depth) {
        const std::size_t d = static_cast<std::size_t>(depth);
        const std::size_t l = static_cast<std::size_t>(label < 0 ? -label : label);
        const auto [lo, hi] = occupied[d];
        auto& in = buffers[d];
        auto& out = buffers[d + 1];
        const std::size_t nlo = lo - l, nhi = hi + l;
        std::fill(out.begin() + static_cast<std::ptrdiff_t>(nlo),
                  out.begin() + static_cast<std::ptrdiff_t>(nhi) + 1, 0);
        for (std::size_t idx = lo; idx <= hi; ++idx) {
            const std::int64_t c = in[idx];
            if (c == 0) continue;
            out[idx - l] += c;
            out[idx + l] += c;
        }
        occupied[d + 1] = {nlo, nhi};
    }

    void leaf(const PathFamily&, int depth) {
        const std::size_t d = static_cast<std::size_t>(depth);
        const auto [lo, hi] = occupied[d];
        const auto& in = buffers[d];
        for (std::size_t idx = lo; idx <= hi; ++idx) acc[idx] += in[idx];
        acc_lo = std::min(acc_lo, lo);
        acc_hi = std::max(acc_hi, hi);
    }

    LaurentPoly result(std::int64_t halvings) const {
        std::vector<LaurentPoly::Term> terms;
        const BigRational scale = pow2_rational(-halvings);
        for (std::size_t idx = acc_lo; idx <= acc_hi && acc_hi >= acc_lo; ++idx) {
            if (acc[idx] == 0) continue;
            terms.push_back({static_cast<std::int64_t>(idx) - max_abs_exp,
                             BigRational(static_cast<long>(acc[idx])) * scale});
        }
        return LaurentPoly::from_terms(std::move(terms));
    }
};

// Arbitrary-precision fallback for inputs outside the int64 safety bound.
struct BigWeightPolicy {
    struct ZPoly {
        std::vector<std::pair<std::int64_t, BigInt>> terms;  // ascending
    };
    std::vector<ZPoly> stack;  // stack[d] after d horizontal steps
    ZPoly acc;

    explicit BigWeightPolicy(std::int64_t total_rsteps) {
        stack.assign(static_cast<std::size_t>(total_rsteps) + 1, {});
        stack[0].terms.emplace_back(0, BigInt(1));
    }

    void push_rstep(std::int64_t label, int depth) {
        const std::int64_t l = label < 0 ? -label : label;
        const ZPoly& p = stack[static_cast<std::size_t>(depth)];
        ZPoly& out = stack[static_cast<std::size_t>(depth) + 1];
        out.terms.clear();
        std::size_t i = 0, j = 0;
        while (i < p.terms.size() || j < p.terms.size()) {
            const std::int64_t ei = i < p.terms.size() ? exp_add(p.terms[i].first, l)
                                                       : std::numeric_limits<std::int64_t>::max();
            const std::int64_t ej = j < p.terms.size() ? exp_sub(p.terms[j].first, l)
                                                       : std::numeric_limits<std::int64_t>::max();
            if (ei < ej) {
                out.terms.emplace_back(ei, p.terms[i].second);
                ++i;
            } else if (ej < ei) {
                out.terms.emplace_back(ej, p.terms[j].second);
                ++j;
            } else {
                out.terms.emplace_back(ei, p.terms[i].second + p.terms[j].second);
                ++i;
                ++j;
            }
        }
    }

    void leaf(const PathFamily&, int depth) {
        const ZPoly& p = stack[static_cast<std::size_t>(depth)];
        ZPoly merged;
        merged.terms.reserve(acc.terms.size() + p.terms.size());
        std::size_t i = 0, j = 0;
        while (i < acc.terms.size() && j < p.terms.size()) {
            if (acc.terms[i].first < p.terms[j].first) {
                merged.terms.push_back(std::move(acc.terms[i++]));
            } else if (acc.terms[i].first > p.terms[j].first) {
                merged.terms.push_back(p.terms[j++]);
            } else {
                merged.terms.emplace_back(acc.terms[i].first, acc.terms[i].second + p.terms[j].second);
                ++i;
                ++j;
            }
        }
        for (; i < acc.terms.size(); ++i) merged.terms.push_back(std::move(acc.terms[i]));
        for (; j < p.terms.size(); ++j) merged.terms.push_back(p.terms[j]);
        acc = std::move(merged);
    }

    LaurentPoly result(std::int64_t halvings) const {
        const BigRational scale = pow2_rational(-halvings);
        std::vector<LaurentPoly::Term> terms;
        terms.reserve(acc.terms.size());
        for (const auto& [e, c] : acc.terms) terms.push_back({e, BigRational(c) * scale});
        return LaurentPoly::from_terms(std::move(terms));
    }
};

bool int64_coefficients_safe(const RegionGeometry& geom, std::uint64_t cap) {
    // Each family contributes at most C(H, H/2) to a coefficient and there
    // are at most cap families, so cap * C(H, H/2) bounds the accumulator.
    const unsigned long h = static_cast<unsigned long>(geom.total_rsteps);
    BigInt bound;
    mpz_bin_uiui(bound.get_mpz_t(), h, h / 2);
    bound *= BigInt(static_cast<unsigned long>(cap));
    return bound <= BigInt("4611686018427387904");  // 2^62
}

}  // namespace

void enumerate_families(const RegionSpec& region, std::uint64_t cap, const FamilyVisitor& visit) {
    region.validate();
    VisitPolicy policy{visit};
    FamilySearch<VisitPolicy> search(region, cap, policy);
    search.run();
}

LaurentPoly family_gf(const RegionSpec& region, std::uint64_t cap) {
    region.validate();
    const RegionGeometry geom(region);
    if (int64_coefficients_safe(geom, cap) && geom.total_rsteps * geom.max_label < 20000) {
        DenseWeightPolicy policy(geom.total_rsteps, geom.max_label);
        FamilySearch<DenseWeightPolicy> search(region, cap, policy);
        search.run();
        return policy.result(geom.total_rsteps);
    }
    BigWeightPolicy policy(geom.total_rsteps);
    FamilySearch<BigWeightPolicy> search(region, cap, policy);
    search.run();
    return policy.result(geom.total_rsteps);
}

std::uint64_t family_count(const RegionSpec& region, std::uint64_t cap) {
    std::uint64_t n = 0;
    const FamilyVisitor counter = [&n](const PathFamily&) { ++n; };
    enumerate_families(region, cap, counter);
    return n;
}

}  // namespace qhex
