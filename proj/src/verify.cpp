#include "qhex/verify.hpp"

#include <algorithm>
#include <sstream>

#include "qhex/rng.hpp"

namespace qhex::verify {

void SweepReport::merge(const SweepReport& other) {
    total += other.total;
    passed += other.passed;
    failed += other.failed;
    skipped += other.skipped;
    if (first_failure.empty()) first_failure = other.first_failure;
}

SweepReport run_cases(const std::string& suite, std::size_t n,
                      const std::function<CaseResult(std::size_t)>& fn, const SweepOptions& opt) {
    std::vector<CaseResult> results(n);
    auto guarded = [&](std::size_t i) {
        try {
            results[i] = fn(i);
        } catch (const ZeroDenominator& e) {
            results[i] = CaseResult::skip(e.what());
        } catch (const std::exception& e) {
            results[i] = CaseResult::fail(e.what());
        }
    };
#ifdef QHEX_HAVE_OPENMP
    if (opt.parallel && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            guarded(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    }
#else
    (void)opt;
    for (std::size_t i = 0; i < n; ++i) guarded(i);
#endif
    SweepReport report;
    report.suite = suite;
    report.total = n;
    for (std::size_t i = 0; i < n; ++i) {
        const CaseResult& r = results[i];
        if (r.skipped) {
            ++report.skipped;
        } else if (r.ok) {
            ++report.passed;
        } else {
            ++report.failed;
            if (report.first_failure.empty()) {
                std::ostringstream os;
                os << "case " << i << ": " << r.message;
                report.first_failure = os.str();
            }
        }
    }
    return report;
}

std::vector<DentSequence> increasing_sequences(int length, std::int64_t lo, std::int64_t hi) {
    std::vector<DentSequence> out;
    if (length == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<std::int64_t> current;
    auto rec = [&](auto&& self, std::int64_t next_min, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(DentSequence(current));
            return;
        }
        for (std::int64_t v = next_min; v + remaining - 1 <= hi; ++v) {
            current.push_back(v);
            self(self, v + 1, remaining - 1);
            current.pop_back();
        }
    };
    rec(rec, lo, length);
    return out;
}

std::vector<PropMatrixSpec> random_prop_specs(std::size_t count, std::uint64_t seed, int max_m,
                                              int max_k, std::int64_t lo, std::int64_t hi) {
    SplitMix64 rng(seed);
    std::vector<PropMatrixSpec> out;
    out.reserve(count);
    while (out.size() < count) {
        const int m = static_cast<int>(rng.range(1, max_m));
        const int k = static_cast<int>(rng.range(0, max_k));
        std::vector<std::int64_t> pool;
        for (std::int64_t v = lo; v <= hi; ++v) pool.push_back(v);
        std::vector<std::int64_t> vals;
        for (int i = 0; i < m; ++i) {
            const std::size_t idx = static_cast<std::size_t>(rng.range(0, static_cast<long long>(pool.size()) - 1));
            vals.push_back(pool[idx]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
        }
        std::sort(vals.begin(), vals.end());
        out.emplace_back(k, DentSequence(std::move(vals)));
    }
    return out;
}

namespace {

std::string describe(const PropMatrixSpec& spec) {
    std::ostringstream os;
    os << "k=" << spec.k << " a=(";
    for (std::size_t i = 0; i < spec.a.size(); ++i) os << (i ? "," : "") << spec.a[i];
    os << ")";
    return os.str();
}

std::string describe(const RegionSpec& region) {
    std::ostringstream os;
    os << "m=" << region.m << " k=" << region.k << " dents=(";
    for (std::size_t i = 0; i < region.dents.size(); ++i) os << (i ? "," : "") << region.dents[i];
    os << ")";
    return os.str();
}

LaurentPoly random_poly(SplitMix64& rng) {
    const int nterms = static_cast<int>(rng.range(0, 4));
    std::vector<LaurentPoly::Term> terms;
    for (int t = 0; t < nterms; ++t) {
        long long num = rng.range(-4, 4);
        if (num == 0) continue;
        terms.push_back({rng.range(-3, 3), make_rational(num, rng.range(1, 3))});
    }
    return LaurentPoly::from_terms(std::move(terms));
}

PolyMatrix random_matrix(SplitMix64& rng, std::size_t n) {
    PolyMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m.at(i, j) = random_poly(rng);
    return m;
}

std::vector<RegionSpec> window_regions(int max_m, int max_k) {
    std::vector<RegionSpec> regions;
    for (int m = 1; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k)
            for (auto& d : increasing_sequences(m, -(static_cast<std::int64_t>(m) + k - 1), m - 1))
                regions.emplace_back(m, k, d);
    return regions;
}

}  // namespace

SweepReport sweep_ring_laws(std::uint64_t seed, std::size_t iters, const SweepOptions& opt) {
    return run_cases("ring", iters, [seed](std::size_t i) {
        SplitMix64 rng(seed + i);
        const LaurentPoly p = random_poly(rng), r = random_poly(rng), s = random_poly(rng);
        if ((p + r) + s != p + (r + s)) return CaseResult::fail("addition is not associative");
        if (p + r != r + p) return CaseResult::fail("addition is not commutative");
        if ((p * r) * s != p * (r * s)) return CaseResult::fail("multiplication is not associative");
        if (p * r != r * p) return CaseResult::fail("multiplication is not commutative");
        if (p * (r + s) != p * r + p * s) return CaseResult::fail("distributivity fails");
        const std::int64_t t = rng.range(1, 4);
        if ((p * r).substitute_power(t) != p.substitute_power(t) * r.substitute_power(t))
            return CaseResult::fail("power substitution is not multiplicative");
        BigRational x = make_rational(rng.range(1, 7), rng.range(1, 5));
        if ((p * r).eval(x) != p.eval(x) * r.eval(x))
            return CaseResult::fail("evaluation is not multiplicative");
        if ((p + r).eval(x) != p.eval(x) + r.eval(x))
            return CaseResult::fail("evaluation is not additive");
        const std::string json = to_canonical_json(p);
        if (to_canonical_json(laurent_from_json(json)) != json)
            return CaseResult::fail("JSON round-trip is not bit-exact");
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_qpoch(int max_m, int max_k, std::uint64_t seed, const SweepOptions& opt) {
    struct Case {
        int m, k, i;
        std::int64_t a;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k)
            for (std::int64_t a = -6; a <= 6; ++a)
                for (int i = 1; i <= m; ++i) cases.push_back({m, k, i, a});

    SweepReport split = run_cases("qpoch", cases.size(), [&cases](std::size_t idx) {
        const auto [m, k, i, a] = cases[idx];
        const LaurentPoly whole = qpoch(MonomialArg::plus(i - a), 1, 2LL * m + k - 2 * i);
        const LaurentPoly parts = qpoch(MonomialArg::plus(i - a), 1, m - i) *
                                  qpoch(MonomialArg::plus(m - a), 1, k) *
                                  qpoch(MonomialArg::plus(static_cast<std::int64_t>(m) + k - a), 1, m - i);
        if (whole != parts) {
            std::ostringstream os;
            os << "splitting fails at m=" << m << " k=" << k << " i=" << i << " a=" << a;
            return CaseResult::fail(os.str());
        }
        return CaseResult::pass();
    }, opt);

    SweepReport extra = run_cases("qpoch", 80, [seed](std::size_t i) {
        SplitMix64 rng(seed + 1000 + i);
        const MonomialArg a{rng.range(0, 1) ? +1 : -1, rng.range(-5, 5)};
        const std::int64_t n = rng.range(0, 8);
        const LaurentPoly lhs = qpoch(a, 1, n + 1);
        const LaurentPoly rhs =
            qpoch(a, 1, n) * (LaurentPoly::one() -
                              LaurentPoly::monomial(BigRational(a.sign), exp_add(a.exponent, n)));
        if (lhs != rhs) return CaseResult::fail("one-step recurrence fails");
        const std::int64_t l = rng.range(-20, 20);
        if (weight(l) != weight(-l)) return CaseResult::fail("weight is not symmetric in the label");
        return CaseResult::pass();
    }, opt);

    split.merge(extra);
    return split;
}

SweepReport sweep_gf_closed_vs_dp(std::int64_t base_range, std::int64_t max_delta,
                                  const SweepOptions& opt) {
    struct Case {
        std::int64_t a, b, dx, dy;
    };
    std::vector<Case> cases;
    for (std::int64_t a = -base_range; a <= base_range; ++a)
        for (std::int64_t b = -base_range; b <= base_range; ++b)
            for (std::int64_t dx = 0; dx <= max_delta; ++dx)
                for (std::int64_t dy = 0; dy <= max_delta; ++dy) cases.push_back({a, b, dx, dy});
    return run_cases("gf", cases.size(), [&cases](std::size_t idx) {
        const auto [a, b, dx, dy] = cases[idx];
        const PathSpec spec{{a, b}, {a + dx, b - dy}};
        if (!rf_eq(gf_closed(spec), gf_dp(spec))) {
            std::ostringstream os;
            os << "closed form disagrees with recursion at (" << a << "," << b << ") -> ("
               << a + dx << "," << b - dy << ")";
            return CaseResult::fail(os.str());
        }
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_gf_entry_closed(int max_m, int max_k, const SweepOptions& opt) {
    struct Case {
        int i, m, k;
        std::int64_t a;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k)
            for (int i = 1; i <= m; ++i)
                for (std::int64_t a = -(static_cast<std::int64_t>(m) + k - 1); a <= i - 1; ++a)
                    cases.push_back({i, m, k, a});
    return run_cases("gf", cases.size(), [&cases](std::size_t idx) {
        const auto [i, m, k, a] = cases[idx];
        if (!rf_eq(gf_entry_closed(i, m, k, a), gf_entry(i, m, k, a))) {
            std::ostringstream os;
            os << "specialized closed entry disagrees at i=" << i << " m=" << m << " k=" << k
               << " a_j=" << a;
            return CaseResult::fail(os.str());
        }
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_det_engines(std::uint64_t seed, std::size_t iters, const SweepOptions& opt) {
    return run_cases("lgv", iters, [seed](std::size_t i) {
        SplitMix64 rng(seed + 2000 + i);
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 5));
        const PolyMatrix m = random_matrix(rng, n);
        if (det_cofactor(m) != det_bareiss(m))
            return CaseResult::fail("cofactor and fraction-free determinants disagree");
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_reduce_identity(int max_m, int max_k, const SweepOptions& opt) {
    const auto regions = window_regions(max_m, max_k);
    return run_cases("lgv", regions.size(), [&regions](std::size_t idx) {
        const RegionSpec& region = regions[idx];
        const auto [pf, reduced] = reduce(region);
        const LaurentPoly lhs = det(build_gf_matrix(region));
        const LaurentPoly det_reduced = det(reduced);
        if (lhs * pf.value.den != pf.value.num * det_reduced)
            return CaseResult::fail("prefactor split fails for " + describe(region));
        const LaurentPoly via_substitution =
            det(build_prop_matrix({region.k, region.dents})).substitute_power(4);
        if (det_reduced != via_substitution)
            return CaseResult::fail("reduced determinant is not the q^4 image for " + describe(region));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_prop1_random(std::size_t count, std::uint64_t seed, int max_m, int max_k,
                               const SweepOptions& opt) {
    const auto specs = random_prop_specs(count, seed, max_m, max_k, -6, 6);
    return run_cases("prop1", specs.size(), [&specs](std::size_t idx) {
        if (!prop1_check(specs[idx]))
            return CaseResult::fail("product formula fails for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_prop1_vanishing(int max_m, int max_k, const SweepOptions& opt) {
    std::vector<PropMatrixSpec> specs;
    for (int m = 1; m <= max_m; ++m) {
        for (int k = 1; k <= max_k; ++k) {
            for (auto& a : increasing_sequences(m, -4, static_cast<std::int64_t>(m) + k)) {
                const bool hits = std::any_of(a.values.begin(), a.values.end(), [&](std::int64_t v) {
                    return v >= m && v <= static_cast<std::int64_t>(m) + k - 1;
                });
                if (hits) specs.emplace_back(k, a);
            }
        }
    }
    return run_cases("prop1", specs.size(), [&specs](std::size_t idx) {
        if (!det(build_prop_matrix(specs[idx])).is_zero())
            return CaseResult::fail("determinant should vanish for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_dodgson(std::uint64_t seed, std::size_t iters, const SweepOptions& opt) {
    SweepReport random_part = run_cases("dodgson", iters, [seed](std::size_t i) {
        SplitMix64 rng(seed + 3000 + i);
        const std::size_t n = static_cast<std::size_t>(rng.range(2, 5));
        if (!dodgson_check(random_matrix(rng, n)))
            return CaseResult::fail("condensation fails on a random matrix");
        return CaseResult::pass();
    }, opt);

    const auto specs = random_prop_specs(40, seed + 4000, 5, 3, -5, 5);
    SweepReport structured = run_cases("dodgson", specs.size(), [&specs](std::size_t idx) {
        if (specs[idx].m() < 2) return CaseResult::pass();
        if (!dodgson_check(build_prop_matrix(specs[idx])))
            return CaseResult::fail("condensation fails for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);

    random_part.merge(structured);
    return random_part;
}

namespace {

std::vector<PropMatrixSpec> decomposition_sweep_specs(int max_m, int max_k) {
    std::vector<PropMatrixSpec> specs;
    for (int m = 2; m <= max_m; ++m)
        for (int k = 0; k <= max_k; ++k)
            for (auto& a : increasing_sequences(m, -5, 4))
                if (a[a.size() - 1] < m) specs.emplace_back(k, a);
    return specs;
}

}  // namespace

SweepReport sweep_submatrix(int max_m, int max_k, const SweepOptions& opt) {
    const auto specs = decomposition_sweep_specs(max_m, max_k);
    return run_cases("submatrix", specs.size(), [&specs](std::size_t idx) {
        if (!submatrix_identities_check(specs[idx]))
            return CaseResult::fail("decomposition fails for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_recursion(int max_m, int max_k, const SweepOptions& opt) {
    const auto specs = decomposition_sweep_specs(max_m, max_k);
    return run_cases("recursion", specs.size(), [&specs](std::size_t idx) {
        if (!recursion_check(specs[idx]))
            return CaseResult::fail("recursion fails for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_krat(int max_m, std::uint64_t seed, const SweepOptions& opt) {
    struct Case {
        int m;
        bool symbolic;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= std::min(max_m, 3); ++m) cases.push_back({m, true});
    for (int m = 4; m <= max_m; ++m) cases.push_back({m, false});
    return run_cases("krat", cases.size(), [&cases, seed](std::size_t idx) {
        const auto [m, symbolic] = cases[idx];
        const bool ok = symbolic ? krat_check(m) : krat_eval_check(m, seed + static_cast<std::uint64_t>(m));
        if (!ok) {
            std::ostringstream os;
            os << "determinant lemma fails at m=" << m << (symbolic ? " (symbolic)" : " (evaluated)");
            return CaseResult::fail(os.str());
        }
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_krat_specialize(std::size_t count, std::uint64_t seed, int max_m, int max_k,
                                  const SweepOptions& opt) {
    auto specs = random_prop_specs(count, seed, max_m, max_k, -6, 6);
    for (int m = 1; m <= 3; ++m)
        for (int k = 0; k <= 2; ++k)
            for (auto& a : increasing_sequences(m, -3, 3)) specs.emplace_back(k, a);
    return run_cases("krat", specs.size(), [&specs](std::size_t idx) {
        const bool via_lemma = krat_specialize_check(specs[idx]);
        const bool via_product = prop1_check(specs[idx]);
        if (via_lemma != via_product)
            return CaseResult::fail("specialization disagrees with the product formula for " +
                                    describe(specs[idx]));
        if (!via_lemma)
            return CaseResult::fail("specialization chain fails for " + describe(specs[idx]));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_endtoend(int max_m, int max_k, std::uint64_t cap, const SweepOptions& opt) {
    const auto regions = window_regions(max_m, max_k);
    return run_cases("endtoend", regions.size(), [&regions, cap](std::size_t idx) {
        const RegionSpec& region = regions[idx];
        const LaurentPoly via_enumeration = family_gf(region, cap);
        const LaurentPoly via_determinant = tiling_gf(region);
        if (via_enumeration != via_determinant)
            return CaseResult::fail("enumeration and determinant disagree for " + describe(region));
        const LaurentPoly via_product = closed_product_gf(region);
        if (via_determinant != via_product)
            return CaseResult::fail("determinant and closed product disagree for " + describe(region));
        return CaseResult::pass();
    }, opt);
}

SweepReport sweep_vanishing_regions(int max_m, int max_k, std::uint64_t cap, const SweepOptions& opt) {
    std::vector<RegionSpec> regions;
    for (int m = 1; m <= max_m; ++m) {
        for (int k = 0; k <= max_k; ++k) {
            for (auto& d : increasing_sequences(m, -(static_cast<std::int64_t>(m) + k - 1), m + 2)) {
                if (d[d.size() - 1] >= m) regions.emplace_back(m, k, d);
            }
        }
    }
    return run_cases("endtoend", regions.size(), [&regions, cap](std::size_t idx) {
        const RegionSpec& region = regions[idx];
        if (!family_gf(region, cap).is_zero())
            return CaseResult::fail("family enumeration should vanish for " + describe(region));
        if (!tiling_gf(region).is_zero())
            return CaseResult::fail("determinant should vanish for " + describe(region));
        return CaseResult::pass();
    }, opt);
}

std::vector<std::string> suite_names() {
    return {"ring", "qpoch", "gf", "lgv", "prop1", "dodgson", "submatrix", "recursion", "krat", "endtoend"};
}

SweepReport run_suite(const std::string& name, const SuiteParams& p) {
    auto m_or = [&](int dflt) { return p.max_m >= 0 ? p.max_m : dflt; };
    auto k_or = [&](int dflt) { return p.max_k >= 0 ? p.max_k : dflt; };
    if (name == "ring") return sweep_ring_laws(p.seed, 200, p.options);
    if (name == "qpoch") return sweep_qpoch(m_or(5), k_or(4), p.seed, p.options);
    if (name == "gf") {
        SweepReport r = sweep_gf_closed_vs_dp(5, 6, p.options);
        r.merge(sweep_gf_entry_closed(m_or(4), k_or(2), p.options));
        return r;
    }
    if (name == "lgv") {
        SweepReport r = sweep_det_engines(p.seed, 60, p.options);
        r.merge(sweep_reduce_identity(m_or(4), k_or(2), p.options));
        return r;
    }
    if (name == "prop1") {
        SweepReport r = sweep_prop1_random(200, p.seed, m_or(5), k_or(4), p.options);
        r.merge(sweep_prop1_vanishing(3, 3, p.options));
        return r;
    }
    if (name == "dodgson") return sweep_dodgson(p.seed, 60, p.options);
    if (name == "submatrix") return sweep_submatrix(m_or(5), k_or(3), p.options);
    if (name == "recursion") return sweep_recursion(m_or(5), k_or(3), p.options);
    if (name == "krat") {
        SweepReport r = sweep_krat(m_or(6), p.seed, p.options);
        r.merge(sweep_krat_specialize(200, p.seed, std::min(m_or(5), 5), k_or(4), p.options));
        return r;
    }
    if (name == "endtoend") {
        SweepReport r = sweep_endtoend(m_or(4), k_or(2), p.cap, p.options);
        r.merge(sweep_vanishing_regions(std::min(m_or(4), 3), 2, p.cap, p.options));
        return r;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qhex::verify
