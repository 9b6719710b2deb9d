#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "qhex/laurent.hpp"
#include "qhex/region.hpp"

// Term-list literal: LP({{exp, num, den}, ...}).
inline qhex::LaurentPoly LP(std::initializer_list<std::tuple<long long, long, long>> ts) {
    std::vector<qhex::LaurentPoly::Term> terms;
    for (const auto& [e, n, d] : ts) terms.push_back({e, qhex::make_rational(n, d)});
    return qhex::LaurentPoly::from_terms(std::move(terms));
}

inline qhex::DentSequence DS(std::initializer_list<long long> vs) {
    return qhex::DentSequence(std::vector<std::int64_t>(vs.begin(), vs.end()));
}

inline qhex::LaurentPoly q_monomial(long long exp, long num = 1, long den = 1) {
    return qhex::LaurentPoly::monomial(qhex::make_rational(num, den), exp);
}
