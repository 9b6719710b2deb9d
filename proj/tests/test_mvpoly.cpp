#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhex/mvpoly.hpp"
#include "qhex/lgv.hpp"
#include "qhex/rng.hpp"
#include "test_util.hpp"

using namespace qhex;

namespace {

MultiLaurent var(const VarSet& vs, const std::string& name, std::int64_t e = 1) {
    return MultiLaurent::monomial(vs, BigRational(1), name, e);
}

}  // namespace

TEST_CASE("arithmetic with inverse monomials") {
    const VarSet vs({"X1", "X2"});
    CHECK(var(vs, "X1") * var(vs, "X1", -1) == MultiLaurent::constant(vs, BigRational(1)));
    CHECK((var(vs, "X1") - var(vs, "X2")) * (var(vs, "X1") + var(vs, "X2")) ==
          var(vs, "X1", 2) - var(vs, "X2", 2));
}

TEST_CASE("hand-expanded binomial product") {
    const VarSet vs({"X1", "A2", "C"});
    const MultiLaurent lhs =
        (var(vs, "C") * var(vs, "X1", -1) + var(vs, "A2")) * (var(vs, "X1") + var(vs, "A2"));
    const MultiLaurent expected = var(vs, "C") +
                                  var(vs, "A2") * var(vs, "C") * var(vs, "X1", -1) +
                                  var(vs, "A2") * var(vs, "X1") + var(vs, "A2", 2);
    CHECK(lhs == expected);
}

TEST_CASE("variable-set mismatch is an error") {
    const VarSet a({"X1"}), b({"X2"});
    CHECK_THROWS_AS(var(a, "X1") + var(b, "X2"), std::invalid_argument);
    CHECK_THROWS_AS(VarSet({"X1", "X1"}), std::invalid_argument);
}

TEST_CASE("determinant basics") {
    const VarSet vs({"X1", "X2"});
    CHECK(mv_det({{var(vs, "X1")}}) == var(vs, "X1"));
    const MultiLaurent p = var(vs, "X1") + var(vs, "X2");
    CHECK(mv_det({{p, p}, {p, p}}).is_zero());
    std::vector<std::vector<MultiLaurent>> big(5, std::vector<MultiLaurent>(5, p));
    CHECK_THROWS_AS(mv_det(big), SizeBoundExceeded);
}

TEST_CASE("evaluation") {
    const VarSet vs({"X1", "X2", "C"});
    const MultiLaurent diff = var(vs, "X1") - var(vs, "X2");
    CHECK(diff.eval({BigRational(2), BigRational(2), BigRational(1)}) == 0);
    const MultiLaurent ratio = var(vs, "C") * var(vs, "X1", -1);
    CHECK(ratio.eval({BigRational(2), BigRational(1), BigRational(3)}) == make_rational(3, 2));
    CHECK_THROWS_AS(ratio.eval({BigRational(0), BigRational(1), BigRational(3)}), std::domain_error);
    CHECK((var(vs, "X1") * var(vs, "X2")).eval({BigRational(0), BigRational(5), BigRational(1)}) == 0);
}

TEST_CASE("evaluation is a ring homomorphism on random inputs") {
    const VarSet vs({"X1", "X2", "C"});
    SplitMix64 rng(99);
    auto random_mv = [&]() {
        std::vector<MultiLaurent::Term> terms;
        const int n = static_cast<int>(rng.range(0, 4));
        for (int t = 0; t < n; ++t) {
            long long num = rng.range(-4, 4);
            if (num == 0) continue;
            terms.push_back({{rng.range(-2, 2), rng.range(-2, 2), rng.range(-2, 2)},
                             make_rational(num, rng.range(1, 3))});
        }
        return MultiLaurent::from_terms(vs, std::move(terms));
    };
    for (int iter = 0; iter < 40; ++iter) {
        const MultiLaurent p = random_mv(), r = random_mv();
        std::vector<BigRational> point{make_rational(rng.range(1, 9), rng.range(1, 5)),
                                       make_rational(rng.range(1, 9), rng.range(1, 5)),
                                       make_rational(rng.range(1, 9), rng.range(1, 5))};
        CHECK((p * r).eval(point) == p.eval(point) * r.eval(point));
        CHECK((p + r).eval(point) == p.eval(point) + r.eval(point));
    }
}

TEST_CASE("one-variable determinants agree with the univariate engine") {
    const VarSet vs({"q"});
    SplitMix64 rng(123);
    auto random_lp = [&]() {
        std::vector<LaurentPoly::Term> terms;
        const int n = static_cast<int>(rng.range(0, 3));
        for (int t = 0; t < n; ++t) {
            long long num = rng.range(-3, 3);
            if (num == 0) continue;
            terms.push_back({rng.range(-2, 2), make_rational(num, rng.range(1, 2))});
        }
        return LaurentPoly::from_terms(std::move(terms));
    };
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
        PolyMatrix m(n);
        std::vector<std::vector<MultiLaurent>> mv(n, std::vector<MultiLaurent>(n));
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = 1; j <= n; ++j) {
                m.at(i, j) = random_lp();
                mv[i - 1][j - 1] = MultiLaurent::embed(vs, m.at(i, j));
            }
        }
        CHECK(MultiLaurent::embed(vs, det(m)) == mv_det(mv));
    }
}
