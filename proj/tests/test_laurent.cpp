#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "qhex/laurent.hpp"
#include "qhex/rational_fn.hpp"
#include "qhex/verify.hpp"
#include "test_util.hpp"

using namespace qhex;

TEST_CASE("addition merges and cancels") {
    CHECK(q_monomial(1) + q_monomial(1, -1, 1) == LaurentPoly::zero());
    CHECK(LP({{0, 1, 1}, {2, 1, 2}}) + LP({{2, 1, 2}}) == LP({{0, 1, 1}, {2, 1, 1}}));
    // w1 + w1 doubles the halves away.
    const LaurentPoly w1 = LP({{1, 1, 2}, {-1, 1, 2}});
    CHECK(w1 + w1 == LP({{1, 1, 1}, {-1, 1, 1}}));
}

TEST_CASE("multiplication is exact convolution") {
    CHECK(q_monomial(-1) * q_monomial(1) == LaurentPoly::one());
    CHECK(LP({{1, 1, 1}, {-1, 1, 1}}) * LP({{2, 1, 1}, {-2, 1, 1}}) ==
          LP({{3, 1, 1}, {1, 1, 1}, {-1, 1, 1}, {-3, 1, 1}}));
    CHECK(LP({{0, 1, 1}, {1, -1, 1}}) * LP({{0, 1, 1}, {1, 1, 1}}) == LP({{0, 1, 1}, {2, -1, 1}}));
}

TEST_CASE("power substitution scales exponents") {
    const LaurentPoly p = LP({{0, 1, 1}, {1, -1, 1}});
    CHECK(p.substitute_power(4) == LP({{0, 1, 1}, {4, -1, 1}}));
    const LaurentPoly r = q_monomial(-2) * p;
    CHECK(r.substitute_power(1) == r);
    // q^-2 (1-q)(1-q^2) -> q^-8 (1-q^4)(1-q^8)
    const LaurentPoly det_small =
        q_monomial(-2) * LP({{0, 1, 1}, {1, -1, 1}}) * LP({{0, 1, 1}, {2, -1, 1}});
    const LaurentPoly expected =
        q_monomial(-8) * LP({{0, 1, 1}, {4, -1, 1}}) * LP({{0, 1, 1}, {8, -1, 1}});
    CHECK(det_small.substitute_power(4) == expected);
    CHECK_THROWS_AS(p.substitute_power(0), std::invalid_argument);
}

TEST_CASE("rational function equality is cross-multiplication") {
    const RationalFn lhs(LP({{0, 1, 1}, {2, -1, 1}}), LP({{0, 1, 1}, {1, -1, 1}}));
    CHECK(rf_eq(lhs, RationalFn(LP({{0, 1, 1}, {1, 1, 1}}), LaurentPoly::one())));
    CHECK(rf_eq(RationalFn(LaurentPoly::one(), LaurentPoly::one()),
                RationalFn(q_monomial(1), q_monomial(1))));
    CHECK_FALSE(rf_eq(lhs, RationalFn::from_poly(LaurentPoly::one())));
    CHECK_THROWS_AS(RationalFn(LaurentPoly::one(), LaurentPoly::zero()), ZeroDenominator);
}

TEST_CASE("exact division") {
    const LaurentPoly a = LP({{0, 1, 1}, {2, -1, 1}});  // 1 - q^2
    CHECK(divide_exact(a, LP({{0, 1, 1}, {1, 1, 1}})) == LP({{0, 1, 1}, {1, -1, 1}}));
    CHECK(divide_exact(LaurentPoly::zero(), a) == LaurentPoly::zero());
    // Laurent shifts divide out as units.
    CHECK(divide_exact(q_monomial(-5) * a, q_monomial(3)) == q_monomial(-8) * a);
    CHECK_THROWS_AS(divide_exact(LaurentPoly::one(), a), InexactDivision);
    CHECK_THROWS_AS(divide_exact(a, LaurentPoly::zero()), ZeroDenominator);
}

TEST_CASE("evaluation is exact") {
    const LaurentPoly p = LP({{-1, 1, 2}, {1, 1, 2}});
    CHECK(p.eval(make_rational(2, 1)) == make_rational(5, 4));
    CHECK_THROWS_AS(p.eval(BigRational(0)), std::domain_error);
    CHECK(LP({{0, 3, 1}, {2, 1, 1}}).eval(BigRational(0)) == BigRational(3));
}

TEST_CASE("exponent overflow is a hard error") {
    const std::int64_t huge = std::numeric_limits<std::int64_t>::max() - 1;
    const LaurentPoly p = q_monomial(huge);
    CHECK_THROWS_AS(p * p, ExponentOverflow);
    CHECK_THROWS_AS(p.substitute_power(3), ExponentOverflow);
}

TEST_CASE("canonical JSON round-trips bit-exactly") {
    const std::string json = "{\"var\":\"q\",\"terms\":[{\"exp\":-3,\"num\":\"1\",\"den\":\"4\"},"
                             "{\"exp\":0,\"num\":\"-2\",\"den\":\"1\"}]}";
    CHECK(to_canonical_json(laurent_from_json(json)) == json);
    CHECK(to_canonical_json(LaurentPoly::zero()) == "{\"var\":\"q\",\"terms\":[]}");

    SUBCASE("non-canonical input is rejected") {
        CHECK_THROWS(laurent_from_json("{\"var\":\"q\",\"terms\":[{\"exp\":0,\"num\":\"2\",\"den\":\"4\"}]}"));
        CHECK_THROWS(laurent_from_json("{\"var\":\"q\",\"terms\":[{\"exp\":0,\"num\":\"1\",\"den\":\"0\"}]}"));
        CHECK_THROWS(laurent_from_json("{\"var\":\"q\",\"terms\":[{\"exp\":0,\"num\":\"0\",\"den\":\"1\"}]}"));
        CHECK_THROWS(laurent_from_json(
            "{\"var\":\"q\",\"terms\":[{\"exp\":1,\"num\":\"1\",\"den\":\"1\"},"
            "{\"exp\":0,\"num\":\"1\",\"den\":\"1\"}]}"));
        CHECK_THROWS(laurent_from_json("{\"var\":\"x\",\"terms\":[]}"));
    }
}

TEST_CASE("ring laws hold on randomized inputs") {
    const auto report = verify::sweep_ring_laws(7, 80, verify::SweepOptions{false});
    CHECK(report.failed == 0);
    CHECK(report.passed == report.total);
}
