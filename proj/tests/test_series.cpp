#include "oracles.hpp"
#include "polyco/series.hpp"
#include "polyco/verify.hpp"

#include <doctest.h>

using namespace polyco;

namespace {

SpaceExpr S(int n) { return SpaceExpr::sphere(n); }

std::vector<long long> integers(const PoincareSeries& p) {
    std::vector<long long> out;
    for (const auto& c : p.coefficients()) {
        REQUIRE(boost::multiprecision::denominator(c) == 1);
        out.push_back(boost::multiprecision::numerator(c).convert_to<long long>());
    }
    return out;
}

std::vector<long long> series_ints(const SpaceExpr& e, int n) {
    const auto s = series_of(e, n);
    REQUIRE_MESSAGE(s.supported(), s.reason);
    return integers(*s.series);
}

}  // namespace

TEST_CASE("truncated arithmetic") {
    const int n = 3;
    const PoincareSeries one_minus_t({1, -1}, n);
    CHECK(integers(invert(one_minus_t)) == std::vector<long long>{1, 1, 1, 1});
    const PoincareSeries p({2, 0, 5, 7}, n);
    CHECK(mul(p, PoincareSeries::one(n)) == p);
    CHECK(reduced(PoincareSeries::one(n)) == PoincareSeries(n));
    CHECK(shift(p) == PoincareSeries({0, 2, 0, 5}, n));
    CHECK_THROWS_WITH(invert(PoincareSeries({0, 1}, n)), "non-invertible series");
    CHECK_THROWS_AS(add(p, PoincareSeries(4)), std::invalid_argument);
    // a rational constant term is still a unit
    CHECK(mul(invert(p), p) == PoincareSeries::one(n));
}

TEST_CASE("first difference of the square counterexample series") {
    const int n = 5;
    const PoincareSeries lhs = invert(PoincareSeries({1, -4, 6, -4, 1}, n));
    const PoincareSeries rhs = mul(PoincareSeries({1, 2, 1}, n), invert(PoincareSeries({1, -2, -1}, n)));
    const auto c = compare(lhs, rhs);
    CHECK_FALSE(c.equal);
    CHECK(c.degree == 3);
    CHECK(c.lhs == 20);
    CHECK(c.rhs == 24);
    CHECK(compare(lhs, lhs).equal);
}

TEST_CASE("series of spheres and their loops") {
    CHECK(series_ints(SpaceExpr::point(), 3) == std::vector<long long>{1, 0, 0, 0});
    CHECK(series_ints(SpaceExpr::loop(S(3)), 6) == std::vector<long long>{1, 0, 1, 0, 1, 0, 1});
    CHECK(series_ints(SpaceExpr::loop(S(2)), 4) == std::vector<long long>{1, 1, 1, 1, 1});
    CHECK(series_ints(SpaceExpr::loop(SpaceExpr::wedge({S(2), S(2)})), 4) ==
          std::vector<long long>{1, 2, 4, 8, 16});
    // Omega^2 S^4: K(Q,2) x K(Q,5) rationally
    CHECK(series_ints(SpaceExpr::loop(S(4), 2), 7) ==
          oracle::times(oracle::geometric(oracle::poly({0, 0, 1}, 7)), oracle::poly({1, 0, 0, 0, 0, 1}, 7)));
    CHECK_FALSE(series_of(SpaceExpr::loop(S(1)), 4).supported());
    CHECK_FALSE(series_of(S(0), 4).supported());
}

TEST_CASE("series of composite expressions") {
    const int n = 8;
    CHECK(series_ints(SpaceExpr::wedge({S(2), S(3)}), n) == oracle::poly({1, 0, 1, 1}, n));
    CHECK(series_ints(SpaceExpr::product({S(2), S(3)}), n) == oracle::poly({1, 0, 1, 1, 0, 1}, n));
    CHECK(series_ints(SpaceExpr::smash({S(2), cp_infinity()}), n) == oracle::poly({1, 0, 0, 0, 1, 0, 1, 0, 1}, n));
    // Bott-Samelson on CP^inf: 1/(1 - (t^2 + t^4 + ...))
    const auto cp_reduced = oracle::divide(oracle::poly({0, 0, 1}, n), oracle::poly({1, 0, -1}, n));
    CHECK(series_ints(SpaceExpr::loop(SpaceExpr::susp(cp_infinity())), n) == oracle::geometric(cp_reduced));
    AtomSpec opaque;
    opaque.name = "Z";
    opaque.conn = 3;
    const auto r = series_of(SpaceExpr::wedge({S(2), SpaceExpr::atom(opaque)}), n);
    CHECK_FALSE(r.supported());
    CHECK(r.reason.find("Z") != std::string::npos);
}

TEST_CASE("rendering") {
    const PoincareSeries p({1, 2, 0, -3}, 3);
    CHECK(to_string(p) == "1 + 2t - 3t^3");
    CHECK(to_string(PoincareSeries(2)) == "0");
    CHECK(to_string(PoincareSeries({Rational(1, 2), 1}, 1)) == "(1/2) + t");
    CHECK(to_json(p).dump() == "[[1,1],[2,1],[0,1],[-3,1]]");
}
