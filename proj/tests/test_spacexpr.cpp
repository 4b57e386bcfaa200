#include "polyco/spacexpr.hpp"
#include "polyco/verify.hpp"

#include <doctest.h>

using namespace polyco;

namespace {

SpaceExpr S(int n) { return SpaceExpr::sphere(n); }
SpaceExpr atom(const std::string& name, int c = 2) {
    AtomSpec spec;
    spec.name = name;
    spec.conn = c;
    return SpaceExpr::atom(spec);
}
std::string norm(const SpaceExpr& e) { return to_text(normalize(e)); }

}  // namespace

TEST_CASE("sphere arithmetic and absorption") {
    CHECK(normalize(SpaceExpr::smash({S(2), S(3)})) == S(5));
    CHECK(normalize(SpaceExpr::smash({atom("X"), SpaceExpr::point()})).is_point());
    CHECK(normalize(SpaceExpr::smash({S(0), atom("X")})) == atom("X"));
    CHECK(normalize(SpaceExpr::susp(S(2))) == S(3));
    CHECK(normalize(SpaceExpr::susp(SpaceExpr::point())).is_point());
    CHECK(normalize(SpaceExpr::loop(SpaceExpr::point())).is_point());
    CHECK(normalize(SpaceExpr::wedge({})).is_point());
    CHECK(normalize(SpaceExpr::product({SpaceExpr::point(), atom("X")})) == atom("X"));
    CHECK(norm(SpaceExpr::smash({S(1), atom("X"), atom("Y")})) == "Σ(X ∧ Y)");
}

TEST_CASE("associative constructors flatten and sort") {
    const auto x = atom("X"), y = atom("Y"), z = atom("Z");
    CHECK(expr_equal(SpaceExpr::wedge({x, y}), SpaceExpr::wedge({y, x})));
    CHECK(expr_equal(SpaceExpr::wedge({x, SpaceExpr::wedge({y, z})}), SpaceExpr::wedge({SpaceExpr::wedge({z, x}), y})));
    CHECK_FALSE(expr_equal(SpaceExpr::wedge({x, y}), SpaceExpr::product({x, y})));
    CHECK(norm(SpaceExpr::product({y, x, SpaceExpr::product({x})})) == "X × X × Y");
    CHECK(norm(SpaceExpr::wedge({x, x, y})) == "X^{∨2} ∨ Y");
}

TEST_CASE("loops") {
    const auto x = atom("X");
    CHECK(normalize(SpaceExpr::loop(SpaceExpr::loop(x), 2)) == normalize(SpaceExpr::loop(x, 3)));
    CHECK(norm(SpaceExpr::loop(x, 3)) == "Ω^3X");
    CHECK(norm(SpaceExpr::loop(SpaceExpr::product({x, atom("Y")}))) == "ΩX × ΩY");
    CHECK(normalize(SpaceExpr::loop(cp_infinity())) == S(1));
    CHECK(normalize(SpaceExpr::loop(cp_infinity(), 2)) == normalize(SpaceExpr::loop(S(1))));
    CHECK(normalize(SpaceExpr::loop(S(1))).kind() == SpaceExpr::Kind::Loop);
    AtomSpec cone;
    cone.name = "CX";
    cone.contractible = true;
    CHECK(normalize(SpaceExpr::loop(SpaceExpr::atom(cone))).is_point());
}

TEST_CASE("mapping spaces reduce on certified complexes") {
    const auto w = SpaceExpr::susp(atom("W"));
    // Sigma of two points is a circle, so Map_* is a single loop.
    auto two_points = ComplexRef::make(SimplicialComplex::discrete(2), "K");
    CHECK(normalize(SpaceExpr::map_from_susp_realization(two_points, w)) == normalize(SpaceExpr::loop(w)));
    auto bd = ComplexRef::make(SimplicialComplex::simplex_boundary(3), "K");
    CHECK(normalize(SpaceExpr::map_from_susp_realization(bd, w)) == normalize(SpaceExpr::loop(w, 2)));
    auto simplex = ComplexRef::make(SimplicialComplex::simplex(3), "K");
    CHECK(normalize(SpaceExpr::map_from_susp_realization(simplex, w)).is_point());
    auto three = ComplexRef::make(SimplicialComplex::discrete(3), "K");
    CHECK(norm(SpaceExpr::map_from_susp_realization(three, w)) == "ΩΣW × ΩΣW");
    auto square = ComplexRef::make(SimplicialComplex::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}), "Q");
    const auto symbolic = normalize(SpaceExpr::map_from_susp_realization(square, w));
    CHECK(symbolic.kind() == SpaceExpr::Kind::Map);
    CHECK(to_text(symbolic) == "Map_*(Σ|Q|, ΣW)");
}

TEST_CASE("realizations") {
    CHECK(normalize(SpaceExpr::realization(ComplexRef::make(SimplicialComplex::discrete(2), "K"))) == S(0));
    CHECK(norm(SpaceExpr::realization(ComplexRef::make(SimplicialComplex::discrete(3), "K"))) == "(S^0)^{∨2}");
    CHECK(normalize(SpaceExpr::realization(ComplexRef::make(SimplicialComplex::simplex(2), "K"))).is_point());
}

TEST_CASE("connectivity") {
    CHECK(conn(SpaceExpr::loop(S(3))) == 1);
    CHECK(conn(SpaceExpr::smash({SpaceExpr::loop(S(3)), SpaceExpr::loop(S(3))})) == 3);
    CHECK(conn(SpaceExpr::susp(atom("X", 4))) == 5);
    CHECK(conn(SpaceExpr::wedge({S(2), S(5)})) == 1);
    CHECK(conn(SpaceExpr::point()) == SpaceExpr::kInfiniteConn);
    CHECK(conn(SpaceExpr::loop(S(2), 2)) == -1);
    CHECK_THROWS_AS(conn(SpaceExpr::loop(S(1), 2)), ConnectivityError);
    CHECK_THROWS_WITH(conn(SpaceExpr::loop(S(0))), "connectivity underflow");
}

TEST_CASE("vertex pairs derive their flags") {
    const auto c = VertexPair::constant(S(3));
    CHECK(c.codomain_is_point);
    CHECK_FALSE(c.domain_contractible);
    CHECK(c.simply_connected);
    const auto p = VertexPair::path_fibration(S(2));
    CHECK(p.domain_contractible);
    CHECK(p.simply_connected);
    CHECK(p.domain.is_point());
    CHECK_FALSE(VertexPair::constant(S(1)).simply_connected);
    CHECK_THROWS_AS(VertexPair::make(S(2), S(3), true), InputError);
}

TEST_CASE("JSON round trip of expression trees") {
    const auto e = SpaceExpr::loop(
        SpaceExpr::wedge({SpaceExpr::susp(SpaceExpr::smash({cp_infinity(), S(2)})), SpaceExpr::product({S(3), atom("X")})}), 2);
    const auto j = to_json(e);
    CHECK(expr_from_json(j) == e);
    CHECK(to_json(expr_from_json(j)).dump() == j.dump());
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(R"({"kind":"blob"})")), InputError);
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(R"({"kind":"sphere"})")), InputError);
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse(R"({"kind":"sphere","n":-1})")), InputError);
    CHECK_THROWS_AS(expr_from_json(nlohmann::json::parse("[1]")), InputError);
}
