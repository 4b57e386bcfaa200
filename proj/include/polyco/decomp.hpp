#pragma once

#include "polyco/liealg.hpp"
#include "polyco/scomplex.hpp"
#include "polyco/spacexpr.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyco {

enum class Theorem { General, Wedge, ContractibleDomain, Porter, HiltonMilnor, DisjointUnion };

/// "general", "wedge", "contractible-domain", "porter", "hilton-milnor", "disjoint-union"
std::string theorem_tag(Theorem t);

/// Where a factor comes from.
struct Provenance {
    enum class Kind { Base, Vertex, Face, Bracket };

    Kind kind = Kind::Base;
    int vertex = 0;
    VertexSet face;
    std::optional<Bracket> bracket;

    static Provenance base() { return {}; }
    static Provenance of_vertex(int v) { return {Kind::Vertex, v, {}, std::nullopt}; }
    static Provenance of_face(VertexSet f) { return {Kind::Face, 0, f, std::nullopt}; }
    static Provenance of_bracket(Bracket b) { return {Kind::Bracket, 0, {}, std::move(b)}; }

    /// "base", "vertex 3", "face {1,2}", or the bracket serialization.
    std::string to_string() const;
};

struct Factor {
    SpaceExpr expr;
    int multiplicity = 1;
    Provenance provenance;
    /// Bracket weight; 0 for base and vertex factors.
    int weight = 0;
    /// I_b for bracket factors.
    VertexSet support;
};

struct Decomposition {
    Theorem theorem = Theorem::General;
    std::vector<Factor> factors;
    std::optional<int> weight_bound;
    /// Set when brackets whose factors vanish below this degree were pruned.
    std::optional<int> degree_bound;
    std::vector<std::string> notes;

    /// Distinct factor expressions with total multiplicity, sorted.
    std::vector<std::pair<SpaceExpr, int>> multiset() const;
    int bracket_factor_count() const;
};

/// Truncation controls shared by the bracket-indexed theorems.
struct Truncation {
    int weight_bound = 1;
    /// When set, brackets whose factor has no rational homology in degrees
    /// 1..N are skipped before they are built.
    std::optional<int> degree_bound;
};

// ------------------------------------------------------------- diagrams

struct DiagramObject {
    VertexSet face;
    SpaceExpr object;
};

/// The map D(source) -> D(target) for target a proper subset of source.
/// Coordinates in `applied` use f_i (or Omega f_i); all others are identities.
struct DiagramMorphism {
    VertexSet source;
    VertexSet target;
    std::vector<int> applied;
};

struct DiagramDescription {
    SimplicialComplex complex = SimplicialComplex::empty(0);
    /// Empty for the plain coproduct diagram.
    std::vector<int> weights;
    std::vector<DiagramObject> objects;
    std::vector<DiagramMorphism> morphisms;

    const SpaceExpr& object_at(VertexSet face) const;
};

/// D(sigma) = wedge of Y_i(sigma), Y_i = X_i on sigma and A_i off sigma.
DiagramDescription coproduct_diagram(const SimplicialComplex& k, const PairAssignment& pairs);
/// D(sigma) = Sigma of the smash of (Omega Y_i(sigma))^{k_i}.
DiagramDescription smash_coproduct(const SimplicialComplex& k, const PairAssignment& pairs,
                                   const std::vector<int>& weights);

/// Closed forms of the coproduct for a simplex, discrete K with A = *,
/// the boundary of an edge with contractible domains, and the void complex.
std::optional<SpaceExpr> evaluate_special(const SimplicialComplex& k, const PairAssignment& pairs);

// ------------------------------------------------------------- theorems

/// Wedge over I with |I| >= 2 of Sigma(smash of Omega X_i, i in I), |I|-1 times.
SpaceExpr porter_fiber(const std::vector<SpaceExpr>& spaces);
Decomposition porter_loop_decomp(const std::vector<SpaceExpr>& spaces);
Decomposition hilton_milnor(const std::vector<SpaceExpr>& spaces, const Truncation& t);

Decomposition loop_decompose(const SimplicialComplex& k, const PairAssignment& pairs, const Truncation& t);
Decomposition loop_decompose_wedge(const SimplicialComplex& k, const std::vector<SpaceExpr>& spaces,
                                   const Truncation& t);
Decomposition loop_decompose_contractible(const SimplicialComplex& k, const PairAssignment& pairs,
                                          const Truncation& t);

/// (face sigma, Sigma X^{smash sigma}) for every nonempty face.
std::vector<std::pair<VertexSet, SpaceExpr>> bbcg_wedge_splitting(const SimplicialComplex& k,
                                                                  const std::vector<SpaceExpr>& spaces);
/// (I not in K, Sigma(|K_I| smash X^{smash I})) for every missing subset.
std::vector<std::pair<VertexSet, SpaceExpr>> bbcg_cone_splitting(const SimplicialComplex& k,
                                                                 const std::vector<SpaceExpr>& spaces);

// -------------------------------------------------- structural operations

struct ReducedInput {
    SimplicialComplex complex;
    PairAssignment pairs;
};

/// Removes the apex m of K = K' * {m} when its domain is a point.
ReducedInput join_vertex_reduce(const SimplicialComplex& k, const PairAssignment& pairs);

struct SquareCorner {
    std::string name;
    SimplicialComplex complex;
    /// Closed form when evaluate_special applies.
    std::optional<SpaceExpr> value;
};

struct PullbackSquare {
    /// K, K1-bar, K2-bar, L-bar, all on the ground set of K.
    std::vector<SquareCorner> corners;
    std::vector<std::string> maps;
};

/// K = K1 glued to K2 along L (see union_along); pairs index the vertices of K.
PullbackSquare pullback_square(const SimplicialComplex& k1, const SimplicialComplex& k2, const SimplicialComplex& l,
                               const PairAssignment& pairs);

/// Union of the A = * decompositions of the two components.
Decomposition disjoint_union_decomp(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                    const std::vector<SpaceExpr>& spaces, const Truncation& t);

// -------------------------------------------------------------- reports

std::string to_text(const Decomposition& d);
nlohmann::json to_json(const Decomposition& d);
std::string to_text(const DiagramDescription& d);
nlohmann::json to_json(const DiagramDescription& d);

}  // namespace polyco
