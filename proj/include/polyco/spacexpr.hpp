#pragma once

#include "polyco/scomplex.hpp"

#include <json.hpp>

#include <climits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyco {

class SpaceExpr;

/// Raised when a connectivity estimate would require looping a space that
/// is not known to be connected.
class ConnectivityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Poincare series of an atom given as a rational function num/den with
/// integer coefficients (ascending powers).  den[0] must be nonzero.
struct SeriesSpec {
    std::vector<long long> numerator{1};
    std::vector<long long> denominator{1};

    bool operator==(const SeriesSpec&) const = default;
};

/// An opaque named space.  `loop` replaces Omega(atom) during normalisation
/// (for instance Omega CP^inf -> S^1); `series` is its rational Poincare series.
struct AtomSpec {
    std::string name;
    int conn = 0;
    bool contractible = false;
    std::shared_ptr<const SpaceExpr> loop;
    std::optional<SeriesSpec> series;
};

/// A simplicial complex tagged with a display label and, when available, the
/// sphere dimensions of a wedge equivalent to its realisation.
struct ComplexRef {
    SimplicialComplex complex;
    std::string label;
    std::optional<std::vector<int>> spheres;

    static std::shared_ptr<const ComplexRef> make(SimplicialComplex complex, std::string label);
};

struct SmashCoproductData;

/// Formal pointed-space expression.  Immutable; copies share structure.
class SpaceExpr {
public:
    enum class Kind { Point, Sphere, Atom, Loop, Susp, Smash, Wedge, Product, Map, Realization, SmashCoproduct };

    static constexpr int kInfiniteConn = INT_MAX / 4;

    SpaceExpr();  // Point
    static SpaceExpr point();
    static SpaceExpr sphere(int n);
    static SpaceExpr atom(AtomSpec spec);
    static SpaceExpr wedge(std::vector<SpaceExpr> children);
    static SpaceExpr product(std::vector<SpaceExpr> children);
    static SpaceExpr smash(std::vector<SpaceExpr> children);
    static SpaceExpr susp(SpaceExpr e);
    static SpaceExpr loop(SpaceExpr e, int count = 1);
    /// Map_*(Sigma|K|, target)
    static SpaceExpr map_from_susp_realization(std::shared_ptr<const ComplexRef> k, SpaceExpr target);
    /// |K|
    static SpaceExpr realization(std::shared_ptr<const ComplexRef> k);
    static SpaceExpr smash_coproduct(std::shared_ptr<const SmashCoproductData> data);

    Kind kind() const;
    bool is_point() const { return kind() == Kind::Point; }
    int sphere_dim() const;
    const AtomSpec& atom_spec() const;
    /// Operands of Wedge/Product/Smash.
    const std::vector<SpaceExpr>& children() const;
    /// Operand of Susp/Loop, target of Map.
    const SpaceExpr& child() const;
    int loop_count() const;
    const ComplexRef& complex_ref() const;
    const SmashCoproductData& coproduct() const;

private:
    struct Node;
    explicit SpaceExpr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// One coordinate of a pair assignment: the endpoints of f_i : X_i -> A_i.
struct VertexPair {
    SpaceExpr domain;
    SpaceExpr codomain;
    bool domain_contractible = false;
    bool codomain_is_point = false;
    bool simply_connected = false;

    /// Derives the flags from the expressions.  `declared_contractible`
    /// marks the domain contractible even when its expression is not a point
    /// (path spaces, cones); it is rejected if the domain is a sphere.
    static VertexPair make(SpaceExpr domain, SpaceExpr codomain, bool declared_contractible = false);
    /// X -> *
    static VertexPair constant(SpaceExpr x);
    /// PA -> A with PA a contractible atom.
    static VertexPair path_fibration(SpaceExpr a);
};

/// f = (f_1..f_m); entry i-1 describes vertex i.
using PairAssignment = std::vector<VertexPair>;

PairAssignment constant_pairs(const std::vector<SpaceExpr>& spaces);
PairAssignment path_fibration_pairs(const std::vector<SpaceExpr>& codomains);

/// Diagram data of a weighted polyhedral smash coproduct over K_I, kept
/// symbolic.  pairs and weights are indexed by the local vertices of `complex`.
struct SmashCoproductData {
    std::shared_ptr<const ComplexRef> complex;
    PairAssignment pairs;
    std::vector<int> weights;
};

/// Total order used to sort operands (-1, 0, 1).
int compare(const SpaceExpr& a, const SpaceExpr& b);
inline bool operator==(const SpaceExpr& a, const SpaceExpr& b) { return compare(a, b) == 0; }
inline bool operator<(const SpaceExpr& a, const SpaceExpr& b) { return compare(a, b) < 0; }

/// Rewrites to canonical form.  Total and idempotent.
SpaceExpr normalize(const SpaceExpr& e);
bool expr_equal(const SpaceExpr& a, const SpaceExpr& b);

/// Lower bound on connectivity; kInfiniteConn for contractible expressions.
/// Throws ConnectivityError ("connectivity underflow") when a loop is taken
/// of something not known to be connected.
int conn(const SpaceExpr& e);

/// Paper-style notation: Omega, Sigma, wedge, smash, product, S^n, Map_*.
std::string to_text(const SpaceExpr& e);
nlohmann::json to_json(const SpaceExpr& e);
/// Parses the tree format written by to_json (and used in spaces files).
SpaceExpr expr_from_json(const nlohmann::json& j);

std::string to_text(const SeriesSpec& s);

}  // namespace polyco
