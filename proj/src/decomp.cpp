#include "polyco/decomp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyco {

using Kind = SpaceExpr::Kind;

std::string theorem_tag(Theorem t) {
    switch (t) {
        case Theorem::General: return "general";
        case Theorem::Wedge: return "wedge";
        case Theorem::ContractibleDomain: return "contractible-domain";
        case Theorem::Porter: return "porter";
        case Theorem::HiltonMilnor: return "hilton-milnor";
        case Theorem::DisjointUnion: return "disjoint-union";
    }
    return "?";
}

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::Base: return "base";
        case Kind::Vertex: return "vertex " + std::to_string(vertex);
        case Kind::Face: return "face " + face.to_string();
        case Kind::Bracket: return bracket->to_string();
    }
    return "?";
}

std::vector<std::pair<SpaceExpr, int>> Decomposition::multiset() const {
    std::vector<std::pair<SpaceExpr, int>> out;
    for (const auto& f : factors) out.emplace_back(f.expr, f.multiplicity);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<SpaceExpr, int>> merged;
    for (auto& entry : out) {
        if (!merged.empty() && merged.back().first == entry.first)
            merged.back().second += entry.second;
        else
            merged.push_back(std::move(entry));
    }
    return merged;
}

int Decomposition::bracket_factor_count() const {
    return static_cast<int>(std::count_if(factors.begin(), factors.end(),
                                          [](const Factor& f) { return f.provenance.kind == Provenance::Kind::Bracket; }));
}

const SpaceExpr& DiagramDescription::object_at(VertexSet face) const {
    for (const auto& o : objects)
        if (o.face == face) return o.object;
    throw InputError("face " + face.to_string() + " is not in the diagram");
}

namespace {

constexpr int kInf = SpaceExpr::kInfiniteConn;

std::string vertex_label(int v) { return "vertex " + std::to_string(v); }

void require_arity(const SimplicialComplex& k, std::size_t count, const char* what) {
    if (count != static_cast<std::size_t>(k.vertex_count()))
        throw InputError(std::string(what) + " has " + std::to_string(count) + " entries but the complex has " +
                         std::to_string(k.vertex_count()) + " vertices");
}

void require_weight(const Truncation& t) {
    if (t.weight_bound < 1) throw InputError("weight bound must be at least 1");
    if (t.degree_bound && *t.degree_bound < 0) throw InputError("degree bound must be non-negative");
}

void require_simply_connected(const SpaceExpr& x, int v, const char* role) {
    if (conn(x) < 1)
        throw InputError(vertex_label(v) + ": " + role + " " + to_text(x) + " is not simply connected");
}

std::vector<SpaceExpr> normalized(const std::vector<SpaceExpr>& spaces) {
    std::vector<SpaceExpr> out;
    for (const auto& x : spaces) out.push_back(normalize(x));
    return out;
}

// Letter degree of a_{J,i} is the sum of the per-vertex degrees over J, so a
// word's degree bounds the lowest homology degree of its factor from below
// (up to `slack`).  Infinite degrees are clamped just past the budget.
std::optional<DegreeBudget> budget_for(const std::vector<Generator>& alphabet, const std::vector<int>& vertex_degree,
                                       const Truncation& t, int slack) {
    if (!t.degree_bound) return std::nullopt;
    DegreeBudget budget;
    budget.max_degree = *t.degree_bound + slack;
    const int cap = budget.max_degree + 1;
    for (const Generator& g : alphabet) {
        long long d = 0;
        if (g.is_symbol())
            d = vertex_degree[g.index - 1];
        else
            for (int v : g.subset.vertices()) d += vertex_degree[v - 1];
        budget.letter_degrees.push_back(static_cast<int>(std::clamp<long long>(d, 1, cap)));
    }
    return budget;
}

int clamp_conn(int c) { return c >= kInf ? kInf : c; }

SpaceExpr smash_of_loops(const std::vector<SpaceExpr>& spaces, const std::vector<int>& counts) {
    std::vector<SpaceExpr> parts;
    for (std::size_t j = 0; j < counts.size(); ++j)
        for (int c = 0; c < counts[j]; ++c) parts.push_back(SpaceExpr::loop(spaces[j]));
    return SpaceExpr::smash(std::move(parts));
}

std::string subcomplex_label(VertexSet i) { return "K_" + i.to_string(); }

void sort_bracket_factors(std::vector<Factor>& factors) {
    struct Keyed {
        bool bracket;
        int vertex, weight;
        std::string text;
        Factor factor;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(factors.size());
    for (auto& f : factors) {
        const bool bracket = f.provenance.kind == Provenance::Kind::Bracket;
        std::string text = bracket ? f.provenance.bracket->to_string() : std::string();
        keyed.push_back({bracket, f.provenance.vertex, f.weight, std::move(text), std::move(f)});
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.bracket != b.bracket) return b.bracket;
        if (!a.bracket) return a.vertex < b.vertex;
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.text < b.text;
    });
    factors.clear();
    for (auto& k : keyed) factors.push_back(std::move(k.factor));
}

void push_factor(Decomposition& d, SpaceExpr expr, Provenance p, int weight = 0, VertexSet support = {}) {
    expr = normalize(expr);
    if (expr.is_point()) return;
    d.factors.push_back(Factor{std::move(expr), 1, std::move(p), weight, support});
}

void push_base_loops(Decomposition& d, const std::vector<SpaceExpr>& spaces) {
    for (std::size_t i = 0; i < spaces.size(); ++i)
        push_factor(d, SpaceExpr::loop(spaces[i]), Provenance::of_vertex(static_cast<int>(i) + 1));
}

void finish(Decomposition& d, const Truncation& t) {
    sort_bracket_factors(d.factors);
    d.weight_bound = t.weight_bound;
    d.degree_bound = t.degree_bound;
}

// Caches K_I as a labelled, certified complex.
class SubcomplexCache {
public:
    explicit SubcomplexCache(const SimplicialComplex& k) : k_(k) {}

    const FullSubcomplex& full(VertexSet i) {
        auto it = full_.find(i.bits());
        if (it == full_.end()) it = full_.emplace(i.bits(), full_subcomplex(k_, i)).first;
        return it->second;
    }

    std::shared_ptr<const ComplexRef> ref(VertexSet i) {
        auto it = refs_.find(i.bits());
        if (it == refs_.end()) it = refs_.emplace(i.bits(), ComplexRef::make(full(i).complex, subcomplex_label(i))).first;
        return it->second;
    }

private:
    const SimplicialComplex& k_;
    std::map<std::uint64_t, FullSubcomplex> full_;
    std::map<std::uint64_t, std::shared_ptr<const ComplexRef>> refs_;
};

// Omega Map_*(Sigma|K_I|, Sigma smash (Omega A_j)^{l_j}).
SpaceExpr contractible_domain_factor(SubcomplexCache& cache, VertexSet support, const PairAssignment& pairs,
                                     const std::vector<int>& l) {
    std::vector<SpaceExpr> codomains;
    for (const auto& p : pairs) codomains.push_back(p.codomain);
    return SpaceExpr::loop(
        SpaceExpr::map_from_susp_realization(cache.ref(support), SpaceExpr::susp(smash_of_loops(codomains, l))));
}

Bracket shift_bracket(const Bracket& b, int offset) {
    if (b.is_leaf()) {
        const Generator& g = b.generator();
        return Bracket::leaf(Generator{g.subset.shifted(offset), g.index});
    }
    return Bracket::combine(shift_bracket(b.left(), offset), shift_bracket(b.right(), offset));
}

}  // namespace

// --------------------------------------------------------------- diagrams

namespace {

std::vector<DiagramMorphism> face_inclusions(const std::vector<VertexSet>& faces) {
    std::vector<DiagramMorphism> out;
    for (VertexSet sigma : faces)
        for (VertexSet tau : faces)
            if (tau != sigma && tau.subset_of(sigma)) out.push_back({sigma, tau, (sigma - tau).vertices()});
    return out;
}

}  // namespace

DiagramDescription coproduct_diagram(const SimplicialComplex& k, const PairAssignment& pairs) {
    require_arity(k, pairs.size(), "pair assignment");
    DiagramDescription d;
    d.complex = k;
    const auto faces = k.faces();
    for (VertexSet sigma : faces) {
        std::vector<SpaceExpr> ys;
        for (int i = 1; i <= k.vertex_count(); ++i)
            ys.push_back(sigma.contains(i) ? pairs[i - 1].domain : pairs[i - 1].codomain);
        d.objects.push_back({sigma, normalize(SpaceExpr::wedge(std::move(ys)))});
    }
    d.morphisms = face_inclusions(faces);
    return d;
}

DiagramDescription smash_coproduct(const SimplicialComplex& k, const PairAssignment& pairs,
                                   const std::vector<int>& weights) {
    require_arity(k, pairs.size(), "pair assignment");
    require_arity(k, weights.size(), "weight vector");
    if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 0; }))
        throw InputError("weights must be non-negative");
    if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; }))
        throw InputError("weight vector is identically zero");
    DiagramDescription d;
    d.complex = k;
    d.weights = weights;
    const auto faces = k.faces();
    for (VertexSet sigma : faces) {
        std::vector<SpaceExpr> ys;
        for (int i = 1; i <= k.vertex_count(); ++i)
            ys.push_back(sigma.contains(i) ? pairs[i - 1].domain : pairs[i - 1].codomain);
        d.objects.push_back({sigma, normalize(SpaceExpr::susp(smash_of_loops(ys, weights)))});
    }
    d.morphisms = face_inclusions(faces);
    return d;
}

std::optional<SpaceExpr> evaluate_special(const SimplicialComplex& k, const PairAssignment& pairs) {
    require_arity(k, pairs.size(), "pair assignment");
    const int m = k.vertex_count();
    std::vector<SpaceExpr> xs, as;
    for (const auto& p : pairs) {
        xs.push_back(p.domain);
        as.push_back(p.codomain);
    }
    if (k.is_void()) return normalize(SpaceExpr::wedge(as));
    if (k.facets().size() == 1 && k.facets().front() == k.ground_set()) return normalize(SpaceExpr::wedge(xs));
    const bool discrete = k.dimension() == 0 && k.ghost_vertices().empty();
    if (m == 2 && discrete && pairs[0].domain_contractible && pairs[1].domain_contractible)
        return normalize(SpaceExpr::loop(
            SpaceExpr::susp(SpaceExpr::smash({SpaceExpr::loop(as[0]), SpaceExpr::loop(as[1])}))));
    if (discrete && std::all_of(pairs.begin(), pairs.end(), [](const VertexPair& p) { return p.codomain_is_point; }))
        return normalize(SpaceExpr::product(xs));
    return std::nullopt;
}

// --------------------------------------------------------------- theorems

SpaceExpr porter_fiber(const std::vector<SpaceExpr>& spaces) {
    const int m = static_cast<int>(spaces.size());
    if (m > 20) throw InputError("Porter decomposition limited to 20 summands");
    for (int i = 0; i < m; ++i) require_simply_connected(spaces[i], i + 1, "space");
    std::vector<SpaceExpr> summands;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet subset(mask);
        if (subset.size() < 2) continue;
        std::vector<SpaceExpr> loops;
        for (int v : subset.vertices()) loops.push_back(SpaceExpr::loop(spaces[v - 1]));
        const SpaceExpr term = SpaceExpr::susp(SpaceExpr::smash(std::move(loops)));
        for (int copy = 0; copy < subset.size() - 1; ++copy) summands.push_back(term);
    }
    return normalize(SpaceExpr::wedge(std::move(summands)));
}

Decomposition porter_loop_decomp(const std::vector<SpaceExpr>& spaces) {
    Decomposition d;
    d.theorem = Theorem::Porter;
    const SpaceExpr fiber = porter_fiber(spaces);
    push_base_loops(d, spaces);
    push_factor(d, SpaceExpr::loop(fiber), Provenance::base());
    return d;
}

Decomposition hilton_milnor(const std::vector<SpaceExpr>& spaces, const Truncation& t) {
    require_weight(t);
    const int m = static_cast<int>(spaces.size());
    if (m < 1) throw InputError("Hilton-Milnor needs at least one summand");
    const auto xs = normalized(spaces);
    std::vector<int> degree;
    for (int i = 0; i < m; ++i) {
        const int c = conn(xs[i]);
        if (c < 0) throw InputError(vertex_label(i + 1) + ": summand " + to_text(xs[i]) + " is not connected");
        degree.push_back(c >= kInf ? kInf : c + 1);
    }
    const auto alphabet = symbol_alphabet(m);
    Decomposition d;
    d.theorem = Theorem::HiltonMilnor;
    for (const Bracket& b : hall_basis(alphabet, t.weight_bound, budget_for(alphabet, degree, t, 0))) {
        std::vector<SpaceExpr> parts;
        for (const auto& [g, count] : b.multidegree())
            for (int c = 0; c < count; ++c) parts.push_back(xs[g.index - 1]);
        push_factor(d, SpaceExpr::loop(SpaceExpr::susp(SpaceExpr::smash(std::move(parts)))), Provenance::of_bracket(b),
                    b.weight());
    }
    finish(d, t);
    return d;
}

Decomposition loop_decompose(const SimplicialComplex& k, const PairAssignment& pairs, const Truncation& t) {
    require_weight(t);
    require_arity(k, pairs.size(), "pair assignment");
    const int m = k.vertex_count();
    std::vector<int> degree;
    for (int i = 1; i <= m; ++i) {
        require_simply_connected(pairs[i - 1].domain, i, "domain");
        require_simply_connected(pairs[i - 1].codomain, i, "codomain");
        degree.push_back(std::min(clamp_conn(conn(pairs[i - 1].domain)), clamp_conn(conn(pairs[i - 1].codomain))));
    }
    Decomposition d;
    d.theorem = Theorem::General;
    std::vector<SpaceExpr> xs;
    for (const auto& p : pairs) xs.push_back(p.domain);
    push_base_loops(d, xs);

    SubcomplexCache cache(k);
    const auto alphabet = generators_for(k.ground_set());
    int symbolic = 0;
    for (const Bracket& b : hall_basis(alphabet, t.weight_bound, budget_for(alphabet, degree, t, m))) {
        const BracketStats st = stats(b, m);
        const VertexSet support = restricted_support(b, k.ground_set());
        if (support.empty()) continue;
        const auto vs = support.vertices();
        const bool contractible = std::all_of(vs.begin(), vs.end(), [&](int j) { return pairs[j - 1].domain_contractible; });
        const bool constant = std::all_of(vs.begin(), vs.end(), [&](int j) { return pairs[j - 1].codomain_is_point; });
        SpaceExpr factor;
        if (contractible) {
            factor = contractible_domain_factor(cache, support, pairs, st.vertex_counts);
        } else if (constant) {
            // Only the face I_b itself carries a nontrivial object, and it is initial.
            if (k.contains(support))
                factor = SpaceExpr::loop(SpaceExpr::susp(smash_of_loops(xs, st.vertex_counts)));
        } else {
            auto data = std::make_shared<SmashCoproductData>();
            data->complex = cache.ref(support);
            for (int j : vs) {
                data->pairs.push_back(pairs[j - 1]);
                data->weights.push_back(st.vertex_counts[j - 1]);
            }
            factor = SpaceExpr::loop(SpaceExpr::smash_coproduct(std::move(data)));
            ++symbolic;
        }
        push_factor(d, factor, Provenance::of_bracket(b), b.weight(), support);
    }
    if (symbolic > 0)
        d.notes.push_back(std::to_string(symbolic) + " factor(s) kept as symbolic smash coproducts (mixed pairs)");
    finish(d, t);
    return d;
}

Decomposition loop_decompose_wedge(const SimplicialComplex& k, const std::vector<SpaceExpr>& spaces,
                                   const Truncation& t) {
    require_weight(t);
    require_arity(k, spaces.size(), "space list");
    const int m = k.vertex_count();
    const auto xs = normalized(spaces);
    std::vector<int> degree;
    for (int i = 1; i <= m; ++i) {
        require_simply_connected(xs[i - 1], i, "space");
        degree.push_back(clamp_conn(conn(xs[i - 1])));
    }
    Decomposition d;
    d.theorem = Theorem::Wedge;
    push_base_loops(d, xs);

    std::map<std::vector<Generator>, Bracket, bool (*)(const std::vector<Generator>&, const std::vector<Generator>&)>
        seen([](const std::vector<Generator>& a, const std::vector<Generator>& b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    for (VertexSet sigma : maximal_faces_ge2(k)) {
        const auto alphabet = generators_for(sigma);
        for (const Bracket& b : hall_basis(alphabet, t.weight_bound, budget_for(alphabet, degree, t, 0)))
            seen.emplace(b.word(), b);
    }
    for (const auto& [word, b] : seen) {
        const BracketStats st = stats(b, m);
        push_factor(d, SpaceExpr::loop(SpaceExpr::susp(smash_of_loops(xs, st.vertex_counts))), Provenance::of_bracket(b),
                    b.weight(), restricted_support(b, k.ground_set()));
    }
    finish(d, t);
    return d;
}

Decomposition loop_decompose_contractible(const SimplicialComplex& k, const PairAssignment& pairs,
                                          const Truncation& t) {
    require_weight(t);
    require_arity(k, pairs.size(), "pair assignment");
    const int m = k.vertex_count();
    std::vector<int> degree;
    for (int i = 1; i <= m; ++i) {
        if (!pairs[i - 1].domain_contractible)
            throw InputError(vertex_label(i) + ": domain " + to_text(pairs[i - 1].domain) + " is not contractible");
        require_simply_connected(pairs[i - 1].codomain, i, "codomain");
        degree.push_back(clamp_conn(conn(pairs[i - 1].codomain)));
    }
    Decomposition d;
    d.theorem = Theorem::ContractibleDomain;
    SubcomplexCache cache(k);
    const auto alphabet = generators_for(k.ground_set());
    for (const Bracket& b : hall_basis(alphabet, t.weight_bound, budget_for(alphabet, degree, t, m))) {
        const VertexSet support = restricted_support(b, k.ground_set());
        if (k.contains(support)) continue;
        const BracketStats st = stats(b, m);
        push_factor(d, contractible_domain_factor(cache, support, pairs, st.vertex_counts), Provenance::of_bracket(b),
                    b.weight(), support);
    }
    finish(d, t);
    return d;
}

std::vector<std::pair<VertexSet, SpaceExpr>> bbcg_wedge_splitting(const SimplicialComplex& k,
                                                                  const std::vector<SpaceExpr>& spaces) {
    require_arity(k, spaces.size(), "space list");
    std::vector<std::pair<VertexSet, SpaceExpr>> out;
    for (VertexSet sigma : k.faces()) {
        if (sigma.empty()) continue;
        std::vector<SpaceExpr> parts;
        for (int v : sigma.vertices()) parts.push_back(spaces[v - 1]);
        out.emplace_back(sigma, normalize(SpaceExpr::susp(SpaceExpr::smash(std::move(parts)))));
    }
    return out;
}

std::vector<std::pair<VertexSet, SpaceExpr>> bbcg_cone_splitting(const SimplicialComplex& k,
                                                                 const std::vector<SpaceExpr>& spaces) {
    require_arity(k, spaces.size(), "space list");
    SubcomplexCache cache(k);
    std::vector<std::pair<VertexSet, SpaceExpr>> out;
    for (VertexSet subset : missing_subsets(k)) {
        std::vector<SpaceExpr> parts;
        for (int v : subset.vertices()) parts.push_back(spaces[v - 1]);
        const SpaceExpr smash = SpaceExpr::smash(parts);
        const auto ref = cache.ref(subset);
        SpaceExpr summand;
        if (ref->spheres) {
            // Sigma(S^d smash Y) = Sigma^{d+1} Y; the void complex (d = -1) gives Y.
            std::vector<SpaceExpr> wedge;
            for (int dim : *ref->spheres)
                wedge.push_back(dim < 0 ? smash : SpaceExpr::susp(SpaceExpr::smash({SpaceExpr::sphere(dim), smash})));
            summand = SpaceExpr::wedge(std::move(wedge));
        } else {
            parts.insert(parts.begin(), SpaceExpr::realization(ref));
            summand = SpaceExpr::susp(SpaceExpr::smash(std::move(parts)));
        }
        out.emplace_back(subset, normalize(summand));
    }
    return out;
}

// ------------------------------------------------- structural operations

ReducedInput join_vertex_reduce(const SimplicialComplex& k, const PairAssignment& pairs) {
    require_arity(k, pairs.size(), "pair assignment");
    const int m = k.vertex_count();
    if (m < 2) throw InputError("join reduction needs at least two vertices");
    if (k.is_void() || !std::all_of(k.facets().begin(), k.facets().end(), [m](VertexSet f) { return f.contains(m); }))
        throw InputError(vertex_label(m) + " is not a cone point of the complex");
    if (!pairs[m - 1].domain.is_point())
        throw InputError(vertex_label(m) + ": the joined vertex must have domain * (got " +
                         to_text(pairs[m - 1].domain) + ")");
    return {full_subcomplex(k, VertexSet::range(m - 1)).complex, PairAssignment(pairs.begin(), pairs.end() - 1)};
}

PullbackSquare pullback_square(const SimplicialComplex& k1, const SimplicialComplex& k2, const SimplicialComplex& l,
                               const PairAssignment& pairs) {
    const SimplicialComplex k = union_along(k1, k2, l);
    require_arity(k, pairs.size(), "pair assignment");
    const int m = k.vertex_count();
    const int n = k1.vertex_count();
    const int offset = n - l.vertex_count();
    auto place = [m](const SimplicialComplex& c, int shift) {
        std::vector<std::vector<int>> faces;
        for (VertexSet f : c.facets()) faces.push_back(f.shifted(shift).vertices());
        return faces.empty() ? SimplicialComplex::empty(m) : SimplicialComplex::build(m, faces);
    };
    PullbackSquare sq;
    const std::vector<std::pair<std::string, SimplicialComplex>> corners = {
        {"K", k}, {"K1", place(k1, 0)}, {"K2", place(k2, offset)}, {"L", place(l, offset)}};
    for (const auto& [name, c] : corners) sq.corners.push_back({name, c, evaluate_special(c, pairs)});
    sq.maps = {"f_co^K -> f_co^K1 (restriction to the faces of K1)", "f_co^K -> f_co^K2 (restriction to the faces of K2)",
               "f_co^K1 -> f_co^L (restriction to the faces of L)", "f_co^K2 -> f_co^L (restriction to the faces of L)"};
    return sq;
}

Decomposition disjoint_union_decomp(const SimplicialComplex& k1, const SimplicialComplex& k2,
                                    const std::vector<SpaceExpr>& spaces, const Truncation& t) {
    const int m1 = k1.vertex_count();
    const int m2 = k2.vertex_count();
    if (spaces.size() != static_cast<std::size_t>(m1 + m2))
        throw InputError("space list has " + std::to_string(spaces.size()) + " entries but the union has " +
                         std::to_string(m1 + m2) + " vertices");
    const Decomposition d1 =
        loop_decompose_wedge(k1, std::vector<SpaceExpr>(spaces.begin(), spaces.begin() + m1), t);
    const Decomposition d2 = loop_decompose_wedge(k2, std::vector<SpaceExpr>(spaces.begin() + m1, spaces.end()), t);
    Decomposition d;
    d.theorem = Theorem::DisjointUnion;
    d.factors = d1.factors;
    for (Factor f : d2.factors) {
        if (f.provenance.kind == Provenance::Kind::Vertex) f.provenance.vertex += m1;
        if (f.provenance.bracket) f.provenance.bracket = shift_bracket(*f.provenance.bracket, m1);
        f.support = f.support.shifted(m1);
        d.factors.push_back(std::move(f));
    }
    finish(d, t);
    return d;
}

// ----------------------------------------------------------------- reports

namespace {

nlohmann::json provenance_json(const Factor& f) {
    const Provenance& p = f.provenance;
    switch (p.kind) {
        case Provenance::Kind::Base:
            return {{"kind", "base"}};
        case Provenance::Kind::Vertex:
            return {{"kind", "vertex"}, {"vertex", p.vertex}};
        case Provenance::Kind::Face:
            return {{"kind", "face"}, {"face", p.face.vertices()}};
        case Provenance::Kind::Bracket:
            return {{"kind", "bracket"}, {"bracket", p.bracket->to_string()}, {"weight", f.weight},
                    {"support", f.support.vertices()}};
    }
    return {};
}

}  // namespace

std::string to_text(const Decomposition& d) {
    std::ostringstream out;
    out << "theorem: " << theorem_tag(d.theorem) << "\n";
    if (d.weight_bound) out << "weight bound: " << *d.weight_bound << "\n";
    if (d.degree_bound) out << "degree bound: " << *d.degree_bound << "\n";
    out << "factors: " << d.factors.size() << " (" << d.bracket_factor_count() << " from brackets)\n";
    for (const auto& f : d.factors) {
        out << "  " << to_text(f.expr);
        if (f.multiplicity > 1) out << "  x" << f.multiplicity;
        out << "    <- " << f.provenance.to_string() << "\n";
    }
    for (const auto& note : d.notes) out << "note: " << note << "\n";
    return out.str();
}

nlohmann::json to_json(const Decomposition& d) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : d.factors)
        factors.push_back({{"expr", to_text(f.expr)},
                           {"tree", to_json(f.expr)},
                           {"multiplicity", f.multiplicity},
                           {"provenance", provenance_json(f)}});
    nlohmann::json j = {{"theorem", theorem_tag(d.theorem)}, {"factors", factors}, {"notes", d.notes}};
    j["weight_bound"] = d.weight_bound ? nlohmann::json(*d.weight_bound) : nlohmann::json(nullptr);
    j["degree_bound"] = d.degree_bound ? nlohmann::json(*d.degree_bound) : nlohmann::json(nullptr);
    return j;
}

std::string to_text(const DiagramDescription& d) {
    std::ostringstream out;
    out << (d.weights.empty() ? "coproduct diagram" : "smash coproduct diagram") << " over " << d.objects.size()
        << " faces\n";
    for (const auto& o : d.objects) out << "  D(" << o.face.to_string() << ") = " << to_text(o.object) << "\n";
    for (const auto& mor : d.morphisms) {
        out << "  " << mor.source.to_string() << " -> " << mor.target.to_string() << ": f at";
        for (int i : mor.applied) out << " " << i;
        out << "\n";
    }
    return out.str();
}

nlohmann::json to_json(const DiagramDescription& d) {
    nlohmann::json objects = nlohmann::json::array();
    for (const auto& o : d.objects) objects.push_back({{"face", o.face.vertices()}, {"object", to_text(o.object)}});
    nlohmann::json morphisms = nlohmann::json::array();
    for (const auto& mor : d.morphisms)
        morphisms.push_back({{"source", mor.source.vertices()}, {"target", mor.target.vertices()}, {"applied", mor.applied}});
    return {{"complex", to_json(d.complex)}, {"weights", d.weights}, {"objects", objects}, {"morphisms", morphisms}};
}

}  // namespace polyco
