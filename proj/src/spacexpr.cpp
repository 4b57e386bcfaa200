#include "polyco/spacexpr.hpp"

#include <algorithm>
#include <sstream>

namespace polyco {

using Kind = SpaceExpr::Kind;

struct SpaceExpr::Node {
    Kind kind = Kind::Point;
    int n = 0;  // sphere dimension or loop count
    std::shared_ptr<const AtomSpec> atom;
    std::vector<SpaceExpr> children;  // single entry for Susp, Loop and Map
    std::shared_ptr<const ComplexRef> complex;
    std::shared_ptr<const SmashCoproductData> coproduct;
};

std::shared_ptr<const ComplexRef> ComplexRef::make(SimplicialComplex complex, std::string label) {
    auto ref = std::make_shared<ComplexRef>(ComplexRef{std::move(complex), std::move(label), std::nullopt});
    ref->spheres = wedge_of_spheres_type(ref->complex);
    return ref;
}

// ------------------------------------------------------------ construction

SpaceExpr::SpaceExpr() {
    static const auto point_node = std::make_shared<const Node>();
    node_ = point_node;
}
SpaceExpr::SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

SpaceExpr SpaceExpr::point() { return SpaceExpr(); }

SpaceExpr SpaceExpr::sphere(int n) {
    if (n < 0) throw InputError("sphere dimension must be non-negative");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Sphere;
    node->n = n;
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::atom(AtomSpec spec) {
    if (spec.name.empty()) throw InputError("atom needs a name");
    if (spec.series && (spec.series->denominator.empty() || spec.series->denominator.front() == 0))
        throw InputError("atom series denominator must have a nonzero constant term");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->atom = std::make_shared<const AtomSpec>(std::move(spec));
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::wedge(std::vector<SpaceExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Wedge;
    node->children = std::move(children);
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::product(std::vector<SpaceExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Product;
    node->children = std::move(children);
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::smash(std::vector<SpaceExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Smash;
    node->children = std::move(children);
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::susp(SpaceExpr e) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Susp;
    node->children = {std::move(e)};
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::loop(SpaceExpr e, int count) {
    if (count < 1) throw InputError("loop iteration count must be at least 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Loop;
    node->n = count;
    node->children = {std::move(e)};
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::map_from_susp_realization(std::shared_ptr<const ComplexRef> k, SpaceExpr target) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Map;
    node->complex = std::move(k);
    node->children = {std::move(target)};
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::realization(std::shared_ptr<const ComplexRef> k) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Realization;
    node->complex = std::move(k);
    return SpaceExpr(std::move(node));
}

SpaceExpr SpaceExpr::smash_coproduct(std::shared_ptr<const SmashCoproductData> data) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::SmashCoproduct;
    node->complex = data->complex;
    node->coproduct = std::move(data);
    return SpaceExpr(std::move(node));
}

Kind SpaceExpr::kind() const { return node_->kind; }

int SpaceExpr::sphere_dim() const {
    if (kind() != Kind::Sphere) throw std::logic_error("sphere_dim on a non-sphere");
    return node_->n;
}

const AtomSpec& SpaceExpr::atom_spec() const {
    if (kind() != Kind::Atom) throw std::logic_error("atom_spec on a non-atom");
    return *node_->atom;
}

const std::vector<SpaceExpr>& SpaceExpr::children() const { return node_->children; }

const SpaceExpr& SpaceExpr::child() const {
    if (node_->children.size() != 1 || kind() == Kind::Wedge || kind() == Kind::Product || kind() == Kind::Smash)
        throw std::logic_error("child() on a node without a single operand");
    return node_->children.front();
}

int SpaceExpr::loop_count() const {
    if (kind() != Kind::Loop) throw std::logic_error("loop_count on a non-loop");
    return node_->n;
}

const ComplexRef& SpaceExpr::complex_ref() const {
    if (!node_->complex) throw std::logic_error("complex_ref on a node without a complex");
    return *node_->complex;
}

const SmashCoproductData& SpaceExpr::coproduct() const {
    if (!node_->coproduct) throw std::logic_error("coproduct on a node without diagram data");
    return *node_->coproduct;
}

// ------------------------------------------------------------------- pairs

VertexPair VertexPair::make(SpaceExpr domain, SpaceExpr codomain, bool declared_contractible) {
    domain = normalize(domain);
    codomain = normalize(codomain);
    if (declared_contractible && !domain.is_point()) {
        if (domain.kind() != Kind::Atom)
            throw InputError("domain " + to_text(domain) + " is declared contractible but is not an atom");
        AtomSpec spec = domain.atom_spec();
        spec.contractible = true;
        domain = SpaceExpr::atom(std::move(spec));
    }
    VertexPair p;
    p.domain = domain;
    p.codomain = codomain;
    p.domain_contractible = declared_contractible || conn(domain) == SpaceExpr::kInfiniteConn;
    p.codomain_is_point = codomain.is_point();
    p.simply_connected = conn(domain) >= 1 && conn(codomain) >= 1;
    return p;
}

VertexPair VertexPair::constant(SpaceExpr x) { return make(std::move(x), SpaceExpr::point()); }

VertexPair VertexPair::path_fibration(SpaceExpr a) {
    AtomSpec spec;
    spec.name = "P" + to_text(normalize(a));
    spec.contractible = true;
    return make(SpaceExpr::atom(std::move(spec)), std::move(a), true);
}

PairAssignment constant_pairs(const std::vector<SpaceExpr>& spaces) {
    PairAssignment out;
    for (const auto& x : spaces) out.push_back(VertexPair::constant(x));
    return out;
}

PairAssignment path_fibration_pairs(const std::vector<SpaceExpr>& codomains) {
    PairAssignment out;
    for (const auto& a : codomains) out.push_back(VertexPair::path_fibration(a));
    return out;
}

// ---------------------------------------------------------------- ordering

namespace {

template <typename T>
int three_way(const T& a, const T& b) {
    return a < b ? -1 : (b < a ? 1 : 0);
}

int compare_lists(const std::vector<SpaceExpr>& a, const std::vector<SpaceExpr>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (int c = compare(a[i], b[i])) return c;
    return three_way(a.size(), b.size());
}

int compare_complexes(const ComplexRef& a, const ComplexRef& b) {
    if (int c = three_way(a.label, b.label)) return c;
    if (int c = three_way(a.complex.vertex_count(), b.complex.vertex_count())) return c;
    const auto& fa = a.complex.facets();
    const auto& fb = b.complex.facets();
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
        if (lex_less(fa[i], fb[i])) return -1;
        if (lex_less(fb[i], fa[i])) return 1;
    }
    return three_way(fa.size(), fb.size());
}

int compare_pairs(const PairAssignment& a, const PairAssignment& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (int c = compare(a[i].domain, b[i].domain)) return c;
        if (int c = compare(a[i].codomain, b[i].codomain)) return c;
        if (int c = three_way(a[i].domain_contractible, b[i].domain_contractible)) return c;
    }
    return three_way(a.size(), b.size());
}

}  // namespace

int compare(const SpaceExpr& a, const SpaceExpr& b) {
    if (int c = three_way(static_cast<int>(a.kind()), static_cast<int>(b.kind()))) return c;
    switch (a.kind()) {
        case Kind::Point:
            return 0;
        case Kind::Sphere:
            return three_way(a.sphere_dim(), b.sphere_dim());
        case Kind::Atom: {
            const auto& x = a.atom_spec();
            const auto& y = b.atom_spec();
            if (int c = three_way(x.name, y.name)) return c;
            if (int c = three_way(x.conn, y.conn)) return c;
            return three_way(x.contractible, y.contractible);
        }
        case Kind::Loop:
            if (int c = compare(a.child(), b.child())) return c;
            return three_way(a.loop_count(), b.loop_count());
        case Kind::Susp:
            return compare(a.child(), b.child());
        case Kind::Smash:
        case Kind::Wedge:
        case Kind::Product:
            return compare_lists(a.children(), b.children());
        case Kind::Map:
            if (int c = compare_complexes(a.complex_ref(), b.complex_ref())) return c;
            return compare(a.child(), b.child());
        case Kind::Realization:
            return compare_complexes(a.complex_ref(), b.complex_ref());
        case Kind::SmashCoproduct: {
            if (int c = compare_complexes(a.complex_ref(), b.complex_ref())) return c;
            if (int c = three_way(a.coproduct().weights, b.coproduct().weights)) return c;
            return compare_pairs(a.coproduct().pairs, b.coproduct().pairs);
        }
    }
    return 0;
}

// ----------------------------------------------------------- normalisation
//
// Each make_* takes normalised operands and returns a normalised node.

namespace {

SpaceExpr make_susp(const SpaceExpr& c) {
    if (c.is_point()) return c;
    if (c.kind() == Kind::Sphere) return SpaceExpr::sphere(c.sphere_dim() + 1);
    return SpaceExpr::susp(c);
}

SpaceExpr make_product(std::vector<SpaceExpr> children);

SpaceExpr make_loop(const SpaceExpr& c, int count) {
    switch (c.kind()) {
        case Kind::Point:
            return c;
        case Kind::Loop:
            return make_loop(c.child(), c.loop_count() + count);
        case Kind::Product: {
            std::vector<SpaceExpr> looped;
            for (const auto& x : c.children()) looped.push_back(make_loop(x, count));
            return make_product(std::move(looped));
        }
        case Kind::Atom:
            if (c.atom_spec().loop) {
                SpaceExpr replaced = normalize(*c.atom_spec().loop);
                return count == 1 ? replaced : make_loop(replaced, count - 1);
            }
            return SpaceExpr::loop(c, count);
        default:
            return SpaceExpr::loop(c, count);
    }
}

SpaceExpr make_associative(Kind kind, std::vector<SpaceExpr> children) {
    std::vector<SpaceExpr> flat;
    for (auto& c : children) {
        if (c.kind() == kind)
            flat.insert(flat.end(), c.children().begin(), c.children().end());
        else if (!c.is_point())
            flat.push_back(std::move(c));
    }
    if (flat.empty()) return SpaceExpr::point();
    if (flat.size() == 1) return flat.front();
    std::stable_sort(flat.begin(), flat.end());
    return kind == Kind::Wedge ? SpaceExpr::wedge(std::move(flat)) : SpaceExpr::product(std::move(flat));
}

SpaceExpr make_product(std::vector<SpaceExpr> children) { return make_associative(Kind::Product, std::move(children)); }
SpaceExpr make_wedge(std::vector<SpaceExpr> children) { return make_associative(Kind::Wedge, std::move(children)); }

// Smash pulls spheres and suspensions out as an outer suspension count, so
// the canonical form is Sigma^s(Smash(rest)) with no sphere or Sigma operand.
SpaceExpr make_smash(const std::vector<SpaceExpr>& children) {
    int suspensions = 0;
    bool has_point = false;
    std::vector<SpaceExpr> rest;
    auto absorb = [&](auto&& self, const SpaceExpr& c) -> void {
        switch (c.kind()) {
            case Kind::Point:
                has_point = true;
                break;
            case Kind::Sphere:
                suspensions += c.sphere_dim();
                break;
            case Kind::Susp:
                ++suspensions;
                self(self, c.child());
                break;
            case Kind::Smash:
                for (const auto& x : c.children()) self(self, x);
                break;
            default:
                rest.push_back(c);
        }
    };
    for (const auto& c : children) absorb(absorb, c);
    if (has_point) return SpaceExpr::point();
    if (rest.empty()) return SpaceExpr::sphere(suspensions);
    std::stable_sort(rest.begin(), rest.end());
    SpaceExpr out = rest.size() == 1 ? rest.front() : SpaceExpr::smash(std::move(rest));
    for (int i = 0; i < suspensions; ++i) out = make_susp(out);
    return out;
}

SpaceExpr make_map(const std::shared_ptr<const ComplexRef>& k, const SpaceExpr& target) {
    if (target.is_point()) return target;
    if (!k->spheres) return SpaceExpr::map_from_susp_realization(k, target);
    // Sigma|K| is a wedge of S^{d+1}; Map_* out of it is the product of Omega^{d+1}.
    std::vector<SpaceExpr> factors;
    for (int d : *k->spheres) factors.push_back(d < 0 ? target : make_loop(target, d + 1));
    return make_product(std::move(factors));
}

SpaceExpr make_realization(const std::shared_ptr<const ComplexRef>& k) {
    if (!k->spheres) return SpaceExpr::realization(k);
    std::vector<SpaceExpr> spheres;
    for (int d : *k->spheres) {
        if (d < 0) return SpaceExpr::realization(k);  // empty space, not pointed
        spheres.push_back(SpaceExpr::sphere(d));
    }
    return make_wedge(std::move(spheres));
}

}  // namespace

SpaceExpr normalize(const SpaceExpr& e) {
    switch (e.kind()) {
        case Kind::Point:
        case Kind::Sphere:
        case Kind::SmashCoproduct:
            return e;
        case Kind::Atom:
            return e.atom_spec().contractible ? SpaceExpr::point() : e;
        case Kind::Susp:
            return make_susp(normalize(e.child()));
        case Kind::Loop:
            return make_loop(normalize(e.child()), e.loop_count());
        case Kind::Smash:
        case Kind::Wedge:
        case Kind::Product: {
            std::vector<SpaceExpr> kids;
            for (const auto& c : e.children()) kids.push_back(normalize(c));
            if (e.kind() == Kind::Smash) return make_smash(kids);
            return e.kind() == Kind::Wedge ? make_wedge(std::move(kids)) : make_product(std::move(kids));
        }
        case Kind::Map: {
            auto ref = std::make_shared<const ComplexRef>(e.complex_ref());
            return make_map(ref, normalize(e.child()));
        }
        case Kind::Realization:
            return make_realization(std::make_shared<const ComplexRef>(e.complex_ref()));
    }
    return e;
}

bool expr_equal(const SpaceExpr& a, const SpaceExpr& b) { return compare(normalize(a), normalize(b)) == 0; }

// ------------------------------------------------------------ connectivity

namespace {

constexpr int kInf = SpaceExpr::kInfiniteConn;

int add_conn(int a, int b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

int loop_conn(int c, int count) {
    if (c >= kInf) return kInf;
    if (c - (count - 1) < 0) throw ConnectivityError("connectivity underflow");
    return c - count;
}

}  // namespace

int conn(const SpaceExpr& e) {
    switch (e.kind()) {
        case Kind::Point:
            return kInf;
        case Kind::Sphere:
            return e.sphere_dim() - 1;
        case Kind::Atom:
            return e.atom_spec().contractible ? kInf : e.atom_spec().conn;
        case Kind::Susp:
            return add_conn(conn(e.child()), 1);
        case Kind::Loop:
            return loop_conn(conn(e.child()), e.loop_count());
        case Kind::Smash: {
            int total = static_cast<int>(e.children().size()) - 1;
            for (const auto& c : e.children()) total = add_conn(total, conn(c));
            return total;
        }
        case Kind::Wedge:
        case Kind::Product: {
            int lowest = kInf;
            for (const auto& c : e.children()) lowest = std::min(lowest, conn(c));
            return lowest;
        }
        case Kind::Map: {
            const auto& ref = e.complex_ref();
            int top = ref.complex.dimension();
            if (ref.spheres) {
                if (ref.spheres->empty()) return kInf;
                top = *std::max_element(ref.spheres->begin(), ref.spheres->end());
            }
            return top < 0 ? conn(e.child()) : loop_conn(conn(e.child()), top + 1);
        }
        case Kind::Realization: {
            const auto& ref = e.complex_ref();
            if (!ref.spheres) return -1;
            if (ref.spheres->empty()) return kInf;
            return *std::min_element(ref.spheres->begin(), ref.spheres->end()) - 1;
        }
        case Kind::SmashCoproduct: {
            // A homotopy limit over a poset whose nerve has dimension n loses
            // at most n degrees of connectivity from its objects.
            const auto& data = e.coproduct();
            const auto& k = data.complex->complex;
            int lowest = kInf;
            for (VertexSet face : k.faces()) {
                // Sigma of a smash of L factors: sum of conns + (L - 1) + 1.
                int object = 0;
                for (int v = 1; v <= k.vertex_count(); ++v) {
                    const int w = data.weights[v - 1];
                    const auto& pair = data.pairs[v - 1];
                    const int c = conn(face.contains(v) ? pair.domain : pair.codomain);
                    for (int copy = 0; copy < w; ++copy) object = add_conn(object, c + 1);
                }
                lowest = std::min(lowest, object);
            }
            return lowest >= kInf ? kInf : lowest - (k.dimension() + 1);
        }
    }
    return 0;
}

// --------------------------------------------------------------- rendering

namespace {

bool needs_parens(const SpaceExpr& e) {
    return e.kind() == Kind::Smash || e.kind() == Kind::Wedge || e.kind() == Kind::Product;
}

std::string wrapped(const SpaceExpr& e) {
    return needs_parens(e) ? "(" + to_text(e) + ")" : to_text(e);
}

std::string power_base(const SpaceExpr& e) {
    return e.kind() == Kind::Atom ? to_text(e) : "(" + to_text(e) + ")";
}

std::string join_grouped(const std::vector<SpaceExpr>& kids, const std::string& op, const std::string& power) {
    std::string out;
    for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i + 1;
        while (!power.empty() && j < kids.size() && kids[j] == kids[i]) ++j;
        if (!out.empty()) out += " " + op + " ";
        if (j - i > 1)
            out += power_base(kids[i]) + "^{" + power + std::to_string(j - i) + "}";
        else
            out += wrapped(kids[i]);
        i = j;
    }
    return out;
}

std::string weights_text(const std::vector<int>& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
    return out + ")";
}

}  // namespace

std::string to_text(const SpaceExpr& e) {
    switch (e.kind()) {
        case Kind::Point:
            return "*";
        case Kind::Sphere:
            return "S^" + std::to_string(e.sphere_dim());
        case Kind::Atom:
            return e.atom_spec().name;
        case Kind::Loop:
            return (e.loop_count() == 1 ? std::string("Ω") : "Ω^" + std::to_string(e.loop_count())) + wrapped(e.child());
        case Kind::Susp:
            return "Σ" + wrapped(e.child());
        case Kind::Smash:
            return join_grouped(e.children(), "∧", "∧");
        case Kind::Wedge:
            return join_grouped(e.children(), "∨", "∨");
        case Kind::Product:
            return join_grouped(e.children(), "×", "");
        case Kind::Map:
            return "Map_*(Σ|" + e.complex_ref().label + "|, " + to_text(e.child()) + ")";
        case Kind::Realization:
            return "|" + e.complex_ref().label + "|";
        case Kind::SmashCoproduct:
            return "f̂^{" + e.complex_ref().label + "}_{" + weights_text(e.coproduct().weights) + ",co}";
    }
    return "?";
}

std::string to_text(const SeriesSpec& s) {
    auto poly = [](const std::vector<long long>& c) {
        std::string out = "[";
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
        return out + "]";
    };
    return poly(s.numerator) + "/" + poly(s.denominator);
}

namespace {

nlohmann::json pair_to_json(const VertexPair& p) {
    return {{"domain", to_json(p.domain)}, {"codomain", to_json(p.codomain)},
            {"domain_contractible", p.domain_contractible}};
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Point: return "point";
        case Kind::Sphere: return "sphere";
        case Kind::Atom: return "atom";
        case Kind::Loop: return "loop";
        case Kind::Susp: return "susp";
        case Kind::Smash: return "smash";
        case Kind::Wedge: return "wedge";
        case Kind::Product: return "product";
        case Kind::Map: return "map";
        case Kind::Realization: return "realization";
        case Kind::SmashCoproduct: return "smash_coproduct";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const SpaceExpr& e) {
    nlohmann::json j = {{"kind", kind_name(e.kind())}};
    switch (e.kind()) {
        case Kind::Point:
            break;
        case Kind::Sphere:
            j["n"] = e.sphere_dim();
            break;
        case Kind::Atom: {
            const auto& a = e.atom_spec();
            j["name"] = a.name;
            j["conn"] = a.conn;
            if (a.contractible) j["contractible"] = true;
            if (a.loop) j["loop"] = to_json(*a.loop);
            if (a.series) j["series"] = {{"numerator", a.series->numerator}, {"denominator", a.series->denominator}};
            break;
        }
        case Kind::Loop:
            j["count"] = e.loop_count();
            j["of"] = to_json(e.child());
            break;
        case Kind::Susp:
            j["of"] = to_json(e.child());
            break;
        case Kind::Smash:
        case Kind::Wedge:
        case Kind::Product: {
            nlohmann::json kids = nlohmann::json::array();
            for (const auto& c : e.children()) kids.push_back(to_json(c));
            j["of"] = kids;
            break;
        }
        case Kind::Map:
            j["complex"] = to_json(e.complex_ref().complex);
            j["label"] = e.complex_ref().label;
            j["target"] = to_json(e.child());
            break;
        case Kind::Realization:
            j["complex"] = to_json(e.complex_ref().complex);
            j["label"] = e.complex_ref().label;
            break;
        case Kind::SmashCoproduct: {
            j["complex"] = to_json(e.complex_ref().complex);
            j["label"] = e.complex_ref().label;
            j["weights"] = e.coproduct().weights;
            nlohmann::json pairs = nlohmann::json::array();
            for (const auto& p : e.coproduct().pairs) pairs.push_back(pair_to_json(p));
            j["pairs"] = pairs;
            break;
        }
    }
    return j;
}

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) throw InputError(std::string("space expression is missing \"") + key + "\"");
    return j.at(key);
}

int int_field(const nlohmann::json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("\"") + key + "\" must be an integer");
    return v.get<int>();
}

std::vector<long long> int_list(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    std::vector<long long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(std::string(what) + " must be an array of integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

std::vector<SpaceExpr> expr_list(const nlohmann::json& j) {
    const auto& kids = field(j, "of");
    if (!kids.is_array()) throw InputError("\"of\" must be an array");
    std::vector<SpaceExpr> out;
    for (const auto& c : kids) out.push_back(expr_from_json(c));
    return out;
}

std::shared_ptr<const ComplexRef> complex_field(const nlohmann::json& j) {
    std::string label = j.contains("label") ? j.at("label").get<std::string>() : "K";
    return ComplexRef::make(complex_from_json(field(j, "complex")), std::move(label));
}

}  // namespace

SpaceExpr expr_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("space expression must be a JSON object");
    const auto& kind_field = field(j, "kind");
    if (!kind_field.is_string()) throw InputError("\"kind\" must be a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind == "point") return SpaceExpr::point();
    if (kind == "sphere") return SpaceExpr::sphere(int_field(j, "n"));
    if (kind == "atom") {
        AtomSpec spec;
        const auto& name = field(j, "name");
        if (!name.is_string()) throw InputError("atom \"name\" must be a string");
        spec.name = name.get<std::string>();
        spec.conn = j.contains("conn") ? int_field(j, "conn") : 0;
        spec.contractible = j.contains("contractible") && j.at("contractible").get<bool>();
        if (j.contains("loop")) spec.loop = std::make_shared<const SpaceExpr>(expr_from_json(j.at("loop")));
        if (j.contains("series")) {
            const auto& s = j.at("series");
            SeriesSpec series;
            series.numerator = int_list(field(s, "numerator"), "series numerator");
            series.denominator = int_list(field(s, "denominator"), "series denominator");
            spec.series = series;
        }
        return SpaceExpr::atom(std::move(spec));
    }
    if (kind == "loop") return SpaceExpr::loop(expr_from_json(field(j, "of")), j.contains("count") ? int_field(j, "count") : 1);
    if (kind == "susp") return SpaceExpr::susp(expr_from_json(field(j, "of")));
    if (kind == "smash") return SpaceExpr::smash(expr_list(j));
    if (kind == "wedge") return SpaceExpr::wedge(expr_list(j));
    if (kind == "product") return SpaceExpr::product(expr_list(j));
    if (kind == "map") return SpaceExpr::map_from_susp_realization(complex_field(j), expr_from_json(field(j, "target")));
    if (kind == "realization") return SpaceExpr::realization(complex_field(j));
    if (kind == "smash_coproduct") {
        auto data = std::make_shared<SmashCoproductData>();
        data->complex = complex_field(j);
        for (long long w : int_list(field(j, "weights"), "weights")) data->weights.push_back(static_cast<int>(w));
        for (const auto& p : field(j, "pairs"))
            data->pairs.push_back(VertexPair::make(expr_from_json(field(p, "domain")), expr_from_json(field(p, "codomain")),
                                                   p.contains("domain_contractible") && p.at("domain_contractible").get<bool>()));
        const auto m = static_cast<std::size_t>(data->complex->complex.vertex_count());
        if (data->weights.size() != m || data->pairs.size() != m)
            throw InputError("smash coproduct weights and pairs must match the complex's vertex count");
        return SpaceExpr::smash_coproduct(std::move(data));
    }
    throw InputError("unknown space kind \"" + kind + "\"");
}

}  // namespace polyco
