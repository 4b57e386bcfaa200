#include "polyco/scomplex.hpp"

#include "polyco/rational.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace polyco {

// ---------------------------------------------------------------- VertexSet

namespace {

void check_vertex(int v) {
    if (v < 1 || v > VertexSet::kMaxVertex)
        throw InputError("vertex " + std::to_string(v) + " outside supported range 1.." +
                         std::to_string(VertexSet::kMaxVertex));
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) {
        check_vertex(v);
        bits_ |= std::uint64_t{1} << (v - 1);
    }
}

VertexSet VertexSet::from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s = s.with(v);
    return s;
}

VertexSet VertexSet::range(int m) { return range(1, m); }

VertexSet VertexSet::range(int lo, int hi) {
    VertexSet s;
    for (int v = std::max(lo, 1); v <= hi; ++v) s = s.with(v);
    return s;
}

int VertexSet::size() const { return std::popcount(bits_); }

bool VertexSet::contains(int v) const {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> (v - 1)) & 1U);
}

int VertexSet::max_vertex() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

VertexSet VertexSet::with(int v) const {
    check_vertex(v);
    return VertexSet(bits_ | (std::uint64_t{1} << (v - 1)));
}

VertexSet VertexSet::without(int v) const {
    if (v < 1 || v > kMaxVertex) return *this;
    return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1)));
}

VertexSet VertexSet::shifted(int offset) const {
    VertexSet s;
    for (int v : vertices()) s = s.with(v + offset);
    return s;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : vertices()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool lex_less(VertexSet a, VertexSet b) {
    auto va = a.vertices();
    auto vb = b.vertices();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

bool graded_less(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

// -------------------------------------------------------- SimplicialComplex

SimplicialComplex::SimplicialComplex(int m, std::vector<VertexSet> facets)
    : m_(m), facets_(maximal_members(std::move(facets))) {}

std::vector<VertexSet> SimplicialComplex::maximal_members(std::vector<VertexSet> sets) {
    std::erase_if(sets, [](VertexSet s) { return s.empty(); });
    std::sort(sets.begin(), sets.end(), lex_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
            dominated = i != j && sets[i].subset_of(sets[j]);
        if (!dominated) out.push_back(sets[i]);
    }
    return out;
}

SimplicialComplex SimplicialComplex::build(int m, const std::vector<std::vector<int>>& faces) {
    if (m < 1) throw InputError("complex must have at least one vertex (m = " + std::to_string(m) + ")");
    if (m > VertexSet::kMaxVertex)
        throw InputError("complex has more than " + std::to_string(VertexSet::kMaxVertex) + " vertices");
    std::vector<VertexSet> sets;
    for (const auto& face : faces) {
        if (face.empty()) throw InputError("listed faces must be nonempty");
        for (int v : face)
            if (v < 1 || v > m)
                throw InputError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(m));
        sets.push_back(VertexSet::from_vector(face));
    }
    return SimplicialComplex(m, std::move(sets));
}

SimplicialComplex SimplicialComplex::empty(int m) {
    if (m < 0 || m > VertexSet::kMaxVertex) throw InputError("invalid vertex count " + std::to_string(m));
    return SimplicialComplex(m, {});
}

SimplicialComplex SimplicialComplex::simplex(int m) {
    if (m < 1) throw InputError("simplex needs at least one vertex");
    return SimplicialComplex(m, {VertexSet::range(m)});
}

SimplicialComplex SimplicialComplex::simplex_boundary(int m) {
    if (m < 2) throw InputError("simplex boundary needs at least two vertices");
    std::vector<VertexSet> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(VertexSet::range(m).without(v));
    return SimplicialComplex(m, std::move(facets));
}

SimplicialComplex SimplicialComplex::discrete(int m) {
    if (m < 1) throw InputError("discrete complex needs at least one vertex");
    std::vector<VertexSet> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(VertexSet{v});
    return SimplicialComplex(m, std::move(facets));
}

bool SimplicialComplex::contains(VertexSet face) const {
    if (face.empty()) return true;
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
    std::vector<std::uint64_t> all{0};
    for (VertexSet f : facets_) {
        // enumerate submasks
        const std::uint64_t mask = f.bits();
        for (std::uint64_t s = mask;; s = (s - 1) & mask) {
            if (s != 0) all.push_back(s);
            if (s == 0) break;
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::vector<VertexSet> out;
    out.reserve(all.size());
    for (auto b : all) out.emplace_back(b);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

std::vector<VertexSet> SimplicialComplex::faces_of_dim(int d) const {
    std::vector<VertexSet> out;
    for (VertexSet f : faces())
        if (f.size() == d + 1) out.push_back(f);
    return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f(dimension() + 2, 0);
    for (VertexSet s : faces()) ++f[s.size()];
    return f;
}

VertexSet SimplicialComplex::covered_vertices() const {
    VertexSet s;
    for (VertexSet f : facets_) s = s | f;
    return s;
}

// ----------------------------------------------------------- constructions

VertexSet FullSubcomplex::lift(VertexSet local) const {
    VertexSet out;
    for (int v : local.vertices()) out = out.with(index_map.at(v - 1));
    return out;
}

namespace {

// Sends each vertex v in `s` to position_of[v].
VertexSet relabel(VertexSet s, const std::vector<int>& position_of) {
    VertexSet out;
    for (int v : s.vertices()) out = out.with(position_of.at(v));
    return out;
}

}  // namespace

FullSubcomplex full_subcomplex(const SimplicialComplex& k, VertexSet subset) {
    if (!subset.subset_of(k.ground_set()))
        throw InputError("vertex set " + subset.to_string() + " not contained in {1.." +
                         std::to_string(k.vertex_count()) + "}");
    FullSubcomplex out{SimplicialComplex::empty(subset.size()), subset.vertices()};
    std::vector<int> position_of(k.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < out.index_map.size(); ++i) position_of[out.index_map[i]] = static_cast<int>(i) + 1;
    std::vector<std::vector<int>> faces;
    for (VertexSet f : k.facets()) {
        VertexSet local = relabel(f & subset, position_of);
        if (!local.empty()) faces.push_back(local.vertices());
    }
    if (!faces.empty()) out.complex = SimplicialComplex::build(subset.size(), faces);
    return out;
}

std::vector<VertexSet> maximal_faces_ge2(const SimplicialComplex& k) {
    std::vector<VertexSet> out;
    for (VertexSet f : k.facets())
        if (f.size() >= 2) out.push_back(f);
    return out;
}

std::vector<VertexSet> faces_ge2(const SimplicialComplex& k) {
    std::vector<VertexSet> out;
    for (VertexSet f : k.faces())
        if (f.size() >= 2) out.push_back(f);
    return out;
}

std::vector<VertexSet> missing_subsets(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    if (m > 24) throw InputError("missing_subsets is limited to 24 vertices");
    std::vector<VertexSet> out;
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << m); ++b)
        if (!k.contains(VertexSet(b))) out.emplace_back(b);
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

namespace {

std::vector<std::vector<int>> facet_lists(const SimplicialComplex& k, int offset) {
    std::vector<std::vector<int>> out;
    for (VertexSet f : k.facets()) out.push_back(f.shifted(offset).vertices());
    return out;
}

SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets) {
    return facets.empty() ? SimplicialComplex::empty(m) : SimplicialComplex::build(m, facets);
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int m1 = k1.vertex_count();
    std::vector<VertexSet> left = k1.facets();
    std::vector<VertexSet> right;
    for (VertexSet f : k2.facets()) right.push_back(f.shifted(m1));
    if (left.empty()) left.push_back(VertexSet{});
    if (right.empty()) right.push_back(VertexSet{});
    std::vector<std::vector<int>> facets;
    for (VertexSet a : left)
        for (VertexSet b : right)
            if (!(a | b).empty()) facets.push_back((a | b).vertices());
    return from_facets(m1 + k2.vertex_count(), facets);
}

SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    auto facets = facet_lists(k1, 0);
    for (auto& f : facet_lists(k2, k1.vertex_count())) facets.push_back(std::move(f));
    return from_facets(k1.vertex_count() + k2.vertex_count(), facets);
}

SimplicialComplex union_along(const SimplicialComplex& k1, const SimplicialComplex& k2,
                              const SimplicialComplex& l) {
    const int n = k1.vertex_count();
    const int r = l.vertex_count();
    const int m2 = k2.vertex_count();
    if (r > n || r > m2) throw InputError("gluing complex has more vertices than an input");
    if (m2 <= r) throw InputError("second complex must have a vertex outside the overlap");
    const int offset = n - r;
    for (VertexSet f : l.facets()) {
        if (!k1.contains(f.shifted(offset)))
            throw InputError("gluing face " + f.to_string() + " is not a face of the first complex");
        if (!k2.contains(f)) throw InputError("gluing face " + f.to_string() + " is not a face of the second complex");
    }
    auto facets = facet_lists(k1, 0);
    for (auto& f : facet_lists(k2, offset)) facets.push_back(std::move(f));
    return from_facets(n + m2 - r, facets);
}

// --------------------------------------------------------------- homology

namespace {

int rational_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t p = pivot_row;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[pivot_row]);
        const Rational inv = Rational(1) / rows[pivot_row][c];
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational factor = rows[r][c] * inv;
            for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

}  // namespace

HomologyProfile homology(const SimplicialComplex& k) {
    HomologyProfile out;
    out.top_dim = k.dimension();
    if (out.top_dim < 0) return out;

    std::vector<std::vector<VertexSet>> by_dim(out.top_dim + 1);
    for (VertexSet f : k.faces())
        if (!f.empty()) by_dim[f.size() - 1].push_back(f);

    // rank_boundary[d] = rank of the boundary map out of d-chains; d = 0 is the augmentation.
    std::vector<int> rank_boundary(out.top_dim + 2, 0);
    rank_boundary[0] = by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= out.top_dim; ++d) {
        std::unordered_map<std::uint64_t, std::size_t> index;
        for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) index[by_dim[d - 1][i].bits()] = i;
        std::vector<std::vector<Rational>> rows;
        rows.reserve(by_dim[d].size());
        for (VertexSet face : by_dim[d]) {
            std::vector<Rational> row(by_dim[d - 1].size(), Rational(0));
            int sign = 1;
            for (int v : face.vertices()) {
                row[index.at(face.without(v).bits())] = sign;
                sign = -sign;
            }
            rows.push_back(std::move(row));
        }
        rank_boundary[d] = rational_rank(std::move(rows));
    }
    out.ranks.resize(out.top_dim + 1);
    for (int d = 0; d <= out.top_dim; ++d)
        out.ranks[d] = static_cast<int>(by_dim[d].size()) - rank_boundary[d] - rank_boundary[d + 1];
    return out;
}

long long euler_characteristic(const SimplicialComplex& k) {
    auto f = k.f_vector();
    long long chi = 0;
    for (std::size_t i = 1; i < f.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * f[i];
    return chi;
}

// -------------------------------------------------------------- predicates

namespace {

// u dominates v: swapping v for u in any face containing v but not u stays in K.
bool dominates(const SimplicialComplex& k, int u, int v) {
    for (VertexSet f : k.facets())
        if (f.contains(v) && !f.contains(u) && !k.contains(f.without(v).with(u))) return false;
    return true;
}

bool assign_labels(const std::vector<std::vector<bool>>& dom, std::vector<int>& order, std::vector<bool>& used) {
    const std::size_t m = dom.size();
    if (order.size() == m) return true;
    for (std::size_t c = 0; c < m; ++c) {
        if (used[c]) continue;
        bool ok = true;
        for (std::size_t o = 0; o < m && ok; ++o)
            if (!used[o] && o != c) ok = dom[c][o];
        if (!ok) continue;
        used[c] = true;
        order.push_back(static_cast<int>(c));
        if (assign_labels(dom, order, used)) return true;
        order.pop_back();
        used[c] = false;
    }
    return false;
}

SimplicialComplex relabelled(const SimplicialComplex& k, const std::vector<int>& label) {
    std::vector<int> position_of(k.vertex_count() + 1, 0);
    for (int v = 1; v <= k.vertex_count(); ++v) position_of[v] = label[v - 1];
    std::vector<std::vector<int>> facets;
    for (VertexSet f : k.facets()) facets.push_back(relabel(f, position_of).vertices());
    return from_facets(k.vertex_count(), facets);
}

}  // namespace

bool is_shifted_in_order(const SimplicialComplex& k) {
    for (VertexSet f : k.facets())
        for (int v : f.vertices())
            for (int u = 1; u < v; ++u)
                if (!f.contains(u) && !k.contains(f.without(v).with(u))) return false;
    return true;
}

std::optional<std::vector<int>> shifted_labelling(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    std::vector<std::vector<bool>> dom(m, std::vector<bool>(m, false));
    for (int u = 1; u <= m; ++u)
        for (int v = 1; v <= m; ++v) dom[u - 1][v - 1] = u == v || dominates(k, u, v);
    std::vector<int> order;
    std::vector<bool> used(m, false);
    if (!assign_labels(dom, order, used)) return std::nullopt;
    std::vector<int> label(m);
    for (int pos = 0; pos < m; ++pos) label[order[pos]] = pos + 1;
    if (!is_shifted_in_order(relabelled(k, label))) return std::nullopt;
    return label;
}

bool is_shifted(const SimplicialComplex& k) { return shifted_labelling(k).has_value(); }

bool is_flag(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    if (m > 24) throw InputError("is_flag is limited to 24 vertices");
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << m); ++b) {
        VertexSet s(b);
        if (k.contains(s)) continue;
        bool minimal = true;
        for (int v : s.vertices())
            if (!k.contains(s.without(v))) {
                minimal = false;
                break;
            }
        if (minimal && s.size() != 2) return false;
    }
    return true;
}

bool has_chordal_1skeleton(const SimplicialComplex& k) {
    const int m = k.vertex_count();
    std::vector<VertexSet> adj(m + 1);
    for (VertexSet f : k.faces())
        if (f.size() == 2) {
            auto e = f.vertices();
            adj[e[0]] = adj[e[0]].with(e[1]);
            adj[e[1]] = adj[e[1]].with(e[0]);
        }
    // Maximum cardinality search; the reverse visiting order is a perfect
    // elimination ordering exactly when the graph is chordal.
    std::vector<int> weight(m + 1, 0);
    std::vector<bool> numbered(m + 1, false);
    std::vector<int> visit;
    for (int step = 0; step < m; ++step) {
        int best = -1;
        for (int v = 1; v <= m; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        for (int u : adj[best].vertices())
            if (!numbered[u]) ++weight[u];
    }
    std::vector<int> position(m + 1);
    for (int i = 0; i < m; ++i) position[visit[i]] = i;
    // In reverse visit order, each vertex's earlier-visited neighbours must form a clique.
    for (int v = 1; v <= m; ++v) {
        std::vector<int> earlier;
        for (int u : adj[v].vertices())
            if (position[u] < position[v]) earlier.push_back(u);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            for (std::size_t j = i + 1; j < earlier.size(); ++j)
                if (!adj[earlier[i]].contains(earlier[j])) return false;
    }
    return true;
}

bool is_cone(const SimplicialComplex& k) {
    if (k.is_void()) return false;
    std::uint64_t common = ~std::uint64_t{0};
    for (VertexSet f : k.facets()) common &= f.bits();
    return common != 0;
}

std::optional<std::vector<int>> wedge_of_spheres_type(const SimplicialComplex& k) {
    if (k.is_void()) return std::vector<int>{-1};
    if (k.facets().size() == 1 || is_cone(k)) return std::vector<int>{};
    // Ghost vertices do not change |K|, but they would spoil the flag test.
    const SimplicialComplex core = full_subcomplex(k, k.covered_vertices()).complex;
    const bool certified = core.dimension() <= 0 || is_shifted(core) ||
                           (is_flag(core) && has_chordal_1skeleton(core));
    if (!certified) return std::nullopt;
    std::vector<int> spheres;
    const HomologyProfile h = homology(core);
    for (int d = 0; d < static_cast<int>(h.ranks.size()); ++d)
        spheres.insert(spheres.end(), h.ranks[d], d);
    return spheres;
}

// -------------------------------------------------------------------- JSON

nlohmann::json to_json(const SimplicialComplex& k) {
    nlohmann::json facets = nlohmann::json::array();
    for (VertexSet f : k.facets()) facets.push_back(f.vertices());
    return {{"m", k.vertex_count()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("facets"))
        throw InputError("complex must be an object with keys \"m\" and \"facets\"");
    if (!j["m"].is_number_integer()) throw InputError("\"m\" must be an integer");
    if (!j["facets"].is_array()) throw InputError("\"facets\" must be an array");
    const int m = j["m"].get<int>();
    std::vector<std::vector<int>> faces;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw InputError("each facet must be an array of vertices");
        std::vector<int> face;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw InputError("vertices must be integers");
            face.push_back(v.get<int>());
        }
        faces.push_back(std::move(face));
    }
    if (m == 0 && faces.empty()) return SimplicialComplex::empty(0);
    if (faces.empty()) return SimplicialComplex::empty(m);
    return SimplicialComplex::build(m, faces);
}

}  // namespace polyco
