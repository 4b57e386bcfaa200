#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyco {

/// Thrown for malformed user input (bad vertex ranges, arity mismatches,
/// violated theorem hypotheses).  The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite subset of {1..64}, stored as a bitmask.  Vertex v occupies bit v-1.
class VertexSet {
public:
    static constexpr int kMaxVertex = 64;

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> vertices);
    static VertexSet from_vector(const std::vector<int>& vertices);
    /// {1..m}
    static VertexSet range(int m);
    /// {lo..hi}, empty when lo > hi
    static VertexSet range(int lo, int hi);

    std::uint64_t bits() const { return bits_; }
    bool empty() const { return bits_ == 0; }
    int size() const;
    bool contains(int v) const;
    bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Largest vertex, 0 for the empty set.
    int max_vertex() const;

    VertexSet with(int v) const;
    VertexSet without(int v) const;
    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    /// Adds `offset` to every vertex.
    VertexSet shifted(int offset) const;

    /// Sorted ascending.
    std::vector<int> vertices() const;
    /// "{1,2,4}"
    std::string to_string() const;

    bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted vertex lists ({1,2} < {1,2,3} < {1,3}).
bool lex_less(VertexSet a, VertexSet b);

/// Orders first by size, then lexicographically.  Used for face listings.
bool graded_less(VertexSet a, VertexSet b);

struct HomologyProfile {
    /// ranks[d] = dim of reduced rational homology in degree d.
    std::vector<int> ranks;
    /// Dimension of the complex; -1 for the complex whose only face is the empty one.
    int top_dim = -1;

    bool operator==(const HomologyProfile&) const = default;
};

/// A simplicial complex on the ground set {1..m}, stored by its facets.
///
/// The empty face is implicit.  Vertices of the ground set that lie in no
/// facet are ghost vertices; they still count toward m.  Facets are kept
/// sorted lexicographically so every derived listing is deterministic.
class SimplicialComplex {
public:
    /// Downward closure of `faces` on {1..m}.  Throws InputError if m < 1,
    /// a face is empty, or a vertex lies outside {1..m}.
    static SimplicialComplex build(int m, const std::vector<std::vector<int>>& faces);
    /// The complex on {1..m} whose only face is the empty face (m may be 0).
    static SimplicialComplex empty(int m);
    static SimplicialComplex simplex(int m);
    static SimplicialComplex simplex_boundary(int m);
    /// m isolated vertices.
    static SimplicialComplex discrete(int m);

    int vertex_count() const { return m_; }
    VertexSet ground_set() const { return VertexSet::range(m_); }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool contains(VertexSet face) const;
    /// -1 when only the empty face exists.
    int dimension() const;
    bool is_void() const { return facets_.empty(); }

    /// Every face including the empty one, ordered by graded_less.
    std::vector<VertexSet> faces() const;
    /// Faces of dimension d (d = -1 gives the empty face).
    std::vector<VertexSet> faces_of_dim(int d) const;
    /// f[d+1] = number of faces of dimension d, starting at the empty face.
    std::vector<long long> f_vector() const;

    VertexSet covered_vertices() const;
    VertexSet ghost_vertices() const { return ground_set() - covered_vertices(); }

    bool operator==(const SimplicialComplex&) const = default;

private:
    SimplicialComplex(int m, std::vector<VertexSet> facets);
    static std::vector<VertexSet> maximal_members(std::vector<VertexSet> sets);

    int m_ = 0;
    std::vector<VertexSet> facets_;
};

/// K_I re-indexed onto {1..|I|}.  index_map[k-1] is the original vertex
/// carried by new vertex k.
struct FullSubcomplex {
    SimplicialComplex complex;
    std::vector<int> index_map;

    /// Maps a face of `complex` back into the original ground set.
    VertexSet lift(VertexSet local) const;
};

FullSubcomplex full_subcomplex(const SimplicialComplex& k, VertexSet subset);

/// Facets with at least two vertices.
std::vector<VertexSet> maximal_faces_ge2(const SimplicialComplex& k);
/// Faces with at least two vertices.
std::vector<VertexSet> faces_ge2(const SimplicialComplex& k);
/// Nonempty subsets of {1..m} that are not faces, ordered by graded_less.
/// Limited to m <= 24.
std::vector<VertexSet> missing_subsets(const SimplicialComplex& k);

/// Join with the vertices of k2 shifted past those of k1.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);
SimplicialComplex disjoint_union(const SimplicialComplex& k1, const SimplicialComplex& k2);
/// Glues k1 on {1..n} and k2 on {1..m2} along l on {1..r}: the last r
/// vertices of k1 are identified with the first r vertices of k2, and l is
/// placed on those shared vertices.  The result lives on {1..n+m2-r}.
/// Throws InputError if l is not a subcomplex of both after placement, or
/// if k2 has no vertex outside the overlap.
SimplicialComplex union_along(const SimplicialComplex& k1, const SimplicialComplex& k2,
                              const SimplicialComplex& l);

/// Reduced rational homology by Gaussian elimination of the boundary maps.
HomologyProfile homology(const SimplicialComplex& k);
/// Alternating sum of the f-vector excluding the empty face.
long long euler_characteristic(const SimplicialComplex& k);

/// A labelling of the vertices (label[v-1] = new label of v) under which
/// the complex is shifted, or nullopt.
std::optional<std::vector<int>> shifted_labelling(const SimplicialComplex& k);
bool is_shifted(const SimplicialComplex& k);
/// Checks shiftedness for the given vertex order only.
bool is_shifted_in_order(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);
bool has_chordal_1skeleton(const SimplicialComplex& k);
/// True if some vertex lies in every facet.
bool is_cone(const SimplicialComplex& k);

/// {"m": m, "facets": [[...], ...]}, vertices sorted within facets and facets
/// sorted lexicographically.
nlohmann::json to_json(const SimplicialComplex& k);
/// Inverse of to_json.  Throws InputError on malformed content.
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// Sphere dimensions of a wedge of spheres equivalent to |K|, when |K| lies in
/// a class where homology determines the homotopy type (0-dimensional, a
/// simplex, a cone, shifted, or flag with chordal 1-skeleton).  Contractible
/// gives an empty list.  The void complex is reported as a single S^-1, which
/// makes its unreduced suspension S^0.
std::optional<std::vector<int>> wedge_of_spheres_type(const SimplicialComplex& k);

}  // namespace polyco
