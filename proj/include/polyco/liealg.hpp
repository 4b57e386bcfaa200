#pragma once

#include "polyco/scomplex.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyco {

/// A free generator.  Either a plain symbol x_k (empty subset, index = k) or
/// a subset generator a_{J,i} with |J| >= 2 and 1 <= i <= |J|-1.
struct Generator {
    VertexSet subset;
    int index = 1;

    static Generator symbol(int k);
    /// Throws InputError when the (J, i) constraints fail.
    static Generator subset_copy(VertexSet j, int i);

    bool is_symbol() const { return subset.empty(); }
    /// "x3" or "a{1,2}#1"
    std::string name() const;

    bool operator==(const Generator&) const = default;
};

/// Global generator order: symbols first (by k), then subset generators by
/// (J lexicographic, i).
bool operator<(const Generator& a, const Generator& b);

/// A binary Lie bracket over generators.  Immutable; subtrees are shared.
class Bracket {
public:
    static Bracket leaf(Generator g);
    static Bracket combine(const Bracket& left, const Bracket& right);

    bool is_leaf() const { return !node_->left; }
    const Generator& generator() const;
    const Bracket& left() const;
    const Bracket& right() const;
    int weight() const { return static_cast<int>(node_->word.size()); }
    /// Leaves read left to right.  For Lyndon brackets this is the Lyndon word.
    const std::vector<Generator>& word() const { return node_->word; }
    /// Leaf counts per generator, ordered by the generator order.
    std::vector<std::pair<Generator, int>> multidegree() const;
    /// Nested pair notation, "[a{1,2}#1,[x1,x2]]".
    std::string to_string() const;

    bool operator==(const Bracket& other) const { return word() == other.word() && to_string() == other.to_string(); }

private:
    struct Node {
        std::optional<Generator> leaf;
        std::shared_ptr<const Bracket> left, right;
        std::vector<Generator> word;
    };
    explicit Bracket(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Orders by (weight, word lexicographic in the generator order).
bool bracket_less(const Bracket& a, const Bracket& b);

/// S_I: all a_{J,i} with J a subset of I, |J| >= 2, in the generator order.
std::vector<Generator> generators_for(VertexSet subset);
/// x_1 .. x_k.
std::vector<Generator> symbol_alphabet(int k);

/// Optional pruning for Lyndon enumeration: every letter carries a positive
/// degree, and words whose total degree exceeds `max_degree` are skipped.
struct DegreeBudget {
    std::vector<int> letter_degrees;  // parallel to the alphabet
    int max_degree = 0;
};

/// Lyndon words of length <= weight_bound on the alphabet (which must be
/// strictly increasing in the generator order), each turned into a bracket
/// by standard factorisation.  Sorted by bracket_less.
std::vector<Bracket> hall_basis(const std::vector<Generator>& alphabet, int weight_bound,
                                const std::optional<DegreeBudget>& budget = std::nullopt);

/// Calls `visit` on every Lyndon word (as letter positions) with the same
/// bounds as hall_basis, in lexicographic order.  Used when the caller wants
/// to filter before materialising brackets.
void for_each_lyndon_word(int alphabet_size, int max_length, const std::optional<DegreeBudget>& budget,
                          const std::function<void(const std::vector<int>&)>& visit);

/// Bracket from a Lyndon word by the standard right factorisation.
Bracket standard_bracketing(const std::vector<Generator>& lyndon_word);
bool is_lyndon(const std::vector<int>& word);

struct BracketStats {
    /// b(J) for every J with b(J) > 0, ordered lexicographically by J.
    std::vector<std::pair<VertexSet, int>> subset_counts;
    /// l[i-1] = l_i(b) = sum of b(J) over J containing i.
    std::vector<int> vertex_counts;
    int weight = 0;

    int count_for(VertexSet j) const;
};

BracketStats stats(const Bracket& b, int m);
/// I_b = I intersected with the vertices that occur in the bracket's subsets.
VertexSet restricted_support(const Bracket& b, VertexSet subset);

/// Number of Lyndon brackets of the given multidegree, by the multigraded
/// Witt formula (1/n) sum_{d | gcd} mu(d) (n/d)! / prod (n_i/d)!.
std::uint64_t witt_dimension(const std::vector<int>& multidegree);

}  // namespace polyco
