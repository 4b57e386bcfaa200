#include "polyco/liealg.hpp"

#include "polyco/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace polyco {

Generator Generator::symbol(int k) {
    if (k < 1) throw InputError("symbol index must be positive");
    return Generator{VertexSet{}, k};
}

Generator Generator::subset_copy(VertexSet j, int i) {
    if (j.size() < 2) throw InputError("generator subset " + j.to_string() + " needs at least two vertices");
    if (i < 1 || i > j.size() - 1)
        throw InputError("copy index " + std::to_string(i) + " outside 1.." + std::to_string(j.size() - 1));
    return Generator{j, i};
}

std::string Generator::name() const {
    if (is_symbol()) return "x" + std::to_string(index);
    return "a" + subset.to_string() + "#" + std::to_string(index);
}

bool operator<(const Generator& a, const Generator& b) {
    if (a.is_symbol() != b.is_symbol()) return a.is_symbol();
    if (a.subset != b.subset) return lex_less(a.subset, b.subset);
    return a.index < b.index;
}

// ------------------------------------------------------------------ Bracket

Bracket Bracket::leaf(Generator g) {
    auto node = std::make_shared<Node>();
    node->leaf = g;
    node->word = {g};
    return Bracket(std::move(node));
}

Bracket Bracket::combine(const Bracket& left, const Bracket& right) {
    auto node = std::make_shared<Node>();
    node->left = std::make_shared<const Bracket>(left);
    node->right = std::make_shared<const Bracket>(right);
    node->word = left.word();
    node->word.insert(node->word.end(), right.word().begin(), right.word().end());
    return Bracket(std::move(node));
}

const Generator& Bracket::generator() const {
    if (!node_->leaf) throw std::logic_error("generator() on a composite bracket");
    return *node_->leaf;
}

const Bracket& Bracket::left() const {
    if (!node_->left) throw std::logic_error("left() on a leaf bracket");
    return *node_->left;
}

const Bracket& Bracket::right() const {
    if (!node_->right) throw std::logic_error("right() on a leaf bracket");
    return *node_->right;
}

std::vector<std::pair<Generator, int>> Bracket::multidegree() const {
    std::vector<Generator> letters = word();
    std::sort(letters.begin(), letters.end());
    std::vector<std::pair<Generator, int>> out;
    for (const Generator& g : letters) {
        if (!out.empty() && out.back().first == g)
            ++out.back().second;
        else
            out.emplace_back(g, 1);
    }
    return out;
}

std::string Bracket::to_string() const {
    if (is_leaf()) return generator().name();
    return "[" + left().to_string() + "," + right().to_string() + "]";
}

bool bracket_less(const Bracket& a, const Bracket& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(a.word().begin(), a.word().end(), b.word().begin(), b.word().end());
}

// ---------------------------------------------------------------- alphabets

std::vector<Generator> generators_for(VertexSet subset) {
    std::vector<Generator> out;
    const auto verts = subset.vertices();
    const std::size_t n = verts.size();
    if (n > 20) throw InputError("generator alphabet limited to subsets of at most 20 vertices");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet j;
        for (std::size_t b = 0; b < n; ++b)
            if ((mask >> b) & 1U) j = j.with(verts[b]);
        for (int i = 1; i < j.size(); ++i) out.push_back(Generator{j, i});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Generator> symbol_alphabet(int k) {
    std::vector<Generator> out;
    for (int i = 1; i <= k; ++i) out.push_back(Generator::symbol(i));
    return out;
}

// ------------------------------------------------------ Lyndon enumeration

bool is_lyndon(const std::vector<int>& word) {
    const std::size_t n = word.size();
    if (n == 0) return false;
    // Duval: a word is Lyndon iff its factorisation has a single factor of length n.
    std::size_t i = 0, j = 1;
    while (j < n) {
        if (word[i] == word[j]) {
            ++i;
            ++j;
        } else if (word[i] < word[j]) {
            i = 0;
            ++j;
        } else {
            return false;
        }
    }
    return i == 0;
}

namespace {

struct LyndonWalker {
    int alphabet_size;
    int max_length;
    const std::optional<DegreeBudget>& budget;
    const std::function<void(const std::vector<int>&)>& visit;
    std::vector<int> word;

    int letter_degree(int letter) const { return budget ? budget->letter_degrees[letter] : 0; }

    // Fredricksen-Kessler-Maiorana recursion: `word` is a prenecklace whose
    // longest Lyndon prefix period is `period`.
    void extend(int period, int degree) {
        if (!word.empty() && static_cast<int>(word.size()) == period) visit(word);
        if (static_cast<int>(word.size()) == max_length) return;
        const int start = word.empty() ? 0 : word[word.size() - period];
        for (int c = start; c < alphabet_size; ++c) {
            const int next_degree = degree + letter_degree(c);
            if (budget && next_degree > budget->max_degree) continue;
            word.push_back(c);
            extend(word.size() == 1 || c != start ? static_cast<int>(word.size()) : period, next_degree);
            word.pop_back();
        }
    }
};

}  // namespace

void for_each_lyndon_word(int alphabet_size, int max_length, const std::optional<DegreeBudget>& budget,
                          const std::function<void(const std::vector<int>&)>& visit) {
    if (max_length < 1) throw InputError("weight bound must be at least 1");
    if (budget) {
        if (static_cast<int>(budget->letter_degrees.size()) != alphabet_size)
            throw std::logic_error("degree budget does not match the alphabet");
        for (int d : budget->letter_degrees)
            if (d < 1) throw std::logic_error("letter degrees must be positive");
    }
    LyndonWalker walker{alphabet_size, max_length, budget, visit, {}};
    walker.extend(1, 0);
}

Bracket standard_bracketing(const std::vector<Generator>& lyndon_word) {
    if (lyndon_word.size() == 1) return Bracket::leaf(lyndon_word.front());
    std::vector<int> codes;
    {
        std::vector<Generator> sorted = lyndon_word;
        std::sort(sorted.begin(), sorted.end());
        for (const Generator& g : lyndon_word)
            codes.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), g) - sorted.begin()));
    }
    if (!is_lyndon(codes)) throw std::logic_error("standard_bracketing: word is not Lyndon");
    // Right factor: the longest proper suffix that is itself Lyndon.
    for (std::size_t split = 1; split < codes.size(); ++split) {
        std::vector<int> suffix(codes.begin() + static_cast<std::ptrdiff_t>(split), codes.end());
        if (!is_lyndon(suffix)) continue;
        std::vector<Generator> u(lyndon_word.begin(), lyndon_word.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<Generator> v(lyndon_word.begin() + static_cast<std::ptrdiff_t>(split), lyndon_word.end());
        return Bracket::combine(standard_bracketing(u), standard_bracketing(v));
    }
    throw std::logic_error("standard_bracketing: word is not Lyndon");
}

std::vector<Bracket> hall_basis(const std::vector<Generator>& alphabet, int weight_bound,
                                const std::optional<DegreeBudget>& budget) {
    for (std::size_t i = 1; i < alphabet.size(); ++i)
        if (!(alphabet[i - 1] < alphabet[i])) throw InputError("alphabet must be strictly increasing");
    std::vector<Bracket> out;
    std::map<std::vector<int>, Bracket> memo;
    std::function<Bracket(const std::vector<int>&)> build = [&](const std::vector<int>& w) -> Bracket {
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        Bracket b = [&] {
            if (w.size() == 1) return Bracket::leaf(alphabet[w[0]]);
            for (std::size_t split = 1; split < w.size(); ++split) {
                std::vector<int> v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
                if (!is_lyndon(v)) continue;
                std::vector<int> u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
                return Bracket::combine(build(u), build(v));
            }
            throw std::logic_error("hall_basis: enumerated word is not Lyndon");
        }();
        memo.emplace(w, b);
        return b;
    };
    for_each_lyndon_word(static_cast<int>(alphabet.size()), weight_bound, budget,
                         [&](const std::vector<int>& w) { out.push_back(build(w)); });
    std::stable_sort(out.begin(), out.end(), bracket_less);
    return out;
}

// -------------------------------------------------------------- statistics

int BracketStats::count_for(VertexSet j) const {
    for (const auto& [subset, count] : subset_counts)
        if (subset == j) return count;
    return 0;
}

BracketStats stats(const Bracket& b, int m) {
    BracketStats out;
    out.weight = b.weight();
    out.vertex_counts.assign(m, 0);
    for (const auto& [g, count] : b.multidegree()) {
        if (g.is_symbol()) continue;
        if (!g.subset.subset_of(VertexSet::range(m)))
            throw InputError("bracket uses subset " + g.subset.to_string() + " outside {1.." + std::to_string(m) + "}");
        if (!out.subset_counts.empty() && out.subset_counts.back().first == g.subset)
            out.subset_counts.back().second += count;
        else
            out.subset_counts.emplace_back(g.subset, count);
        for (int v : g.subset.vertices()) out.vertex_counts[v - 1] += count;
    }
    return out;
}

VertexSet restricted_support(const Bracket& b, VertexSet subset) {
    VertexSet used;
    for (const Generator& g : b.word()) used = used | g.subset;
    return subset & used;
}

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

std::uint64_t witt_dimension(const std::vector<int>& multidegree) {
    int n = 0;
    int g = 0;
    for (int k : multidegree) {
        if (k < 0) throw InputError("multidegree entries must be non-negative");
        n += k;
        g = std::gcd(g, k);
    }
    if (n < 1) throw InputError("multidegree must have positive total weight");
    BigInt sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        const int mu = mobius(d);
        if (mu == 0) continue;
        BigInt term = factorial(n / d);
        for (int k : multidegree) term /= factorial(k / d);
        sum += mu * term;
    }
    if (sum % n != 0) throw std::logic_error("Witt sum not divisible by total weight");
    return static_cast<std::uint64_t>(sum / n);
}

}  // namespace polyco
