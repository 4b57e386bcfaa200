#include "oracles.hpp"
#include "polyco/liealg.hpp"

#include <doctest.h>

using namespace polyco;

TEST_CASE("generator names and order") {
    CHECK(Generator::symbol(3).name() == "x3");
    CHECK(Generator::subset_copy(VertexSet{1, 2}, 1).name() == "a{1,2}#1");
    CHECK(Generator::symbol(2) < Generator::subset_copy(VertexSet{1, 2}, 1));
    CHECK(Generator::subset_copy(VertexSet{1, 2}, 1) < Generator::subset_copy(VertexSet{1, 2, 3}, 1));
    CHECK(Generator::subset_copy(VertexSet{1, 2, 3}, 2) < Generator::subset_copy(VertexSet{1, 3}, 1));
    CHECK_THROWS_AS(Generator::subset_copy(VertexSet{1}, 1), InputError);
    CHECK_THROWS_AS(Generator::subset_copy(VertexSet{1, 2}, 2), InputError);
}

TEST_CASE("subset alphabets") {
    const auto s = generators_for(VertexSet{1, 2, 3});
    REQUIRE(s.size() == 5);
    CHECK(s[0].name() == "a{1,2}#1");
    CHECK(s[1].name() == "a{1,2,3}#1");
    CHECK(s[2].name() == "a{1,2,3}#2");
    CHECK(s[3].name() == "a{1,3}#1");
    CHECK(s[4].name() == "a{2,3}#1");
    CHECK(generators_for(VertexSet{4}).empty());
    // sum over J of (|J| - 1) for the 4-element set
    CHECK(generators_for(VertexSet::range(4)).size() == 17);
}

TEST_CASE("two letters up to weight three give five brackets") {
    const auto basis = hall_basis(symbol_alphabet(2), 3);
    REQUIRE(basis.size() == 5);
    CHECK(basis[0].to_string() == "x1");
    CHECK(basis[1].to_string() == "x2");
    CHECK(basis[2].to_string() == "[x1,x2]");
    CHECK(basis[3].to_string() == "[x1,[x1,x2]]");
    CHECK(basis[4].to_string() == "[[x1,x2],x2]");
    CHECK(basis[4].weight() == 3);
}

TEST_CASE("standard bracketing splits off the longest Lyndon suffix") {
    const Generator x = Generator::symbol(1), y = Generator::symbol(2);
    CHECK(standard_bracketing({x, x, y, x, y}).to_string() == "[[x1,[x1,x2]],[x1,x2]]");
    CHECK(standard_bracketing({x, y, y}).to_string() == "[[x1,x2],x2]");
    CHECK_THROWS_AS(standard_bracketing({y, x}), std::logic_error);
}

TEST_CASE("Duval test agrees with rotations") {
    for (int len = 1; len <= 7; ++len) {
        std::vector<int> w(len, 0);
        while (true) {
            CHECK(is_lyndon(w) == oracle::lyndon_by_rotation(w));
            int i = len - 1;
            while (i >= 0 && w[i] == 2) w[i--] = 0;
            if (i < 0) break;
            ++w[i];
        }
    }
}

TEST_CASE("Lyndon enumeration matches brute force and Witt") {
    for (int k = 1; k <= 3; ++k) {
        const auto brute = oracle::lyndon_counts_by_brute_force(k, 7);
        std::map<std::vector<int>, std::uint64_t> enumerated;
        for_each_lyndon_word(k, 7, std::nullopt, [&](const std::vector<int>& w) {
            std::vector<int> deg(k, 0);
            for (int x : w) ++deg[x];
            ++enumerated[deg];
        });
        CHECK(enumerated == brute);
        for (const auto& [deg, count] : brute) CHECK(witt_dimension(deg) == count);
    }
}

TEST_CASE("Witt formula values") {
    CHECK(witt_dimension({1, 1}) == 1);
    CHECK(witt_dimension({2, 2}) == 1);
    CHECK(witt_dimension({3, 3}) == 3);
    CHECK(witt_dimension({4}) == 0);
    CHECK(witt_dimension({1}) == 1);
    CHECK(witt_dimension({2, 1, 1}) == 3);
    CHECK_THROWS_AS(witt_dimension({0, 0}), InputError);
}

TEST_CASE("bracket statistics") {
    const Generator a = Generator::subset_copy(VertexSet{1, 2}, 1);
    const Generator b = Generator::subset_copy(VertexSet{2, 3}, 1);
    const Bracket br = Bracket::combine(Bracket::combine(Bracket::leaf(a), Bracket::leaf(b)), Bracket::leaf(b));
    const BracketStats st = stats(br, 4);
    CHECK(st.weight == 3);
    CHECK(st.count_for(VertexSet{1, 2}) == 1);
    CHECK(st.count_for(VertexSet{2, 3}) == 2);
    CHECK(st.count_for(VertexSet{1, 3}) == 0);
    CHECK(st.vertex_counts == std::vector<int>{1, 3, 2, 0});
    CHECK(restricted_support(br, VertexSet::range(4)) == VertexSet{1, 2, 3});
    CHECK(restricted_support(br, VertexSet{1, 4}) == VertexSet{1});
    CHECK_THROWS_AS(stats(br, 2), InputError);
}

TEST_CASE("degree budget prunes heavy words only") {
    DegreeBudget budget{{1, 2}, 3};
    const auto pruned = hall_basis(symbol_alphabet(2), 4, budget);
    // x1 (1), x2 (2), [x1,x2] (3), [x1,[x1,x2]] (4) pruned, ...
    std::vector<std::string> names;
    for (const auto& b : pruned) names.push_back(b.to_string());
    CHECK(names == std::vector<std::string>{"x1", "x2", "[x1,x2]"});
    CHECK_THROWS_AS(hall_basis(symbol_alphabet(2), 0), InputError);
    CHECK_THROWS_AS(hall_basis({Generator::symbol(2), Generator::symbol(1)}, 2), InputError);
}
