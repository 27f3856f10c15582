#include "structcon/core.hpp"
#include "structcon/poly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace structcon;

TEST(Index, ParseAndFormat) {
    EXPECT_EQ(parse_index("1,0,2"), (Index{1, 0, 2}));
    EXPECT_EQ(parse_index(""), Index{});
    EXPECT_EQ(format_index(Index{3, 1}), "3,1");
    EXPECT_THROW(parse_index("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_index("a"), std::invalid_argument);
    EXPECT_THROW(parse_index("-1"), std::invalid_argument);
}

TEST(Classes, Validation) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(StrongComposition({1, 0}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
    EXPECT_EQ(Partition({3, 1, 1}).conjugate().parts(), (Index{3, 1, 1}));
    EXPECT_EQ(Partition({4, 2}).conjugate().parts(), (Index{2, 2, 1, 1}));
}

TEST(Dominance, PrefixSumsAtLeast) {
    // a below b iff a's prefix sums dominate
    EXPECT_TRUE(dominance_leq(Index{3}, Index{1, 1, 1}));
    EXPECT_FALSE(dominance_leq(Index{1, 1, 1}, Index{3}));
    EXPECT_TRUE(dominance_leq(Index{2, 1, 1}, Index{1, 2, 1}));
    EXPECT_FALSE(dominance_leq(Index{1, 3}, Index{2, 2}));
    EXPECT_FALSE(dominance_leq(Index{2, 2}, Index{1, 3}) && dominance_leq(Index{1, 3}, Index{2, 2}));
    EXPECT_TRUE(refines(Index{1, 1, 2}, Index{2, 2}));
    EXPECT_FALSE(refines(Index{1, 2, 1}, Index{2, 2}));
}

TEST(Dominance, PartialOrderAxioms) {
    auto comps = strong_compositions_of(5);
    for (const auto& a : comps)
        for (const auto& b : comps) {
            if (a.parts() != b.parts())
                EXPECT_FALSE(dominance_leq(a.parts(), b.parts()) && dominance_leq(b.parts(), a.parts()));
            for (const auto& c : comps)
                if (dominance_leq(a.parts(), b.parts()) && dominance_leq(b.parts(), c.parts()))
                    EXPECT_TRUE(dominance_leq(a.parts(), c.parts()));
        }
}

TEST(Enumeration, Counts) {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(partitions_of(k).size(), static_cast<std::size_t>(p[k]));
    for (int k = 1; k <= 8; ++k) EXPECT_EQ(strong_compositions_of(k).size(), std::size_t{1} << (k - 1));
    EXPECT_EQ(weak_compositions_of(3, 4).size(), 15u);
    EXPECT_EQ(partitions_of(6, 2).size(), 4u);
}

TEST(Canonical, SizeThenLexLarger) {
    EXPECT_TRUE(canonical_less(Index{1}, Index{2}));
    EXPECT_TRUE(canonical_less(Index{2}, Index{1, 1}));
    EXPECT_TRUE(canonical_less(Index{2, 1, 0}, Index{1, 2, 0}));
    auto ws = weak_compositions_of(3, 3);
    std::vector<Index> v;
    for (const auto& w : ws) v.push_back(w.parts());
    std::shuffle(v.begin(), v.end(), std::mt19937(7));
    std::sort(v.begin(), v.end(), CanonicalLess{});
    EXPECT_EQ(v.front(), (Index{3, 0, 0}));
    EXPECT_EQ(v.back(), (Index{0, 0, 3}));
}

TEST(Lehmer, CodeOf2143) {
    EXPECT_EQ(lehmer_code(Permutation{2, 1, 3}).parts(), (Index{1, 0}));
    EXPECT_EQ(lehmer_code(Permutation{2, 1, 3}, 3).parts(), (Index{1, 0, 0}));
    EXPECT_EQ(lehmer_code(Permutation{2, 1, 4, 3}, 4).parts(), (Index{1, 0, 1, 0}));
    EXPECT_EQ(code_inverse(WeakComposition{1, 0, 1, 0}).word(), (std::vector<int>{2, 1, 4, 3}));
}

TEST(Lehmer, BijectionOnS5) {
    for (const auto& w : permutations_of(5)) {
        auto c = lehmer_code(w, 5);
        EXPECT_EQ(code_inverse(c, 5).word(), w.word());
    }
}

TEST(Diagram, RowsOnTop) {
    Diagram d = diagram_of(Index{0, 2, 1});
    EXPECT_EQ(d.size(), 3u);
    EXPECT_TRUE(d.count(Cell{2, 1}) && d.count(Cell{2, 2}) && d.count(Cell{3, 1}));
    EXPECT_EQ(row_weight(d, 3), (std::vector<int>{0, 2, 1}));
}

TEST(Poly, Arithmetic) {
    SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
    SparsePoly p = (x + y) * (x - y);
    EXPECT_EQ(p, x * x - y * y);
    EXPECT_EQ(p.num_terms(), 2u);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((x * Rational(1, 2)).coeff({1, 0}), Rational(1, 2));
    EXPECT_FALSE(p.symmetry_violation() == std::nullopt);
    EXPECT_EQ(((x + y) * (x + y)).symmetry_violation(), std::nullopt);
}

TEST(Rational, ParseExact) {
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("4"), Rational(4));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
}
