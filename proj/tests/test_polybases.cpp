#include "structcon/oracle.hpp"
#include "structcon/polybases.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
SparsePoly poly(int n, const std::vector<std::pair<Index, long>>& terms) {
    SparsePoly p(n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

TEST(Poly, AtomZeroTwoOne) { EXPECT_EQ(expand_atom({0, 2, 1}), poly(3, {{{1, 1, 1}, 1}, {{0, 2, 1}, 1}})); }

TEST(Poly, KeyZeroTwoOne) {
    EXPECT_EQ(expand_key({0, 2, 1}),
              poly(3, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}, {{1, 1, 1}, 1}, {{0, 2, 1}, 1}}));
    EXPECT_EQ(kohnert_closure(labeled_diagram_of({0, 2, 1}), false).size(), 5u);
}

TEST(Poly, LascouxZeroTwoOne) {
    SparsePoly want = expand_key({0, 2, 1}) - poly(3, {{{2, 2, 0}, 1}, {{2, 1, 1}, 2}, {{1, 2, 1}, 2}}) +
                      poly(3, {{{2, 2, 1}, 1}});
    EXPECT_EQ(expand_lascoux({0, 2, 1}), want);
}

TEST(Poly, SchubertAndGrothendieck2143) {
    SparsePoly s = poly(4, {{{2, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 1}, {{1, 0, 1, 0}, 1}});
    EXPECT_EQ(expand_schubert({1, 0, 1, 0}), s);
    EXPECT_EQ(expand_grothendieck({1, 0, 1, 0}),
              s - poly(4, {{{2, 1, 0, 0}, 1}, {{2, 0, 1, 0}, 1}, {{1, 1, 1, 0}, 1}}) + poly(4, {{{2, 1, 1, 0}, 1}}));
    EXPECT_EQ(ladder_closure(Permutation{2, 1, 4, 3}, false).size(), 3u);
}

TEST(Poly, SlidesOfPartitionsAreMonomialsAndKeys) {
    // dominant alpha: key = x^alpha, fundamental slide = x^alpha
    EXPECT_EQ(expand_key({2, 1, 0}), poly(3, {{{2, 1, 0}, 1}}));
    EXPECT_EQ(expand_slide(SlideKind::fundamental, {2, 1, 0}), poly(3, {{{2, 1, 0}, 1}}));
    EXPECT_EQ(expand_slide(SlideKind::monomial, {0, 1}), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST(Poly, LowestDegreePartIsHomogeneousCousin) {
    for (const auto& a : weak_compositions_of(3, 3)) {
        EXPECT_EQ(expand_lascoux(a.parts()).homogeneous_part(3), expand_key(a.parts())) << format_index(a.parts());
        EXPECT_EQ(expand_grothendieck(a.parts()).homogeneous_part(3), expand_schubert(a.parts()))
            << format_index(a.parts());
    }
}

TEST(Poly, SchubertStableUnderPadding) {
    for (const auto& a : weak_compositions_of(3, 2)) {
        Index p = a.parts();
        p.push_back(0);
        EXPECT_EQ(expand_schubert(a.parts()).embedded(4), expand_schubert(p));
    }
}

TEST(Poly, KeysSumToSchurOnAllRearrangements) {
    // key of the reversed partition is the Schur polynomial
    EXPECT_EQ(expand_key({0, 1, 2}), schur(Partition{2, 1}, 3));
}

TEST(Poly, HomogeneousTransitionsUnitriangular) {
    for (auto b : all_pbases()) {
        if (!is_homogeneous(b)) continue;
        for (int k = 0; k <= 3; ++k) {
            const auto& d = poly_data(b, 3, k);
            EXPECT_TRUE(d.to_monomials->is_unitriangular()) << basis_name(b);
            EXPECT_TRUE((*d.to_monomials * *d.inverse).is_identity()) << basis_name(b);
        }
    }
}

TEST(Poly, StructureMatchesOracle) {
    for (auto b : all_pbases())
        for (const auto& a : weak_compositions_of(3, 1))
            for (const auto& c : weak_compositions_of(3, 2))
                EXPECT_EQ(nonzero(poly_structure(b, a.parts(), c.parts())),
                          nonzero(oracle_structure(b, a.parts(), c.parts())))
                    << basis_name(b) << " " << format_index(a.parts()) << " * " << format_index(c.parts());
}

TEST(Poly, KnownProducts) {
    EXPECT_EQ(nonzero(poly_structure(PBasis::grothendieck, {0, 1}, {1, 0})),
              (CoeffMap{{{2, 0}, 1}, {{1, 1}, 1}, {{2, 1}, -1}}));
    EXPECT_EQ(nonzero(poly_structure(PBasis::key, {0, 1, 1}, {1, 0, 0})), (CoeffMap{{{2, 0, 1}, 1}, {{1, 1, 1}, 1}}));
}

TEST(Poly, SchubertConstantsNonnegative) {
    for (const auto& a : weak_compositions_of(4, 2))
        for (const auto& c : weak_compositions_of(4, 2))
            for (const auto& [k, v] : poly_structure(PBasis::schubert, a.parts(), c.parts())) EXPECT_GE(v, 0);
}

TEST(Poly, RejectsBadNames) {
    EXPECT_THROW(parse_pbasis("kez"), std::invalid_argument);
    EXPECT_EQ(parse_pbasis("lascoux"), PBasis::lascoux);
}
