#include "structcon/bridge.hpp"
#include "structcon/io.hpp"
#include "structcon/oracle.hpp"

#include <gtest/gtest.h>

using namespace structcon;

namespace {
CoeffMap nonzero(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}
}  // namespace

TEST(Bridge, MonomialInputs) {
    EXPECT_EQ(nonzero(schur_from_qsym({{{1, 1}, 1}}, QBasis::M)), (CoeffMap{{{1, 1}, 1}}));
    EXPECT_EQ(nonzero(schur_from_qsym({{{2}, 1}}, QBasis::M)), (CoeffMap{{{2}, 1}, {{1, 1}, -1}}));
}

TEST(Bridge, RoundTripThroughF) {
    for (int k = 1; k <= 4; ++k)
        for (auto b : {SymBasis::m, SymBasis::e, SymBasis::h, SymBasis::p, SymBasis::s})
            for (const auto& lam : partitions_of(k)) {
                SparsePoly p = expand_classic(b, lam, k);
                CoeffMap f = extract_in_basis(p, QBasis::F);
                CoeffMap want = nonzero(extract_in_basis(p, SymBasis::s));
                EXPECT_EQ(nonzero(schur_from_qsym(f, QBasis::F, k)), want);
                EXPECT_EQ(nonzero(schur_from_qsym(extract_in_basis(p, QBasis::M), QBasis::M, k)), want);
            }
}

TEST(Bridge, Linear) {
    CoeffMap s21 = extract_in_basis(schur(Partition{2, 1}, 3), QBasis::F);
    CoeffMap h3 = extract_in_basis(expand_classic(SymBasis::h, Partition{3}, 3), QBasis::F);
    CoeffMap mix;
    for (const auto& [k, v] : s21) add_to(mix, k, v * 3);
    for (const auto& [k, v] : h3) add_to(mix, k, v * Rational(-2, 5));
    CoeffMap want;
    for (const auto& [k, v] : schur_from_qsym(s21, QBasis::F)) add_to(want, k, v * 3);
    for (const auto& [k, v] : schur_from_qsym(h3, QBasis::F)) add_to(want, k, v * Rational(-2, 5));
    EXPECT_EQ(nonzero(schur_from_qsym(mix, QBasis::F)), nonzero(want));
}

TEST(Bridge, RejectsNonSymmetricNamingPair) {
    try {
        schur_from_qsym({{{2, 1}, 1}}, QBasis::M, 3);
        FAIL() << "accepted a non-symmetric input";
    } catch (const std::domain_error& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("x^(1,2,0)"), std::string::npos) << msg;
        EXPECT_NE(msg.find("x^(2,1,0)"), std::string::npos) << msg;
    }
    EXPECT_THROW(schur_from_qsym({{{1}, 1}}, QBasis::dimm), std::invalid_argument);
}

TEST(Json, CoeffMapRoundTripIsByteIdentical) {
    CoeffMap m{{{2, 1}, Rational(-3, 4)}, {{3}, 1}, {{1, 1, 1}, Rational(Integer("12345678901"), Integer(7))}};
    std::string first = coeffs_json(m).dump();
    CoeffMap back = coeffs_from_json(Json::parse(first));
    EXPECT_EQ(back, m);
    EXPECT_EQ(coeffs_json(back).dump(), first);
    EXPECT_EQ(first.find('.'), std::string::npos);  // never floats
}

TEST(Json, AcceptsLooseForms) {
    CoeffMap m = coeffs_from_json(Json::parse(R"({"2,1": "1/2", "3": 4})"));
    EXPECT_EQ(m, (CoeffMap{{{2, 1}, Rational(1, 2)}, {{3}, 4}}));
    EXPECT_THROW(coeffs_from_json(Json::parse("3")), std::invalid_argument);
}

TEST(Csv, NumOverDen) {
    EXPECT_EQ(coeffs_csv({{{2}, Rational(-1, 3)}, {{1, 1}, 2}}), "index,coeff\n\"2\",-1/3\n\"1,1\",2/1\n");
}
