#pragma once

// Hall-Littlewood polynomials P_lambda(x; t) at a fixed rational t, via the
// tableau formula P_lambda = sum_T psi_T(t) x^T, where psi_T is a product over
// the horizontal strips of T:
//   psi_{lambda/mu}(t) = prod_{j in J} (1 - t^{m_j(mu)}),
//   J = { j >= 1 : theta'_j = 0 and theta'_{j+1} = 1 },  theta = lambda - mu.
// Schur P-polynomials are the t = -1 specialization on strict partitions.

#include "structcon/core.hpp"
#include "structcon/memo.hpp"
#include "structcon/poly.hpp"
#include "structcon/posets.hpp"
#include "structcon/rational.hpp"
#include "structcon/symfn.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace structcon {

inline void require_hl_parameter(const Rational& t) {
    if (t == 1) throw std::domain_error("Hall-Littlewood parameter t = 1 is not supported");
}

inline Rational hl_strip_weight(const Index& outer, const Index& inner, const Rational& t) {
    Partition lam(outer), mu(inner);
    Index lc = lam.conjugate().parts(), mc = mu.conjugate().parts();
    std::size_t cols = lc.size() + 1;
    auto theta = [&](std::size_t j) {  // 1-based column
        int a = j - 1 < lc.size() ? lc[j - 1] : 0;
        int b = j - 1 < mc.size() ? mc[j - 1] : 0;
        return a - b;
    };
    Rational w = 1;
    for (std::size_t j = 1; j <= cols; ++j)
        if (theta(j) == 0 && theta(j + 1) == 1) w *= 1 - rational_pow(t, mu.multiplicity(static_cast<int>(j)));
    return w;
}

// K_{lambda,c}(t): sum of psi_T over SSYT of shape lambda and content c.
inline Rational hl_monomial_coefficient(const Partition& lambda, const Index& content, const Rational& t) {
    Rational total = 0;
    for_each_strip_chain(lambda, content, [&](const std::vector<Index>& chain) {
        Rational w = 1;
        for (std::size_t i = 1; i < chain.size() && w != 0; ++i) w *= hl_strip_weight(chain[i], chain[i - 1], t);
        total += w;
    });
    return total;
}

inline SparsePoly hl_expand(const Partition& lambda, const Rational& t, int n) {
    require_hl_parameter(t);
    if (lambda.length() > n)
        throw std::domain_error("P_" + format_index(lambda.parts()) + " needs at least " +
                                std::to_string(lambda.length()) + " variables");
    SparsePoly out(n);
    for (const auto& c : weak_compositions_of(n, lambda.size()))
        out.add_term(c.parts(), hl_monomial_coefficient(lambda, c.parts(), t));
    return out;
}

inline SparsePoly schur_p_expand(const Partition& lambda, int n) {
    if (!lambda.is_strict())
        throw std::domain_error("Schur P-polynomial index " + format_index(lambda.parts()) + " has repeated parts");
    return hl_expand(lambda, Rational(-1), n);
}

// ---------------------------------------------------------------------------
// Symmetrization route
//
// P_lambda = (1 / v_lambda(t)) sum_{w in S_n} w( x^lambda prod_{i<j} (x_i - t x_j) / (x_i - x_j) ),
// v_lambda(t) = prod_{i >= 0} v_{m_i}(t), v_m(t) = prod_{j=1}^m (1 + t + ... + t^{j-1}),
// with m_0 = n - l(lambda).

inline Rational hl_normalization(const Partition& lambda, const Rational& t, int n) {
    auto v = [&](int m) {
        Rational out = 1;
        for (int j = 1; j <= m; ++j) {
            Rational s = 0;
            for (int e = 0; e < j; ++e) s += rational_pow(t, e);
            out *= s;
        }
        return out;
    };
    Rational out = v(n - lambda.length());
    Index parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t k = i;
        while (k < parts.size() && parts[k] == parts[i]) ++k;
        out *= v(static_cast<int>(k - i));
        i = k;
    }
    return out;
}

inline SparsePoly hl_symmetrization_oracle(const Partition& lambda, const Rational& t, int n) {
    require_hl_parameter(t);
    if (lambda.length() > n)
        throw std::domain_error("P_" + format_index(lambda.parts()) + " needs at least " +
                                std::to_string(lambda.length()) + " variables");
    Rational norm = hl_normalization(lambda, t, n);
    if (norm == 0)
        throw std::domain_error("symmetrization normalization vanishes at t = " + to_string(t) + " for " +
                                format_index(lambda.parts()) + " in " + std::to_string(n) + " variables");
    Exponent lam = lambda.parts();
    lam.resize(static_cast<std::size_t>(n), 0);
    SparsePoly base = SparsePoly::monomial(lam);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            base *= SparsePoly::variable(n, i) - SparsePoly::variable(n, j) * t;
    // The antisymmetrization of base is sum_kappa c_kappa a_kappa over strictly
    // decreasing kappa; dividing by the Vandermonde a_delta turns each
    // alternant a_{mu+delta} into s_mu.
    std::map<Exponent, Rational> alt;
    for (const auto& [e, c] : base.terms()) {
        Exponent k = e;
        int sign = 1;
        for (std::size_t i = 0; i < k.size(); ++i)
            for (std::size_t j = 0; j + 1 < k.size() - i; ++j)
                if (k[j] < k[j + 1]) {
                    std::swap(k[j], k[j + 1]);
                    sign = -sign;
                }
        if (std::adjacent_find(k.begin(), k.end()) != k.end()) continue;
        alt[k] += sign * c;
    }
    SparsePoly out(n);
    for (const auto& [k, c] : alt) {
        if (c == 0) continue;
        Index mu(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) mu[i] = k[i] - static_cast<int>(k.size() - 1 - i);
        while (!mu.empty() && mu.back() == 0) mu.pop_back();
        out += schur(Partition(mu), n) * c;
    }
    return out * (1 / norm);
}

// ---------------------------------------------------------------------------
// Transition to m and structure constants

struct HLData {
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const TransitionMatrix> to_m;
    std::shared_ptr<const TransitionMatrix> inverse;
};

inline std::string rational_key(const Rational& r) { return to_string(r); }

// Partitions of k with at most n parts; P_lambda has m_mu-support on mu with
// lambda dominance-below mu, diagonal 1.
inline const HLData& hl_data(int k, int n, const Rational& t, InversionMode mode = InversionMode::backsub) {
    require_hl_parameter(t);
    static Memo<std::tuple<int, int, std::string, int>, HLData> memo;
    auto ptr = memo.get({k, n, rational_key(t), static_cast<int>(mode)}, [&] {
        auto poset = std::make_shared<const Poset>(Poset::dominance_partitions(k, n));
        auto K = std::make_shared<TransitionMatrix>(poset, Support::row_leq_col);
        for (std::size_t r = 0; r < poset->size(); ++r)
            for (std::size_t c = 0; c < poset->size(); ++c) {
                Rational v = hl_monomial_coefficient(Partition(poset->element(r)), poset->element(c), t);
                if (v != 0) K->set(r, c, v);
            }
        auto inv = std::make_shared<const TransitionMatrix>(invert_unitriangular(*K, mode));
        return HLData{poset, K, inv};
    });
    return *ptr;
}

inline CoeffMap hl_to_monomial(const Partition& lambda, const Rational& t, int n) {
    const auto& d = hl_data(lambda.size(), n, t);
    CoeffMap out;
    for (const auto& [c, v] : d.to_m->row(d.poset->index_of(lambda.parts()))) add_to(out, d.poset->element(c), v);
    return out;
}

inline CoeffMap monomial_to_hl(const CoeffMap& m, const Rational& t, int n, InversionMode mode = InversionMode::backsub) {
    std::map<int, CoeffMap> by_degree;
    for (const auto& [lambda, c] : m) by_degree[index_size(lambda)][lambda] = c;
    CoeffMap out;
    for (const auto& [k, part] : by_degree) {
        const auto& d = hl_data(k, n, t, mode);
        for (const auto& [mu, c] : apply_row_vector(part, *d.inverse)) add_to(out, mu, c);
    }
    return out;
}

// P_lambda P_mu expanded in {P_nu}, computed in |lambda| + |mu| variables.
inline CoeffMap hl_structure(const Partition& lambda, const Partition& mu, const Rational& t,
                             InversionMode mode = InversionMode::backsub) {
    require_hl_parameter(t);
    const int n = std::max(lambda.size() + mu.size(), 1);
    CoeffMap prod = multiply_monomial_basis(hl_to_monomial(lambda, t, n), hl_to_monomial(mu, t, n), n);
    return monomial_to_hl(prod, t, n, mode);
}

inline CoeffMap schur_p_structure(const Partition& lambda, const Partition& mu,
                                  InversionMode mode = InversionMode::backsub) {
    for (const auto* p : {&lambda, &mu})
        if (!p->is_strict())
            throw std::domain_error("Schur P-polynomial index " + format_index(p->parts()) + " has repeated parts");
    return hl_structure(lambda, mu, Rational(-1), mode);
}

}  // namespace structcon
