#pragma once

// Plethysm f_lambda[g_mu] for f, g in {m, p, e, h, s}. The monomials of g_mu
// (with multiplicity) become the variables of f_lambda; f_lambda is expanded
// in monomial symmetric functions and each m_rho is evaluated as a sum over
// distinct rearrangements of rho placed on those variables.

#include "structcon/core.hpp"
#include "structcon/poly.hpp"
#include "structcon/rational.hpp"
#include "structcon/symfn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace structcon {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_plethysm_variable_bound = 4096;

// Monomials of a polynomial with positive integer coefficients, each repeated
// as often as its coefficient.
inline std::vector<Exponent> monomial_multiset(const SparsePoly& g, std::size_t bound) {
    std::vector<Exponent> out;
    for (const auto& [e, c] : g.terms()) {
        if (!is_integral(c) || c < 0)
            throw std::domain_error("inner function has coefficient " + to_string(c) + " at " + format_index(e) +
                                    "; substitution needs nonnegative integers");
        Integer mult = c.get_num();
        if (mult > static_cast<long>(bound) || out.size() + mult.get_ui() > bound)
            throw resource_error("plethysm: inner function has more than " + std::to_string(bound) +
                                 " monomials counted with multiplicity");
        for (unsigned long i = 0; i < mult.get_ui(); ++i) out.push_back(e);
    }
    return out;
}

namespace detail {

// Adds, for every distinct rearrangement of rho onto the positions of ys,
// the exponent sum_i r_i * ys[pos_i] to acc when it is weakly decreasing.
inline void evaluate_monomial_symmetric(const Index& rho, const std::vector<Exponent>& ys, int n,
                                        std::map<Index, Integer>& acc) {
    // distinct part values with multiplicities, largest first
    std::vector<std::pair<int, int>> groups;
    for (int r : rho) {
        if (!groups.empty() && groups.back().first == r) ++groups.back().second;
        else groups.emplace_back(r, 1);
    }
    std::vector<char> used(ys.size(), 0);
    Exponent cur(static_cast<std::size_t>(n), 0);
    // Equal parts go to increasing positions so each rearrangement is counted once.
    auto rec = [&](auto&& self, std::size_t g, int left, std::size_t from) -> void {
        if (g == groups.size()) {
            if (std::is_sorted(cur.begin(), cur.end(), std::greater<int>())) {
                Index key = cur;
                while (!key.empty() && key.back() == 0) key.pop_back();
                ++acc[key];
            }
            return;
        }
        if (left == 0) {
            if (g + 1 < groups.size()) self(self, g + 1, groups[g + 1].second, 0);
            else self(self, g + 1, 0, 0);
            return;
        }
        const int r = groups[g].first;
        for (std::size_t i = from; i < ys.size(); ++i) {
            if (used[i]) continue;
            used[i] = 1;
            for (std::size_t v = 0; v < cur.size(); ++v) cur[v] += r * ys[i][v];
            self(self, g, left - 1, i + 1);
            for (std::size_t v = 0; v < cur.size(); ++v) cur[v] -= r * ys[i][v];
            used[i] = 0;
        }
    };
    if (groups.empty()) {
        ++acc[Index{}];
        return;
    }
    rec(rec, 0, groups[0].second, 0);
}

}  // namespace detail

// Coefficients d_nu of m_nu in f_lambda[g_mu], for partitions nu with at most
// n parts. These are exact for every n.
inline CoeffMap plethysm_monomial_coeffs(SymBasis fb, const Partition& lambda, SymBasis gb, const Partition& mu, int n,
                                         std::size_t bound = default_plethysm_variable_bound) {
    if (n < 1) throw std::invalid_argument("plethysm needs at least one variable");
    if (!is_basis_index(gb, mu, n))
        throw std::domain_error(basis_name(gb) + "_" + format_index(mu.parts()) + " is not a basis index for n = " +
                                std::to_string(n));
    std::vector<Exponent> ys = monomial_multiset(expand_classic(gb, mu, n), bound);
    const int big = static_cast<int>(ys.size());
    CoeffMap out;
    if (big == 0) {
        if (lambda.size() == 0) add_to(out, Index{}, 1);
        return out;
    }
    CoeffMap f = to_monomial_basis(fb, lambda, std::max(lambda.size(), 1));
    for (const auto& [rho, a] : f) {
        if (static_cast<int>(rho.size()) > big) continue;
        std::map<Index, Integer> acc;
        detail::evaluate_monomial_symmetric(rho, ys, n, acc);
        for (const auto& [nu, cnt] : acc) add_to(out, nu, a * Rational(cnt));
    }
    return out;
}

// Schur coefficients of f_lambda[g_mu]; needs n >= |lambda| |mu| so that no
// Schur function of the result vanishes.
inline CoeffMap plethysm_schur_coeffs(SymBasis fb, const Partition& lambda, SymBasis gb, const Partition& mu, int n,
                                      std::size_t bound = default_plethysm_variable_bound,
                                      InversionMode mode = InversionMode::backsub) {
    const int d = lambda.size() * mu.size();
    if (n < d)
        throw std::domain_error("Schur coefficients of a degree " + std::to_string(d) + " plethysm need at least " +
                                std::to_string(d) + " variables");
    CoeffMap m = plethysm_monomial_coeffs(fb, lambda, gb, mu, n, bound);
    return monomial_to_schur(m, std::max(d, 1), mode);
}

}  // namespace structcon
