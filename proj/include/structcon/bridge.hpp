#pragma once

// Schur expansion of a symmetric function given in the fundamental or
// monomial quasisymmetric basis. F coefficients are pushed to M through the
// refinement transition; a symmetric function's M coefficients are its m
// coefficients, which go to s through the inverse Kostka matrix.

#include "structcon/core.hpp"
#include "structcon/poly.hpp"
#include "structcon/qsym.hpp"
#include "structcon/rational.hpp"
#include "structcon/symfn.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace structcon {

inline CoeffMap qsym_to_monomial_coeffs(const CoeffMap& expansion, QBasis basis, int n) {
    if (basis != QBasis::F && basis != QBasis::M)
        throw std::invalid_argument("bridge input must be in the F or M basis, got " + basis_name(basis));
    for (const auto& [a, c] : expansion) {
        require_strong(a);
        if (static_cast<int>(a.size()) > n)
            throw std::invalid_argument("composition " + format_index(a) + " has more than " + std::to_string(n) +
                                        " parts");
    }
    if (basis == QBasis::M) {
        CoeffMap out;
        for (const auto& [a, c] : expansion) add_to(out, a, c);
        return out;
    }
    std::map<int, CoeffMap> by_degree;
    for (const auto& [a, c] : expansion) by_degree[index_size(a)][a] = c;
    CoeffMap out;
    for (const auto& [k, part] : by_degree) {
        const auto& d = qsym_data(QBasis::F, k, n);
        for (const auto& [b, c] : apply_row_vector(part, *d.to_M)) add_to(out, b, c);
    }
    return out;
}

// Throws std::domain_error naming two exponent vectors (padded to n) whose
// coefficients differ although one rearranges the other.
inline void require_symmetric_M(const CoeffMap& m, int n) {
    std::map<int, bool> degrees;
    for (const auto& [a, c] : m) degrees[index_size(a)] = true;
    auto coeff = [&](const Index& a) {
        auto it = m.find(a);
        return it == m.end() ? Rational(0) : it->second;
    };
    for (const auto& [k, unused] : degrees)
        for (const auto& sc : strong_compositions_of(k, n)) {
            const Index& a = sc.parts();
            Index s = sorted_decreasing(a);
            if (coeff(a) != coeff(s)) {
                Index pa = a, ps = s;
                pa.resize(static_cast<std::size_t>(n), 0);
                ps.resize(static_cast<std::size_t>(n), 0);
                throw std::domain_error("input is not symmetric: coefficient of x^(" + format_index(pa) + ") is " +
                                        to_string(coeff(a)) + " but coefficient of x^(" + format_index(ps) + ") is " +
                                        to_string(coeff(s)));
            }
        }
}

// n = -1 uses the largest degree present, which sees every composition.
inline CoeffMap schur_from_qsym(const CoeffMap& expansion, QBasis basis, int n = -1,
                                InversionMode mode = InversionMode::backsub) {
    int top = 0;
    for (const auto& [a, c] : expansion) top = std::max(top, index_size(a));
    if (n < 0) n = std::max(top, 1);
    CoeffMap m = qsym_to_monomial_coeffs(expansion, basis, n);
    require_symmetric_M(m, n);
    CoeffMap partitions;
    for (const auto& [a, c] : m)
        if (std::is_sorted(a.begin(), a.end(), std::greater<int>())) partitions[a] = c;
    std::map<int, CoeffMap> by_degree;
    for (const auto& [a, c] : partitions) by_degree[index_size(a)][a] = c;
    CoeffMap out;
    for (const auto& [k, part] : by_degree) {
        if (n < k)
            throw std::domain_error("Schur expansion of degree " + std::to_string(k) + " needs at least " +
                                    std::to_string(k) + " variables");
        const auto& d = kostka_data(k, std::max(k, 1), mode);
        for (const auto& [mu, c] : apply_row_vector(part, *d.inverse)) add_to(out, mu, c);
    }
    return out;
}

}  // namespace structcon
