#pragma once

// Symmetric polynomials in n variables: the bases m, p, e, h, s, their
// monomial expansions, Kostka numbers and the Schur structure constants
// obtained by inverting the Kostka matrix.

#include "structcon/core.hpp"
#include "structcon/memo.hpp"
#include "structcon/poly.hpp"
#include "structcon/posets.hpp"
#include "structcon/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace structcon {

enum class SymBasis { m, p, e, h, s };

inline SymBasis parse_sym_basis(const std::string& name) {
    if (name == "m") return SymBasis::m;
    if (name == "p") return SymBasis::p;
    if (name == "e") return SymBasis::e;
    if (name == "h") return SymBasis::h;
    if (name == "s") return SymBasis::s;
    throw std::invalid_argument("unknown symmetric basis '" + name + "'");
}

inline std::string basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::m: return "m";
        case SymBasis::p: return "p";
        case SymBasis::e: return "e";
        case SymBasis::h: return "h";
        case SymBasis::s: return "s";
    }
    return "?";
}

// Index sets on which each family is a basis of the degree-k part of the
// ring of symmetric polynomials in n variables.
inline bool is_basis_index(SymBasis b, const Partition& lambda, int n) {
    if (b == SymBasis::m || b == SymBasis::s) return lambda.length() <= n;
    return lambda.length() == 0 || lambda[0] <= n;
}

inline std::vector<Partition> basis_indices(SymBasis b, int k, int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(k))
        if (is_basis_index(b, p, n)) out.push_back(std::move(p));
    return out;
}

// ---------------------------------------------------------------------------
// Monomial-level expansions

// Distinct rearrangements of v (as a multiset), in lexicographic order.
inline std::vector<Index> distinct_rearrangements(Index v) {
    std::ranges::sort(v);
    std::vector<Index> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

inline SparsePoly monomial_symmetric(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::domain_error("m_" + format_index(lambda.parts()) + " needs at least " +
                                std::to_string(lambda.length()) + " variables");
    Index padded = lambda.parts();
    padded.resize(static_cast<std::size_t>(n), 0);
    SparsePoly out(n);
    for (const auto& e : distinct_rearrangements(padded)) out.add_term(e, 1);
    return out;
}

inline SparsePoly power_sum(int k, int n) {
    SparsePoly out(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = k;
        out.add_term(e, 1);
    }
    return out;
}

inline SparsePoly elementary(int k, int n) {
    SparsePoly out(n);
    if (k > n) return out;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        out.add_term(pick, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

inline SparsePoly complete_homogeneous(int k, int n) {
    SparsePoly out(n);
    for (const auto& c : weak_compositions_of(n, k)) out.add_term(c.parts(), 1);
    return out;
}

// ---------------------------------------------------------------------------
// Semistandard tableaux as chains of horizontal strips
//
// An SSYT of shape lambda with entries <= n is a chain
// () = l0 c l1 c ... c ln = lambda where each skew shape l_i / l_{i-1} is a
// horizontal strip (the cells holding entry i).

namespace detail {

// All partitions nu with mu c nu c= outer, nu/mu a horizontal strip of size r.
inline void horizontal_strips(const Index& mu, const Index& outer, int r, std::vector<Index>& out) {
    Index nu = mu;
    nu.resize(outer.size(), 0);
    Index base = nu;
    auto rec = [&](auto&& self, std::size_t row, int remaining) -> void {
        if (row == outer.size()) {
            if (remaining == 0) {
                Index trimmed = nu;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                out.push_back(std::move(trimmed));
            }
            return;
        }
        // horizontal strip: nu_row <= mu_{row-1} (previous row of the old shape)
        int cap = outer[row];
        if (row > 0) cap = std::min(cap, base[row - 1]);
        for (int v = base[row]; v <= cap && v - base[row] <= remaining; ++v) {
            nu[row] = v;
            self(self, row + 1, remaining - (v - base[row]));
        }
        nu[row] = base[row];
    };
    rec(rec, 0, r);
}

}  // namespace detail

// Calls visit(chain) for every SSYT of shape lambda with content exactly c
// (a weak composition). chain[i] is the shape filled by entries <= i.
inline void for_each_strip_chain(const Partition& lambda, const Index& content,
                                 const std::function<void(const std::vector<Index>&)>& visit) {
    if (index_size(content) != lambda.size()) return;
    std::vector<Index> chain{Index{}};
    const Index& outer = lambda.parts();
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == content.size()) {
            if (chain.back() == outer) visit(chain);
            return;
        }
        std::vector<Index> next;
        detail::horizontal_strips(chain.back(), outer, content[i], next);
        for (auto& nu : next) {
            chain.push_back(std::move(nu));
            self(self, i + 1);
            chain.pop_back();
        }
    };
    rec(rec, 0);
}

// Kostka number for any weak composition content.
inline Integer kostka(const Partition& lambda, const Index& content) {
    Integer count = 0;
    for_each_strip_chain(lambda, content, [&](const std::vector<Index>&) { ++count; });
    return count;
}

inline Integer kostka(const Partition& lambda, const Partition& mu) { return kostka(lambda, mu.parts()); }

struct SSYT {
    Partition shape;
    std::vector<std::vector<int>> rows;

    Index content(int n) const {
        Index c(static_cast<std::size_t>(n), 0);
        for (const auto& r : rows)
            for (int v : r) ++c.at(static_cast<std::size_t>(v - 1));
        return c;
    }
};

inline SSYT tableau_from_chain(const Partition& lambda, const std::vector<Index>& chain) {
    SSYT t{lambda, {}};
    t.rows.resize(static_cast<std::size_t>(lambda.length()));
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const Index& prev = chain[i - 1];
        const Index& cur = chain[i];
        for (std::size_t r = 0; r < cur.size(); ++r) {
            int lo = r < prev.size() ? prev[r] : 0;
            for (int c = lo; c < cur[r]; ++c) t.rows[r].push_back(static_cast<int>(i));
        }
    }
    return t;
}

// All SSYT of shape lambda with entries in [n], by direct cell-by-cell search.
inline std::vector<SSYT> ssyt_list(const Partition& lambda, int n) {
    std::vector<SSYT> out;
    SSYT t{lambda, {}};
    for (int len : lambda) t.rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0) lo = std::max(lo, t.rows[r - 1][c] + 1);
        for (int v = lo; v <= n; ++v) {
            t.rows[r][c] = v;
            self(self, idx + 1);
        }
        t.rows[r][c] = 0;
    };
    rec(rec, 0);
    return out;
}

inline SparsePoly schur(const Partition& lambda, int n) {
    if (lambda.length() > n)
        throw std::domain_error("s_" + format_index(lambda.parts()) + " needs at least " +
                                std::to_string(lambda.length()) + " variables");
    SparsePoly out(n);
    for (const auto& t : ssyt_list(lambda, n)) out.add_term(t.content(n), 1);
    return out;
}

inline SparsePoly expand_classic(SymBasis b, const Partition& lambda, int n) {
    if (n < 0) throw std::invalid_argument("negative variable count");
    switch (b) {
        case SymBasis::m: return monomial_symmetric(lambda, n);
        case SymBasis::s: return schur(lambda, n);
        default: break;
    }
    SparsePoly out = SparsePoly::constant(n, 1);
    for (int k : lambda) {
        if (b == SymBasis::p) out *= power_sum(k, n);
        else if (b == SymBasis::e) out *= elementary(k, n);
        else out *= complete_homogeneous(k, n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Matrix counts

enum class CoeffMatrixKind { P, E, H, K };

// Matrices with column sums lambda and row sums mu: P allows one nonzero per
// column, E only 0/1 entries, H any nonnegative entries. K counts SSYT(lambda, mu).
inline Integer coeff_matrix_count(CoeffMatrixKind kind, const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return 0;
    if (kind == CoeffMatrixKind::K) return kostka(lambda, mu);
    const std::size_t rows = static_cast<std::size_t>(mu.length());
    Index remaining = mu.parts();
    Integer count = 0;
    auto rec = [&](auto&& self, std::size_t col) -> void {
        if (col == static_cast<std::size_t>(lambda.length())) {
            if (std::ranges::all_of(remaining, [](int v) { return v == 0; })) ++count;
            return;
        }
        int target = lambda[col];
        if (kind == CoeffMatrixKind::P) {
            for (std::size_t r = 0; r < rows; ++r)
                if (remaining[r] >= target) {
                    remaining[r] -= target;
                    self(self, col + 1);
                    remaining[r] += target;
                }
            return;
        }
        // distribute target over the rows of this column
        auto fill = [&](auto&& fself, std::size_t r, int left) -> void {
            if (r == rows) {
                if (left == 0) self(self, col + 1);
                return;
            }
            int cap = std::min(left, remaining[r]);
            if (kind == CoeffMatrixKind::E) cap = std::min(cap, 1);
            for (int v = cap; v >= 0; --v) {
                remaining[r] -= v;
                fself(fself, r + 1, left - v);
                remaining[r] += v;
            }
        };
        fill(fill, 0, target);
    };
    rec(rec, 0);
    return count;
}

// T(lambda, mu, nu): pairs of rearrangements u of lambda and w of mu, both
// padded to the length of nu, with u + w = nu.
inline Integer monomial_structure(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return 0;
    const int len = nu.length();
    if (lambda.length() > len || mu.length() > len) return 0;
    Index padded = lambda.parts();
    padded.resize(static_cast<std::size_t>(len), 0);
    Index target = mu.parts();
    target.resize(static_cast<std::size_t>(len), 0);
    std::ranges::sort(target);
    Integer count = 0;
    for (const auto& u : distinct_rearrangements(padded)) {
        Index w(static_cast<std::size_t>(len));
        bool ok = true;
        for (std::size_t i = 0; i < w.size() && ok; ++i) {
            w[i] = nu[i] - u[i];
            ok = w[i] >= 0;
        }
        if (!ok) continue;
        std::ranges::sort(w);
        if (w == target) ++count;
    }
    return count;
}

// m-coefficients (partitions of |lambda| with at most n parts) of a basis element.
inline CoeffMap to_monomial_basis(SymBasis b, const Partition& lambda, int n) {
    CoeffMap out;
    for (const auto& mu : partitions_of(lambda.size(), n)) {
        Integer c = 0;
        switch (b) {
            case SymBasis::m: c = lambda == mu ? 1 : 0; break;
            case SymBasis::p: c = coeff_matrix_count(CoeffMatrixKind::P, lambda, mu); break;
            case SymBasis::e: c = coeff_matrix_count(CoeffMatrixKind::E, lambda, mu); break;
            case SymBasis::h: c = coeff_matrix_count(CoeffMatrixKind::H, lambda, mu); break;
            case SymBasis::s: c = kostka(lambda, mu); break;
        }
        add_to(out, mu.parts(), Rational(c));
    }
    return out;
}

// Product in the m basis, truncated to n variables.
inline CoeffMap multiply_monomial_basis(const CoeffMap& a, const CoeffMap& b, int n) {
    CoeffMap out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            Partition pa(la), pb(lb);
            int len = std::min(n, pa.length() + pb.length());
            for (const auto& nu : partitions_of(pa.size() + pb.size(), len)) {
                Integer t = monomial_structure(pa, pb, nu);
                if (t != 0) add_to(out, nu.parts(), ca * cb * Rational(t));
            }
        }
    return out;
}

// Reassemble sum_lambda c_lambda m_lambda as a polynomial.
inline SparsePoly monomial_basis_poly(const CoeffMap& c, int n) {
    SparsePoly out(n);
    for (const auto& [lambda, v] : c) out += monomial_symmetric(Partition(lambda), n) * v;
    return out;
}

// Partition coefficients of a symmetric polynomial (coefficients of x^lambda).
inline CoeffMap monomial_coefficients(const SparsePoly& p) {
    if (auto bad = p.symmetry_violation())
        throw std::domain_error("polynomial is not symmetric: coefficient of x^(" + format_index(bad->first) +
                                ") differs from x^(" + format_index(bad->second) + ")");
    CoeffMap out;
    for (const auto& [e, c] : p.terms()) {
        if (!std::ranges::is_sorted(e, std::greater<>())) continue;
        Index key = e;
        while (!key.empty() && key.back() == 0) key.pop_back();
        add_to(out, key, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kostka matrix and its inverse

struct KostkaData {
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const TransitionMatrix> kostka;
    std::shared_ptr<const TransitionMatrix> inverse;
};

// Partitions of k with at most n parts under dominance; K(lambda, mu) != 0
// only when lambda is dominance-below mu.
inline const KostkaData& kostka_data(int k, int n, InversionMode mode = InversionMode::backsub) {
    static Memo<std::tuple<int, int, int>, KostkaData> memo;
    auto ptr = memo.get({k, n, static_cast<int>(mode)}, [&] {
        auto poset = std::make_shared<const Poset>(Poset::dominance_partitions(k, n));
        auto K = std::make_shared<TransitionMatrix>(poset, Support::row_leq_col);
        for (std::size_t r = 0; r < poset->size(); ++r)
            for (std::size_t c = 0; c < poset->size(); ++c) {
                if (!poset->leq(r, c)) continue;
                Integer v = kostka(Partition(poset->element(r)), poset->element(c));
                if (v != 0) K->set(r, c, Rational(v));
            }
        auto inv = std::make_shared<const TransitionMatrix>(invert_unitriangular(*K, mode));
        return KostkaData{poset, K, inv};
    });
    // values live as long as the memo table
    return *ptr;
}

inline Integer inverse_kostka(const Partition& lambda, const Partition& mu, InversionMode mode = InversionMode::backsub) {
    if (lambda.size() != mu.size()) return 0;
    int k = lambda.size();
    const auto& d = kostka_data(k, std::max(k, 1), mode);
    Rational v = d.inverse->get(lambda.parts(), mu.parts());
    return v.get_num();
}

// m-coefficients to s-coefficients through the inverse Kostka matrix, one
// homogeneous degree at a time. Only partitions with at most n parts occur.
inline CoeffMap monomial_to_schur(const CoeffMap& m, int n, InversionMode mode = InversionMode::backsub) {
    std::map<int, CoeffMap> by_degree;
    for (const auto& [lambda, c] : m) by_degree[index_size(lambda)][lambda] = c;
    CoeffMap out;
    for (const auto& [k, part] : by_degree) {
        const auto& d = kostka_data(k, n, mode);
        for (const auto& [mu, c] : apply_row_vector(part, *d.inverse)) add_to(out, mu, c);
    }
    return out;
}

// Littlewood-Richardson coefficient c^lambda_{mu nu} as the signed sum
// sum K(mu,tau) K(nu,kappa) T(tau,kappa,sigma) K^{-1}(sigma,lambda).
inline Integer littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu,
                                     InversionMode mode = InversionMode::backsub) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    const int k = lambda.size();
    const int n = std::max(k, 1);
    const auto& d = kostka_data(k, n, mode);
    Rational total = 0;
    for (const auto& tau : partitions_of(mu.size())) {
        Integer k1 = kostka(mu, tau);
        if (k1 == 0) continue;
        for (const auto& kappa : partitions_of(nu.size())) {
            Integer k2 = kostka(nu, kappa);
            if (k2 == 0) continue;
            for (const auto& sigma : partitions_of(k)) {
                Integer t = monomial_structure(tau, kappa, sigma);
                if (t == 0) continue;
                total += Rational(k1 * k2 * t) * d.inverse->get(sigma.parts(), lambda.parts());
            }
        }
    }
    if (!is_integral(total)) throw std::logic_error("non-integral Littlewood-Richardson value");
    return total.get_num();
}

// Product of two basis elements expanded in the same basis, in n variables
// (default: |a| + |b|, where nothing is truncated).
inline CoeffMap structure_constants_classic(SymBasis b, const Partition& a, const Partition& c, int n = -1,
                                            InversionMode mode = InversionMode::backsub) {
    if (n < 0) n = std::max(a.size() + c.size(), 1);
    for (const auto* idx : {&a, &c})
        if (!is_basis_index(b, *idx, n))
            throw std::domain_error(basis_name(b) + "_" + format_index(idx->parts()) + " is not a basis index for n = " +
                                    std::to_string(n));
    CoeffMap out;
    if (b == SymBasis::p || b == SymBasis::e || b == SymBasis::h) {
        Index joined = a.parts();
        joined.insert(joined.end(), c.parts().begin(), c.parts().end());
        add_to(out, sorted_decreasing(joined), 1);
        return out;
    }
    CoeffMap prod = multiply_monomial_basis(to_monomial_basis(b, a, n), to_monomial_basis(b, c, n), n);
    if (b == SymBasis::m) return prod;
    return monomial_to_schur(prod, n, mode);
}

}  // namespace structcon
