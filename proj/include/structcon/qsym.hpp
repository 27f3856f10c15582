#pragma once

// Quasisymmetric polynomials: monomial M, fundamental F, dual immaculate,
// quasisymmetric Schur, and the power sums pcomb, psi, phi. Every basis is
// stored through its M-expansion; products go through M and come back via
// the inverted transition matrix.

#include "structcon/core.hpp"
#include "structcon/memo.hpp"
#include "structcon/poly.hpp"
#include "structcon/posets.hpp"
#include "structcon/rational.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace structcon {

enum class QBasis { M, F, dimm, qschur, pcomb, psi, phi };

inline QBasis parse_qbasis(const std::string& name) {
    if (name == "M") return QBasis::M;
    if (name == "F") return QBasis::F;
    if (name == "dimm") return QBasis::dimm;
    if (name == "qschur") return QBasis::qschur;
    if (name == "pcomb") return QBasis::pcomb;
    if (name == "psi") return QBasis::psi;
    if (name == "phi") return QBasis::phi;
    throw std::invalid_argument("unknown quasisymmetric basis '" + name + "'");
}

inline std::string basis_name(QBasis b) {
    switch (b) {
        case QBasis::M: return "M";
        case QBasis::F: return "F";
        case QBasis::dimm: return "dimm";
        case QBasis::qschur: return "qschur";
        case QBasis::pcomb: return "pcomb";
        case QBasis::psi: return "psi";
        case QBasis::phi: return "phi";
    }
    return "?";
}

inline const std::vector<QBasis>& all_qbases() {
    static const std::vector<QBasis> all{QBasis::M,      QBasis::F,     QBasis::dimm, QBasis::qschur,
                                         QBasis::pcomb, QBasis::psi, QBasis::phi};
    return all;
}

inline void require_strong(const Index& a) {
    for (int v : a)
        if (v < 1) throw std::invalid_argument("strong composition parts must be positive: " + format_index(a));
}

// ---------------------------------------------------------------------------
// M basis

inline SparsePoly monomial_quasisymmetric(const Index& alpha, int n) {
    require_strong(alpha);
    const int l = static_cast<int>(alpha.size());
    if (l > n)
        throw std::domain_error("M_" + format_index(alpha) + " needs at least " + std::to_string(l) + " variables");
    SparsePoly out(n);
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - l, pick.end(), 1);
    do {
        Exponent e(static_cast<std::size_t>(n), 0);
        std::size_t k = 0;
        for (std::size_t i = 0; i < pick.size(); ++i)
            if (pick[i]) e[i] = alpha[k++];
        out.add_term(e, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

// M_a M_b = sum over quasi-shuffles: interleave the parts of a and b keeping
// their orders, optionally adding one part of a to one part of b.
inline std::map<Index, Integer> quasi_shuffle(const Index& a, const Index& b) {
    std::map<Index, Integer> out;
    Index cur;
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            out[cur] += 1;
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
        if (i < a.size() && j < b.size()) {
            cur.push_back(a[i] + b[j]);
            self(self, i + 1, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// c(a, b, tau): ways to write tau = A + B where A, B are zero-padded copies
// of a and b of length l(tau) (entries in order, zeros inserted anywhere).
inline Integer monomial_qsym_structure(const Index& a, const Index& b, const Index& tau) {
    const std::size_t L = tau.size();
    Integer count = 0;
    auto rec = [&](auto&& self, std::size_t pos, std::size_t i, std::size_t j) -> void {
        if (pos == L) {
            if (i == a.size() && j == b.size()) ++count;
            return;
        }
        for (int ta = 0; ta <= 1; ++ta)
            for (int tb = 0; tb <= 1; ++tb) {
                if (!ta && !tb) continue;  // tau has no zero parts
                if (ta && i == a.size()) continue;
                if (tb && j == b.size()) continue;
                int v = (ta ? a[i] : 0) + (tb ? b[j] : 0);
                if (v != tau[pos]) continue;
                self(self, pos + 1, i + ta, j + tb);
            }
    };
    rec(rec, 0, 0, 0);
    return count;
}

inline CoeffMap multiply_M(const CoeffMap& x, const CoeffMap& y, int n) {
    CoeffMap out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y)
            for (const auto& [tau, cnt] : quasi_shuffle(a, b))
                if (static_cast<int>(tau.size()) <= n) add_to(out, tau, ca * cb * Rational(cnt));
    return out;
}

inline SparsePoly M_basis_poly(const CoeffMap& c, int n) {
    SparsePoly out(n);
    for (const auto& [alpha, v] : c) out += monomial_quasisymmetric(alpha, n) * v;
    return out;
}

// M-coefficients of a quasisymmetric polynomial.
inline CoeffMap M_coefficients(const SparsePoly& p) {
    if (!p.is_quasisymmetric()) throw std::domain_error("polynomial is not quasisymmetric");
    CoeffMap out;
    for (const auto& [e, c] : p.terms()) {
        std::size_t k = 0;
        while (k < e.size() && e[k] != 0) ++k;
        if (!std::all_of(e.begin() + static_cast<long>(k), e.end(), [](int v) { return v == 0; })) continue;
        add_to(out, Index(e.begin(), e.begin() + static_cast<long>(k)), c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kostka-type counts

namespace detail {

// Fillings of D(alpha) (row i holds alpha_i cells) with content beta,
// enumerated cell by cell in reading order; accept() sees each complete filling.
template <class CellOk, class Accept>
Integer count_fillings(const Index& alpha, const Index& beta, CellOk cell_ok, Accept accept) {
    if (index_size(alpha) != index_size(beta)) return 0;
    std::vector<std::vector<int>> T;
    for (int a : alpha) T.emplace_back(static_cast<std::size_t>(a), 0);
    Index budget = beta;
    Integer count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < alpha.size(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(alpha[r]); ++c) cells.emplace_back(r, c);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            if (accept(T)) ++count;
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= static_cast<int>(beta.size()); ++v) {
            if (budget[static_cast<std::size_t>(v - 1)] == 0) continue;
            T[r][c] = v;
            if (!cell_ok(T, r, c)) continue;
            --budget[static_cast<std::size_t>(v - 1)];
            self(self, idx + 1);
            ++budget[static_cast<std::size_t>(v - 1)];
        }
        T[r][c] = 0;
    };
    rec(rec, 0);
    return count;
}

}  // namespace detail

// Rows weakly increase, first column strictly increases downward.
inline Integer immaculate_kostka(const Index& alpha, const Index& beta) {
    require_strong(alpha);
    require_strong(beta);
    auto ok = [](const std::vector<std::vector<int>>& T, std::size_t r, std::size_t c) {
        if (c > 0 && T[r][c - 1] > T[r][c]) return false;
        if (c == 0 && r > 0 && T[r - 1][0] >= T[r][0]) return false;
        return true;
    };
    return detail::count_fillings(alpha, beta, ok, [](const auto&) { return true; });
}

// Rows weakly decrease, first column strictly increases downward, and the
// triple rule on the zero-padded rectangle T':
//   i < j, k >= 2:  T'(i,k) <= T'(j,k) != 0  implies  T'(i,k-1) < T'(j,k).
inline Integer qschur_kostka(const Index& alpha, const Index& beta) {
    require_strong(alpha);
    require_strong(beta);
    auto ok = [](const std::vector<std::vector<int>>& T, std::size_t r, std::size_t c) {
        if (c > 0 && T[r][c - 1] < T[r][c]) return false;
        if (c == 0 && r > 0 && T[r - 1][0] >= T[r][0]) return false;
        return true;
    };
    auto triple = [](const std::vector<std::vector<int>>& T) {
        auto at = [&](std::size_t r, std::size_t c) { return c < T[r].size() ? T[r][c] : 0; };
        std::size_t width = 0;
        for (const auto& row : T) width = std::max(width, row.size());
        for (std::size_t i = 0; i < T.size(); ++i)
            for (std::size_t j = i + 1; j < T.size(); ++j)
                for (std::size_t k = 1; k < width; ++k) {
                    int tj = at(j, k);
                    if (tj != 0 && at(i, k) <= tj && !(at(i, k - 1) < tj)) return false;
                }
        return true;
    };
    return detail::count_fillings(alpha, beta, ok, triple);
}

// l(beta) x l(alpha) matrices whose column j carries sort(alpha)_j as its
// only nonzero entry, with row sums beta, and whose nonzero entries read row
// by row (top to bottom, left to right) spell alpha.
inline Integer pcomb_kostka(const Index& alpha, const Index& beta) {
    require_strong(alpha);
    require_strong(beta);
    auto blocks = refinement_blocks(alpha, beta);
    if (!blocks) return 0;
    Index col = sorted_decreasing(alpha);
    std::vector<bool> used(col.size(), false);
    Integer count = 0;
    // row i must take, in increasing column order, columns whose values spell block i
    auto rec = [&](auto&& self, std::size_t row, std::size_t pos, std::size_t min_col) -> void {
        if (row == blocks->size()) {
            ++count;
            return;
        }
        const auto& blk = (*blocks)[row];
        if (pos == blk.size()) {
            self(self, row + 1, 0, 0);
            return;
        }
        for (std::size_t c = min_col; c < col.size(); ++c) {
            if (used[c] || col[c] != blk[pos]) continue;
            used[c] = true;
            self(self, row, pos + 1, c + 1);
            used[c] = false;
        }
    };
    rec(rec, 0, 0, 0);
    return count;
}

enum class QKostkaFlavor { I, S, p };

inline Integer qsym_kostka(QKostkaFlavor f, const Index& alpha, const Index& beta) {
    if (index_size(alpha) != index_size(beta)) return 0;
    switch (f) {
        case QKostkaFlavor::I: return immaculate_kostka(alpha, beta);
        case QKostkaFlavor::S: return qschur_kostka(alpha, beta);
        case QKostkaFlavor::p: return pcomb_kostka(alpha, beta);
    }
    return 0;
}

// Power-sum weights for alpha refining beta, with blocks alpha^(i).
inline Integer psi_denominator(const Index& alpha, const Index& beta) {
    auto blocks = refinement_blocks(alpha, beta);
    if (!blocks) throw std::domain_error(format_index(alpha) + " does not refine " + format_index(beta));
    Integer p = 1;
    for (const auto& blk : *blocks) {
        int partial = 0;
        for (int v : blk) {
            partial += v;
            p *= partial;
        }
    }
    return p;
}

inline Integer phi_denominator(const Index& alpha, const Index& beta) {
    auto blocks = refinement_blocks(alpha, beta);
    if (!blocks) throw std::domain_error(format_index(alpha) + " does not refine " + format_index(beta));
    Integer s = 1;
    for (const auto& blk : *blocks) {
        s *= factorial(static_cast<long>(blk.size()));
        for (int v : blk) s *= v;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Expansions in M

// M-coefficients of a basis element; only compositions with at most n parts.
inline CoeffMap qsym_to_M(QBasis b, const Index& alpha, int n) {
    require_strong(alpha);
    if (static_cast<int>(alpha.size()) > n)
        throw std::domain_error(basis_name(b) + "_" + format_index(alpha) + " needs at least " +
                                std::to_string(alpha.size()) + " variables");
    const int k = index_size(alpha);
    CoeffMap out;
    Integer z = z_factor(alpha);
    for (const auto& sc : strong_compositions_of(k, n)) {
        const Index& beta = sc.parts();
        Rational c = 0;
        switch (b) {
            case QBasis::M: c = alpha == beta ? 1 : 0; break;
            case QBasis::F: c = refines(beta, alpha) ? 1 : 0; break;
            case QBasis::dimm: c = Rational(immaculate_kostka(alpha, beta)); break;
            case QBasis::qschur: c = Rational(qschur_kostka(alpha, beta)); break;
            case QBasis::pcomb: c = Rational(pcomb_kostka(alpha, beta)); break;
            case QBasis::psi:
                if (refines(alpha, beta)) c = Rational(z) / Rational(psi_denominator(alpha, beta));
                break;
            case QBasis::phi:
                if (refines(alpha, beta)) c = Rational(z) / Rational(phi_denominator(alpha, beta));
                break;
        }
        add_to(out, beta, c);
    }
    return out;
}

inline SparsePoly expand_qsym(QBasis b, const Index& alpha, int n) { return M_basis_poly(qsym_to_M(b, alpha, n), n); }

// ---------------------------------------------------------------------------
// Transition matrices

struct QsymData {
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const TransitionMatrix> to_M;
    std::shared_ptr<const TransitionMatrix> inverse;
};

// F, dual immaculate: support above alpha in dominance. Quasisymmetric
// Schur: above alpha in the sorted-then-dominance order. Power sums: support
// on coarsenings of alpha, i.e. below alpha in dominance, with a non-unit
// diagonal.
inline const QsymData& qsym_data(QBasis b, int k, int n, InversionMode mode = InversionMode::backsub) {
    static Memo<std::tuple<int, int, int, int>, QsymData> memo;
    auto ptr = memo.get({static_cast<int>(b), k, n, static_cast<int>(mode)}, [&] {
        auto poset = std::make_shared<const Poset>(b == QBasis::qschur ? Poset::dominance_prime(n, k)
                                                                       : Poset::dominance_strong_compositions(n, k));
        bool below = b == QBasis::pcomb || b == QBasis::psi || b == QBasis::phi;
        auto T = std::make_shared<TransitionMatrix>(poset, below ? Support::col_leq_row : Support::row_leq_col);
        for (std::size_t r = 0; r < poset->size(); ++r)
            for (const auto& [beta, c] : qsym_to_M(b, poset->element(r), n)) T->set(r, poset->index_of(beta), c);
        auto inv = std::make_shared<const TransitionMatrix>(below ? invert_triangular(*T, mode)
                                                                  : invert_unitriangular(*T, mode));
        return QsymData{poset, T, inv};
    });
    return *ptr;
}

inline CoeffMap M_to_qbasis(const CoeffMap& m, QBasis b, int n, InversionMode mode = InversionMode::backsub) {
    if (b == QBasis::M) return m;
    std::map<int, CoeffMap> by_degree;
    for (const auto& [a, c] : m) by_degree[index_size(a)][a] = c;
    CoeffMap out;
    for (const auto& [k, part] : by_degree) {
        const auto& d = qsym_data(b, k, n, mode);
        for (const auto& [g, c] : apply_row_vector(part, *d.inverse)) add_to(out, g, c);
    }
    return out;
}

// Product of two basis elements in the same basis, computed in n variables
// (default |a| + |b|, where nothing is truncated).
inline CoeffMap qsym_structure(QBasis b, const Index& a, const Index& c, int n = -1,
                               InversionMode mode = InversionMode::backsub) {
    require_strong(a);
    require_strong(c);
    if (n < 0) n = std::max(index_size(a) + index_size(c), 1);
    CoeffMap prod = multiply_M(qsym_to_M(b, a, n), qsym_to_M(b, c, n), n);
    return M_to_qbasis(prod, b, n, mode);
}

}  // namespace structcon
