#pragma once

// Brute-force ground truth: basis elements as explicit polynomials, products
// as polynomial multiplication, and coefficient extraction by exact
// elimination. Nothing here touches posets or inverted transition matrices.

#include "structcon/core.hpp"
#include "structcon/hall_littlewood.hpp"
#include "structcon/poly.hpp"
#include "structcon/polybases.hpp"
#include "structcon/qsym.hpp"
#include "structcon/rational.hpp"
#include "structcon/symfn.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace structcon {

// A basis of one of the four families. Hall-Littlewood carries its parameter.
struct HLBasis {
    Rational t;
};
using AnyBasis = std::variant<SymBasis, QBasis, PBasis, HLBasis>;

inline AnyBasis parse_any_basis(const std::string& name, const std::optional<Rational>& t = std::nullopt) {
    if (name == "hl" || name == "schurP") {
        if (name == "schurP") return HLBasis{Rational(-1)};
        if (!t) throw std::invalid_argument("basis hl needs a parameter t");
        return HLBasis{*t};
    }
    for (const char* s : {"m", "p", "e", "h", "s"})
        if (name == s) return parse_sym_basis(name);
    for (const char* s : {"M", "F", "dimm", "qschur", "pcomb", "psi", "phi"})
        if (name == s) return parse_qbasis(name);
    return parse_pbasis(name);
}

inline std::string any_basis_name(const AnyBasis& b) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, HLBasis>) return "hl(t=" + to_string(x.t) + ")";
            else return basis_name(x);
        },
        b);
}

// Explicit polynomial of one basis element in n variables. For polynomial
// bases the index is zero-padded to n.
inline SparsePoly oracle_basis_poly(const AnyBasis& b, const Index& idx, int n) {
    if (auto s = std::get_if<SymBasis>(&b)) return expand_classic(*s, Partition(idx), n);
    if (auto q = std::get_if<QBasis>(&b)) return expand_qsym(*q, idx, n);
    if (auto h = std::get_if<HLBasis>(&b)) {
        Partition lam(idx);
        if (hl_normalization(lam, h->t, n) != 0) return hl_symmetrization_oracle(lam, h->t, n);
        return hl_expand(lam, h->t, n);
    }
    Index a = idx;
    if (static_cast<int>(a.size()) > n) throw std::invalid_argument("index longer than the variable count");
    a.resize(static_cast<std::size_t>(n), 0);
    return expand_poly_basis(std::get<PBasis>(b), a);
}

namespace detail {

struct ElimRow {
    CoeffMap vec;    // coordinates
    CoeffMap combo;  // candidate index -> multiplier
};

inline void scale_into(CoeffMap& dst, const CoeffMap& src, const Rational& c) {
    for (const auto& [k, v] : src) add_to(dst, k, c * v);
}

// Gaussian elimination with the lexicographically largest coordinate as pivot.
class Eliminator {
public:
    void add_candidate(const Index& id, CoeffMap vec) {
        ElimRow r{std::move(vec), {{id, Rational(1)}}};
        reduce(r);
        if (r.vec.empty()) throw std::logic_error("oracle candidates are linearly dependent at " + format_index(id));
        Rational lead = r.vec.rbegin()->second;
        CoeffMap v, c;
        scale_into(v, r.vec, 1 / lead);
        scale_into(c, r.combo, 1 / lead);
        Index key = v.rbegin()->first;
        pivots_.emplace(key, ElimRow{std::move(v), std::move(c)});
    }

    // Returns c with target = sum c_id candidate_id, or the residual.
    std::pair<CoeffMap, CoeffMap> solve(const CoeffMap& target) const {
        ElimRow r{target, {}};
        while (!r.vec.empty()) {
            auto it = pivots_.find(r.vec.rbegin()->first);
            if (it == pivots_.end()) break;
            Rational c = r.vec.rbegin()->second;
            scale_into(r.vec, it->second.vec, -c);
            scale_into(r.combo, it->second.combo, c);
        }
        return {r.combo, r.vec};
    }

private:
    void reduce(ElimRow& r) const {
        while (!r.vec.empty()) {
            auto it = pivots_.find(r.vec.rbegin()->first);
            if (it == pivots_.end()) return;
            Rational c = r.vec.rbegin()->second;
            scale_into(r.vec, it->second.vec, -c);
            scale_into(r.combo, it->second.combo, -c);
        }
    }
    std::map<Index, ElimRow> pivots_;
};

inline std::string residual_message(const CoeffMap& residual) {
    const auto& [e, c] = *residual.rbegin();
    return "elimination stalled: residual leading term x^(" + format_index(e) + ") with coefficient " + to_string(c);
}

inline CoeffMap restrict_coords(const SparsePoly& p, bool symmetric) {
    CoeffMap out;
    for (const auto& [e, c] : p.terms()) {
        bool keep;
        if (symmetric) {
            keep = std::is_sorted(e.begin(), e.end(), std::greater<int>());
        } else {
            auto z = std::find(e.begin(), e.end(), 0);
            keep = std::all_of(z, e.end(), [](int v) { return v == 0; });
        }
        if (keep) out[e] = c;
    }
    return out;
}

}  // namespace detail

// Expansion of p in the basis b, taking p to have p.nvars() variables. For
// symmetric and quasisymmetric bases only indices with at most n parts can
// occur; for polynomial bases indices have length n.
inline CoeffMap extract_in_basis(const SparsePoly& p, const AnyBasis& b) {
    const int n = p.nvars();
    if (p.is_zero()) return {};
    if (auto pb = std::get_if<PBasis>(&b)) {
        // Greedy: the residual's leading monomial (lowest degree, then
        // lexicographically smallest) is always the index of a basis element
        // with nonzero coefficient.
        auto before = [](const Index& a, const Index& c) {
            int sa = index_size(a), sc = index_size(c);
            if (sa != sc) return sa < sc;
            return a < c;
        };
        SparsePoly r = p;
        CoeffMap out;
        std::size_t guard = 0;
        while (!r.is_zero()) {
            const Index* lead = nullptr;
            for (const auto& [e, c] : r.terms())
                if (!lead || before(e, *lead)) lead = &e;
            Index e = *lead;
            Rational c = r.coeff(e);
            add_to(out, e, c);
            r -= expand_poly_basis(*pb, e) * c;
            if (++guard > 1000000) throw std::domain_error("elimination did not terminate");
        }
        return out;
    }
    const bool symmetric = !std::holds_alternative<QBasis>(b);
    if (symmetric) {
        if (auto v = p.symmetry_violation())
            throw std::domain_error("polynomial is not symmetric: x^(" + format_index(v->first) + ") and x^(" +
                                    format_index(v->second) + ") differ");
    } else if (!p.is_quasisymmetric()) {
        throw std::domain_error("polynomial is not quasisymmetric");
    }
    std::map<int, bool> degrees;
    for (const auto& [e, c] : p.terms()) degrees[index_size(e)] = true;
    detail::Eliminator elim;
    for (const auto& [d, unused] : degrees) {
        std::vector<Index> ids;
        if (auto s = std::get_if<SymBasis>(&b)) {
            for (const auto& lam : basis_indices(*s, d, n)) ids.push_back(lam.parts());
        } else if (std::holds_alternative<HLBasis>(b)) {
            for (const auto& lam : partitions_of(d, n)) ids.push_back(lam.parts());
        } else {
            for (const auto& a : strong_compositions_of(d, n)) ids.push_back(a.parts());
        }
        for (const auto& id : ids) elim.add_candidate(id, detail::restrict_coords(oracle_basis_poly(b, id, n), symmetric));
    }
    auto [coeffs, residual] = elim.solve(detail::restrict_coords(p, symmetric));
    if (!residual.empty()) throw std::domain_error(detail::residual_message(residual));
    return coeffs;
}

// Reassembly: sum c_a B_a as a polynomial in n variables.
inline SparsePoly reassemble(const CoeffMap& c, const AnyBasis& b, int n) {
    SparsePoly out(n);
    for (const auto& [a, v] : c) out += oracle_basis_poly(b, a, n) * v;
    return out;
}

// Structure constants by multiplying explicit polynomials. Symmetric and
// quasisymmetric products use |a| + |c| variables, polynomial bases the
// common index length.
inline CoeffMap oracle_structure(const AnyBasis& b, const Index& a, const Index& c) {
    int n;
    if (std::holds_alternative<PBasis>(b)) n = static_cast<int>(std::max({a.size(), c.size(), std::size_t{1}}));
    else n = std::max(index_size(a) + index_size(c), 1);
    SparsePoly prod = oracle_basis_poly(b, a, n) * oracle_basis_poly(b, c, n);
    return extract_in_basis(prod, b);
}

}  // namespace structcon
