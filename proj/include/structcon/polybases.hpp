#pragma once

// Bases of the full polynomial ring Q[x_1..x_n], indexed by weak compositions:
// monomial and fundamental slides, Demazure atoms, key and Lascoux
// polynomials (Kohnert and K-Kohnert moves), Schubert and Grothendieck
// polynomials (ladder and K-ladder moves).
//
// Every basis element B_a has x^a with coefficient 1 and otherwise only
// monomials x^w with w dominance-below a, or of larger degree for the two
// inhomogeneous families.

#include "structcon/core.hpp"
#include "structcon/memo.hpp"
#include "structcon/poly.hpp"
#include "structcon/posets.hpp"
#include "structcon/rational.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace structcon {

enum class PBasis { mslide, fslide, atom, key, lascoux, schubert, grothendieck };

inline PBasis parse_pbasis(const std::string& name) {
    if (name == "mslide") return PBasis::mslide;
    if (name == "fslide") return PBasis::fslide;
    if (name == "atom") return PBasis::atom;
    if (name == "key") return PBasis::key;
    if (name == "lascoux") return PBasis::lascoux;
    if (name == "schubert") return PBasis::schubert;
    if (name == "grothendieck") return PBasis::grothendieck;
    throw std::invalid_argument("unknown polynomial basis '" + name + "'");
}

inline std::string basis_name(PBasis b) {
    switch (b) {
        case PBasis::mslide: return "mslide";
        case PBasis::fslide: return "fslide";
        case PBasis::atom: return "atom";
        case PBasis::key: return "key";
        case PBasis::lascoux: return "lascoux";
        case PBasis::schubert: return "schubert";
        case PBasis::grothendieck: return "grothendieck";
    }
    return "?";
}

inline const std::vector<PBasis>& all_pbases() {
    static const std::vector<PBasis> all{PBasis::mslide, PBasis::fslide,   PBasis::atom,        PBasis::key,
                                         PBasis::lascoux, PBasis::schubert, PBasis::grothendieck};
    return all;
}

inline bool is_homogeneous(PBasis b) { return b != PBasis::lascoux && b != PBasis::grothendieck; }

inline void require_weak(const Index& a) {
    for (int v : a)
        if (v < 0) throw std::invalid_argument("weak composition entries must be nonnegative: " + format_index(a));
}

// ---------------------------------------------------------------------------
// Slides

enum class SlideKind { monomial, fundamental };

inline SparsePoly expand_slide(SlideKind kind, const Index& alpha) {
    require_weak(alpha);
    const int n = static_cast<int>(alpha.size());
    const Index fa = flat(alpha).parts();
    SparsePoly out(n);
    for (const auto& b : weak_compositions_of(n, index_size(alpha))) {
        if (!dominance_leq(b.parts(), alpha)) continue;
        Index fb = flat(b.parts()).parts();
        bool ok = kind == SlideKind::monomial ? fb == fa : refines(fb, fa);
        if (ok) out.add_term(b.parts(), 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Demazure atoms via augmented tableaux

inline Integer atom_kostka(const Index& alpha, const Index& beta);

namespace detail {

// Calls visit(T) for each valid augmented filling of D(alpha); T[i][0] = i+1.
template <class Visit>
void for_each_atom_tableau(const Index& alpha, Visit visit) {
    const std::size_t n = alpha.size();
    std::vector<std::vector<int>> T(n);
    for (std::size_t i = 0; i < n; ++i) {
        T[i].assign(static_cast<std::size_t>(alpha[i]) + 1, 0);
        T[i][0] = static_cast<int>(i) + 1;
    }
    auto at = [&](std::size_t r, std::size_t c) { return c < T[r].size() ? T[r][c] : 0; };
    auto triple_ok = [](int a, int b, int c) { return (c < b && b < a) || (a <= c && c < b) || (b < a && a <= c); };
    // Column by column, top to bottom: every triple is decided once its
    // bottom-right cell in this order is filled.
    std::size_t width = 0;
    for (int a : alpha) width = std::max(width, static_cast<std::size_t>(a));
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t c = 1; c <= width; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (c < T[r].size()) cells.emplace_back(r, c);
    auto check = [&](std::size_t r, std::size_t k) {
        // distinct in column, among rows above
        for (std::size_t i = 0; i < r; ++i)
            if (k < T[i].size() && T[i][k] == T[r][k]) return false;
        // triples whose cells all lie in rows <= r of columns <= k
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t j = r;
            if (alpha[i] >= alpha[j]) {
                if (k < T[i].size() && !triple_ok(T[i][k], at(j, k), T[i][k - 1])) return false;
            } else {
                if (!triple_ok(T[j][k], at(i, k - 1), T[j][k - 1])) return false;
            }
        }
        // triples where row r plays the upper row i and a lower row j has no
        // cell in column k (b = 0) are decided here too
        for (std::size_t j = r + 1; j < n; ++j)
            if (alpha[r] >= alpha[j] && k >= T[j].size() && !triple_ok(T[r][k], 0, T[r][k - 1])) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(T);
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = 1; v <= T[r][c - 1]; ++v) {
            T[r][c] = v;
            if (check(r, c)) self(self, idx + 1);
        }
        T[r][c] = 0;
    };
    rec(rec, 0);
}

inline Index atom_content(const std::vector<std::vector<int>>& T, std::size_t n) {
    Index w(n, 0);
    for (const auto& row : T)
        for (std::size_t c = 1; c < row.size(); ++c) ++w[static_cast<std::size_t>(row[c] - 1)];
    return w;
}

}  // namespace detail

inline SparsePoly expand_atom(const Index& alpha) {
    require_weak(alpha);
    SparsePoly out(static_cast<int>(alpha.size()));
    detail::for_each_atom_tableau(alpha, [&](const auto& T) { out.add_term(detail::atom_content(T, alpha.size()), 1); });
    return out;
}

inline Integer atom_kostka(const Index& alpha, const Index& beta) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("atom_kostka: length mismatch");
    Integer count = 0;
    detail::for_each_atom_tableau(alpha, [&](const auto& T) {
        if (detail::atom_content(T, alpha.size()) == beta) ++count;
    });
    return count;
}

// ---------------------------------------------------------------------------
// Kohnert and K-Kohnert moves on labeled diagrams

// Cells map to true for a filled box, false for a ghost box.
using LabeledDiagram = std::map<Cell, bool>;

inline LabeledDiagram labeled_diagram_of(const Index& alpha) {
    LabeledDiagram d;
    for (const auto& c : diagram_of(alpha)) d.emplace(c, true);
    return d;
}

// Moves at row i: the rightmost box (i,j) goes up to the lowest free row i'
// above it, provided it and every box strictly between are filled. A ghost
// at the end of a row blocks the row.
inline std::vector<LabeledDiagram> kohnert_moves(const LabeledDiagram& d, int row, bool with_k_moves) {
    std::vector<LabeledDiagram> out;
    const Cell* pick = nullptr;
    for (const auto& [c, filled] : d)
        if (c.row == row && (!pick || c.col > pick->col)) pick = &c;
    if (!pick || !d.at(*pick)) return out;
    const Cell box = *pick;
    int target = 0;
    for (int r = box.row - 1; r >= 1; --r)
        if (!d.contains({r, box.col})) {
            target = r;
            break;
        }
    if (target == 0) return out;
    for (int r = target + 1; r < box.row; ++r)
        if (!d.at({r, box.col})) return out;
    LabeledDiagram moved = d;
    moved.erase(box);
    moved.emplace(Cell{target, box.col}, true);
    out.push_back(std::move(moved));
    if (with_k_moves) {
        LabeledDiagram added = d;
        added[box] = false;
        added.emplace(Cell{target, box.col}, true);
        out.push_back(std::move(added));
    }
    return out;
}

inline std::set<LabeledDiagram> kohnert_closure(const LabeledDiagram& start, bool with_k_moves) {
    std::set<LabeledDiagram> seen{start};
    std::deque<LabeledDiagram> queue{start};
    while (!queue.empty()) {
        LabeledDiagram d = std::move(queue.front());
        queue.pop_front();
        std::set<int> rows;
        for (const auto& [c, f] : d) rows.insert(c.row);
        for (int r : rows)
            for (auto& next : kohnert_moves(d, r, with_k_moves))
                if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    return seen;
}

inline std::vector<int> labeled_weight(const LabeledDiagram& d, int n) {
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    for (const auto& [c, f] : d) ++wt.at(static_cast<std::size_t>(c.row - 1));
    return wt;
}

inline SparsePoly expand_key(const Index& alpha) {
    require_weak(alpha);
    const int n = static_cast<int>(alpha.size());
    SparsePoly out(n);
    for (const auto& d : kohnert_closure(labeled_diagram_of(alpha), false)) out.add_term(labeled_weight(d, n), 1);
    return out;
}

inline SparsePoly expand_lascoux(const Index& alpha) {
    require_weak(alpha);
    const int n = static_cast<int>(alpha.size());
    const int size = index_size(alpha);
    SparsePoly out(n);
    for (const auto& d : kohnert_closure(labeled_diagram_of(alpha), true))
        out.add_term(labeled_weight(d, n), (size - static_cast<int>(d.size())) % 2 == 0 ? 1 : -1);
    return out;
}

// ---------------------------------------------------------------------------
// Ladder and K-ladder moves

// Box (i,j) moves (or, for a K-ladder move, is copied) to (i-k, j+1) when
// (i,j+1) is empty, (i-k,j) and (i-k,j+1) are empty, and the rows strictly
// between hold both (i-l,j) and (i-l,j+1).
inline std::vector<Diagram> ladder_moves(const Diagram& d, const Cell& box, bool with_k_moves) {
    std::vector<Diagram> out;
    const int i = box.row, j = box.col;
    if (d.contains({i, j + 1})) return out;
    for (int k = 1; k < i; ++k) {
        bool top_free = !d.contains({i - k, j}) && !d.contains({i - k, j + 1});
        if (top_free) {
            Diagram moved = d;
            moved.erase(box);
            moved.insert({i - k, j + 1});
            out.push_back(std::move(moved));
            if (with_k_moves) {
                Diagram added = d;
                added.insert({i - k, j + 1});
                out.push_back(std::move(added));
            }
            break;
        }
        if (!(d.contains({i - k, j}) && d.contains({i - k, j + 1}))) break;
    }
    return out;
}

inline std::set<Diagram> ladder_closure(const Permutation& w, bool with_k_moves) {
    Diagram start = diagram_of(lehmer_code(w).parts());
    std::set<Diagram> seen{start};
    std::deque<Diagram> queue{start};
    while (!queue.empty()) {
        Diagram d = std::move(queue.front());
        queue.pop_front();
        for (const auto& box : d)
            for (auto& next : ladder_moves(d, box, with_k_moves))
                if (seen.insert(next).second) queue.push_back(std::move(next));
    }
    return seen;
}

inline SparsePoly expand_schubert(const Index& alpha) {
    require_weak(alpha);
    const int n = static_cast<int>(alpha.size());
    Permutation w = code_inverse(WeakComposition(alpha));
    SparsePoly out(n);
    for (const auto& d : ladder_closure(w, false)) out.add_term(row_weight(d, n), 1);
    return out;
}

inline SparsePoly expand_grothendieck(const Index& alpha) {
    require_weak(alpha);
    const int n = static_cast<int>(alpha.size());
    const int size = index_size(alpha);
    Permutation w = code_inverse(WeakComposition(alpha));
    SparsePoly out(n);
    for (const auto& d : ladder_closure(w, true))
        out.add_term(row_weight(d, n), (size - static_cast<int>(d.size())) % 2 == 0 ? 1 : -1);
    return out;
}

// The reference stays valid for the life of the program.
inline const SparsePoly& expand_poly_basis(PBasis b, const Index& alpha) {
    static Memo<std::pair<int, Index>, SparsePoly> memo;
    return *memo.get({static_cast<int>(b), alpha}, [&] {
        switch (b) {
            case PBasis::mslide: return expand_slide(SlideKind::monomial, alpha);
            case PBasis::fslide: return expand_slide(SlideKind::fundamental, alpha);
            case PBasis::atom: return expand_atom(alpha);
            case PBasis::key: return expand_key(alpha);
            case PBasis::lascoux: return expand_lascoux(alpha);
            case PBasis::schubert: return expand_schubert(alpha);
            case PBasis::grothendieck: return expand_grothendieck(alpha);
        }
        throw std::logic_error("unhandled basis");
    });
}

// ---------------------------------------------------------------------------
// Schubert-Kostka numbers

inline Integer schubert_kostka(const Index& alpha, const Index& omega) {
    if (index_size(alpha) != index_size(omega)) return 0;
    std::size_t n = std::max(alpha.size(), omega.size());
    Index a = alpha, w = omega;
    a.resize(n, 0);
    w.resize(n, 0);
    return expand_poly_basis(PBasis::schubert, a).coeff(w).get_num();
}

struct PolyData {
    std::shared_ptr<const Poset> poset;
    std::shared_ptr<const TransitionMatrix> to_monomials;
    std::shared_ptr<const TransitionMatrix> inverse;
};

// Homogeneous bases: weak compositions of k with n entries under dominance,
// entry (a, w) nonzero only when w is dominance-below a.
inline const PolyData& poly_data(PBasis b, int n, int k, InversionMode mode = InversionMode::backsub) {
    if (!is_homogeneous(b)) throw std::invalid_argument(basis_name(b) + " is not homogeneous");
    static Memo<std::tuple<int, int, int, int>, PolyData> memo;
    auto ptr = memo.get({static_cast<int>(b), n, k, static_cast<int>(mode)}, [&] {
        auto poset = std::make_shared<const Poset>(Poset::dominance_weak(n, k));
        auto T = std::make_shared<TransitionMatrix>(poset, Support::col_leq_row);
        for (std::size_t r = 0; r < poset->size(); ++r)
            for (const auto& [e, c] : expand_poly_basis(b, poset->element(r)).terms()) T->set(r, poset->index_of(e), c);
        auto inv = std::make_shared<const TransitionMatrix>(invert_unitriangular(*T, mode));
        return PolyData{poset, T, inv};
    });
    return *ptr;
}

inline Integer schubert_kostka_inverse(const Index& alpha, const Index& omega,
                                       InversionMode mode = InversionMode::backsub) {
    if (index_size(alpha) != index_size(omega)) return 0;
    std::size_t n = std::max(alpha.size(), omega.size());
    Index a = alpha, w = omega;
    a.resize(n, 0);
    w.resize(n, 0);
    const auto& d = poly_data(PBasis::schubert, static_cast<int>(n), index_size(a), mode);
    return d.inverse->get(a, w).get_num();
}

// Graded dominance: a below b iff |a| > |b|, or equal sizes and a dominance-below b.
inline bool graded_dominance_leq(const Index& a, const Index& b) {
    int sa = index_size(a), sb = index_size(b);
    if (sa != sb) return sa > sb;
    return dominance_leq(a, b);
}

// Transition from {B_e} to monomials on the smallest exponent set containing
// the seeds and closed under taking supports of basis elements. Ordered by
// graded dominance; finite even for the inhomogeneous families.
inline TransitionMatrix pbasis_closure_transition(PBasis b, const std::vector<Index>& seeds) {
    std::set<Index> closed;
    std::deque<Index> queue;
    for (const auto& e : seeds)
        if (closed.insert(e).second) queue.push_back(e);
    while (!queue.empty()) {
        Index e = std::move(queue.front());
        queue.pop_front();
        for (const auto& [f, c] : expand_poly_basis(b, e).terms())
            if (closed.insert(f).second) queue.push_back(f);
    }
    auto poset = std::make_shared<const Poset>("graded-dominance-weak", std::vector<Index>(closed.begin(), closed.end()),
                                               graded_dominance_leq);
    TransitionMatrix T(poset, Support::col_leq_row);
    for (std::size_t r = 0; r < poset->size(); ++r)
        for (const auto& [e, c] : expand_poly_basis(b, poset->element(r)).terms()) T.set(r, poset->index_of(e), c);
    return T;
}

// Expansion of a polynomial in n variables in the basis b.
inline CoeffMap monomials_to_pbasis(const SparsePoly& p, PBasis b, InversionMode mode = InversionMode::backsub) {
    const int n = p.nvars();
    CoeffMap out;
    if (p.is_zero()) return out;
    if (is_homogeneous(b)) {
        std::map<int, CoeffMap> by_degree;
        for (const auto& [e, c] : p.terms()) by_degree[index_size(e)][e] = c;
        for (const auto& [k, part] : by_degree) {
            const auto& d = poly_data(b, n, k, mode);
            for (const auto& [g, c] : apply_row_vector(part, *d.inverse)) add_to(out, g, c);
        }
        return out;
    }
    std::vector<Index> seeds;
    CoeffMap coeffs;
    for (const auto& [e, c] : p.terms()) {
        seeds.push_back(e);
        coeffs[e] = c;
    }
    TransitionMatrix inv = invert_unitriangular(pbasis_closure_transition(b, seeds), mode);
    return apply_row_vector(coeffs, inv);
}

inline SparsePoly pbasis_poly(const CoeffMap& c, PBasis b, int n) {
    SparsePoly out(n);
    for (const auto& [a, v] : c) {
        if (static_cast<int>(a.size()) != n) throw std::invalid_argument("index length does not match variable count");
        out += expand_poly_basis(b, a) * v;
    }
    return out;
}

// B_a B_b expanded in {B_g}; both indices are zero-padded to a common length.
inline CoeffMap poly_structure(PBasis b, const Index& a, const Index& c, InversionMode mode = InversionMode::backsub) {
    require_weak(a);
    require_weak(c);
    std::size_t n = std::max({a.size(), c.size(), std::size_t{1}});
    Index pa = a, pc = c;
    pa.resize(n, 0);
    pc.resize(n, 0);
    SparsePoly prod = expand_poly_basis(b, pa) * expand_poly_basis(b, pc);
    return monomials_to_pbasis(prod, b, mode);
}

}  // namespace structcon
