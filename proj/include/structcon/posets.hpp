#pragma once

// Finite posets over index objects, chain enumeration, Moebius functions and
// inversion of triangular transition matrices.
//
// Two inversion routes are provided and must agree entrywise:
//  * invert_unitriangular_chains: the alternating sum over weighted chains
//      rho(x,y) = sum_l (-1)^l sum_{x=z0<z1<...<zl=y} eta(z0,z1)...eta(z_{l-1},zl),
//    accumulated by chain length;
//  * invert_unitriangular_backsub: solving eta * rho = 1 column by column
//    along a linear extension.

#include "structcon/core.hpp"
#include "structcon/poly.hpp"
#include "structcon/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace structcon {

class Poset {
public:
    using Relation = std::function<bool(const Index&, const Index&)>;

    Poset(std::string name, std::vector<Index> elements, const Relation& leq)
        : name_(std::move(name)), elements_(std::move(elements)) {
        const std::size_t n = elements_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!lookup_.emplace(elements_[i], i).second)
                throw std::invalid_argument("duplicate poset element " + format_index(elements_[i]));
        }
        leq_.assign(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) leq_[i][j] = (i == j) || leq(elements_[i], elements_[j]);
        build_linear_extension();
    }

    // Q_m: partitions of m under dominance, optionally of length <= max_len.
    static Poset dominance_partitions(int m, int max_len = -1) {
        std::vector<Index> els;
        for (const auto& p : partitions_of(m, max_len)) els.push_back(p.parts());
        return Poset("dominance-partitions", std::move(els), dominance_leq_rel);
    }

    // Z_{n,k}: strong compositions of k with at most n parts under dominance.
    static Poset dominance_strong_compositions(int n, int k) {
        std::vector<Index> els;
        for (const auto& c : strong_compositions_of(k, n)) els.push_back(c.parts());
        return Poset("dominance-compositions", std::move(els), dominance_leq_rel);
    }

    // D_{n,k}: strong compositions under the sorted-then-dominance order.
    static Poset dominance_prime(int n, int k) {
        std::vector<Index> els;
        for (const auto& c : strong_compositions_of(k, n)) els.push_back(c.parts());
        return Poset("dominance-prime", std::move(els),
                     [](const Index& a, const Index& b) { return dominance_prime_leq(a, b); });
    }

    // I_{n,k}: weak compositions of k with n entries under dominance.
    static Poset dominance_weak(int n, int k) {
        std::vector<Index> els;
        for (const auto& c : weak_compositions_of(n, k)) els.push_back(c.parts());
        return Poset("dominance-weak", std::move(els), dominance_leq_rel);
    }

    // L_{n,k}: Lehmer codes of permutations in S_n with k inversions.
    static Poset lehmer(int n, int k) {
        std::vector<Index> els;
        for (const auto& c : weak_compositions_of(n, k)) {
            bool ok = true;
            for (int i = 1; i <= n; ++i) ok = ok && c[static_cast<std::size_t>(i - 1)] <= n - i;
            if (ok) els.push_back(c.parts());
        }
        return Poset("lehmer", std::move(els), dominance_leq_rel);
    }

    // Weak compositions with n entries and sizes in [dmin, dmax]: a <= b iff
    // |a| > |b|, or |a| == |b| and a is dominance-below b. Triangularity
    // order for bases whose expansions carry higher-degree corrections.
    static Poset graded_dominance_weak(int n, int dmin, int dmax) {
        std::vector<Index> els;
        for (int d = dmin; d <= dmax; ++d)
            for (const auto& c : weak_compositions_of(n, d)) els.push_back(c.parts());
        return Poset("graded-dominance-weak", std::move(els), [](const Index& a, const Index& b) {
            int sa = index_size(a), sb = index_size(b);
            if (sa != sb) return sa > sb;
            return dominance_leq(a, b);
        });
    }

    // Reflexive-transitive closure of the given relation pairs.
    static Poset from_relations(std::string name, std::vector<Index> elements,
                                const std::vector<std::pair<Index, Index>>& pairs) {
        const std::size_t n = elements.size();
        std::map<Index, std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i) pos[elements[i]] = i;
        std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
        for (const auto& [a, b] : pairs) r.at(pos.at(a)).at(pos.at(b)) = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (r[i][k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (r[k][j]) r[i][j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && r[i][j] && r[j][i]) throw std::invalid_argument("relation has a cycle");
        auto shared = std::make_shared<std::vector<std::vector<char>>>(std::move(r));
        auto lookup = std::make_shared<std::map<Index, std::size_t>>(std::move(pos));
        return Poset(std::move(name), std::move(elements), [shared, lookup](const Index& a, const Index& b) {
            return (*shared)[lookup->at(a)][lookup->at(b)] != 0;
        });
    }

    const std::string& name() const { return name_; }
    std::size_t size() const { return elements_.size(); }
    const Index& element(std::size_t i) const { return elements_.at(i); }
    const std::vector<Index>& elements() const { return elements_; }

    std::optional<std::size_t> find(const Index& e) const {
        auto it = lookup_.find(e);
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Index& e) const {
        auto it = lookup_.find(e);
        if (it == lookup_.end()) throw std::domain_error("element " + format_index(e) + " not in poset " + name_);
        return it->second;
    }

    bool leq(std::size_t i, std::size_t j) const { return leq_[i][j] != 0; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq_[i][j] != 0; }
    bool leq(const Index& a, const Index& b) const { return leq(index_of(a), index_of(b)); }

    // Topological order, ties broken by canonical order of the elements.
    const std::vector<std::size_t>& linear_extension() const { return linext_; }
    std::size_t position(std::size_t i) const { return position_[i]; }

    // Elements z with x <= z <= y, in linear extension order.
    std::vector<std::size_t> interval(std::size_t x, std::size_t y) const {
        std::vector<std::size_t> out;
        for (std::size_t z : linext_)
            if (leq(x, z) && leq(z, y)) out.push_back(z);
        return out;
    }

    // Strict cover relations x < y with nothing in between.
    bool covers(std::size_t x, std::size_t y) const {
        if (!less(x, y)) return false;
        for (std::size_t z = 0; z < size(); ++z)
            if (less(x, z) && less(z, y)) return false;
        return true;
    }

private:
    static bool dominance_leq_rel(const Index& a, const Index& b) { return dominance_leq(a, b); }

    void build_linear_extension() {
        const std::size_t n = elements_.size();
        std::vector<int> indeg(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (less(i, j)) ++indeg[j];
        auto cmp = [this](std::size_t a, std::size_t b) { return canonical_less(elements_[b], elements_[a]); };
        std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
        for (std::size_t i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push(i);
        while (!ready.empty()) {
            std::size_t i = ready.top();
            ready.pop();
            linext_.push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (less(i, j) && --indeg[j] == 0) ready.push(j);
        }
        if (linext_.size() != n) throw std::invalid_argument("relation on " + name_ + " is not antisymmetric");
        position_.assign(n, 0);
        for (std::size_t p = 0; p < n; ++p) position_[linext_[p]] = p;
    }

    std::string name_;
    std::vector<Index> elements_;
    std::map<Index, std::size_t> lookup_;
    std::vector<std::vector<char>> leq_;
    std::vector<std::size_t> linext_;
    std::vector<std::size_t> position_;
};

// ---------------------------------------------------------------------------
// Chains

struct Chain {
    std::vector<Index> elements;  // x = z0 < z1 < ... < zl = y
    std::size_t length() const { return elements.empty() ? 0 : elements.size() - 1; }
};

inline std::vector<Chain> enumerate_chains(const Poset& p, const Index& x, const Index& y, int length) {
    std::size_t xi = p.index_of(x), yi = p.index_of(y);
    if (!p.leq(xi, yi)) throw std::domain_error("enumerate_chains: " + format_index(x) + " is not below " + format_index(y));
    if (length < 0) throw std::domain_error("enumerate_chains: negative length");
    std::vector<Chain> out;
    if (length == 0) {
        if (xi == yi) out.push_back({{x}});
        return out;
    }
    std::vector<std::size_t> inner = p.interval(xi, yi);
    std::vector<std::size_t> path{xi};
    auto rec = [&](auto&& self, std::size_t cur) -> void {
        int steps = static_cast<int>(path.size()) - 1;
        if (steps == length - 1) {
            if (p.less(cur, yi)) {
                Chain c;
                for (std::size_t z : path) c.elements.push_back(p.element(z));
                c.elements.push_back(y);
                out.push_back(std::move(c));
            }
            return;
        }
        for (std::size_t z : inner) {
            if (z == yi || !p.less(cur, z)) continue;
            path.push_back(z);
            self(self, z);
            path.pop_back();
        }
    };
    rec(rec, xi);
    return out;
}

// |C_l(x,y)| for l = 0, 1, ..., computed by dynamic programming over length.
inline std::vector<Integer> chain_counts(const Poset& p, std::size_t x, std::size_t y) {
    std::vector<Integer> counts;
    if (!p.leq(x, y)) return counts;
    std::vector<std::size_t> inner = p.interval(x, y);
    std::map<std::size_t, Integer> layer{{x, 1}};
    counts.push_back(x == y ? 1 : 0);
    while (!layer.empty()) {
        std::map<std::size_t, Integer> next;
        for (const auto& [w, cnt] : layer)
            for (std::size_t z : inner)
                if (p.less(w, z)) next[z] += cnt;
        if (next.empty()) break;
        auto it = next.find(y);
        counts.push_back(it == next.end() ? Integer(0) : it->second);
        next.erase(y);
        layer = std::move(next);
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
}

struct MobiusSplit {
    Integer plus;   // chains of even length
    Integer minus;  // chains of odd length
    Integer value() const { return plus - minus; }
};

inline MobiusSplit mobius_split(const Poset& p, std::size_t x, std::size_t y) {
    MobiusSplit s{0, 0};
    auto counts = chain_counts(p, x, y);
    for (std::size_t l = 0; l < counts.size(); ++l) (l % 2 == 0 ? s.plus : s.minus) += counts[l];
    return s;
}

// Incomparable pairs have Moebius value 0.
inline Integer mobius(const Poset& p, std::size_t x, std::size_t y) { return mobius_split(p, x, y).value(); }
inline Integer mobius(const Poset& p, const Index& x, const Index& y) {
    return mobius(p, p.index_of(x), p.index_of(y));
}

// Number of elements in a longest chain.
inline int height(const Poset& p) {
    if (p.size() == 0) return 0;
    std::vector<int> best(p.size(), 1);
    for (std::size_t a : p.linear_extension())
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.less(b, a)) best[a] = std::max(best[a], best[b] + 1);
    return *std::max_element(best.begin(), best.end());
}

// First pair without a unique meet or join, if any.
inline std::optional<std::pair<Index, Index>> lattice_violation(const Poset& p) {
    const std::size_t n = p.size();
    auto unique_extreme = [&](std::size_t a, std::size_t b, bool lower) {
        std::vector<std::size_t> bounds;
        for (std::size_t z = 0; z < n; ++z)
            if (lower ? (p.leq(z, a) && p.leq(z, b)) : (p.leq(a, z) && p.leq(b, z))) bounds.push_back(z);
        int extremes = 0;
        for (std::size_t z : bounds) {
            bool ext = std::all_of(bounds.begin(), bounds.end(),
                                   [&](std::size_t w) { return lower ? p.leq(w, z) : p.leq(z, w); });
            if (ext) ++extremes;
        }
        return extremes == 1;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (!unique_extreme(a, b, true) || !unique_extreme(a, b, false))
                return std::make_pair(p.element(a), p.element(b));
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Transition matrices

enum class Support {
    row_leq_col,  // entry (a,b) vanishes unless a <= b
    col_leq_row,  // entry (a,b) vanishes unless b <= a
};

class TransitionMatrix {
public:
    TransitionMatrix(std::shared_ptr<const Poset> poset, Support support)
        : poset_(std::move(poset)), support_(support), rows_(poset_->size()) {}

    const Poset& poset() const { return *poset_; }
    std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
    Support support() const { return support_; }
    std::size_t size() const { return rows_.size(); }

    void set(std::size_t r, std::size_t c, const Rational& v) {
        bool ok = support_ == Support::row_leq_col ? poset_->leq(r, c) : poset_->leq(c, r);
        if (!ok && v != 0)
            throw std::domain_error("transition entry (" + format_index(poset_->element(r)) + " | " +
                                    format_index(poset_->element(c)) + ") violates the declared triangularity on " +
                                    poset_->name());
        if (v == 0) rows_[r].erase(c);
        else rows_[r][c] = v;
    }
    void set(const Index& r, const Index& c, const Rational& v) { set(poset_->index_of(r), poset_->index_of(c), v); }

    Rational get(std::size_t r, std::size_t c) const {
        auto it = rows_[r].find(c);
        return it == rows_[r].end() ? Rational(0) : it->second;
    }
    Rational get(const Index& r, const Index& c) const {
        auto ri = poset_->find(r), ci = poset_->find(c);
        if (!ri || !ci) return 0;
        return get(*ri, *ci);
    }
    const std::map<std::size_t, Rational>& row(std::size_t r) const { return rows_[r]; }

    bool is_triangular() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (get(i, i) == 0) return false;
        return true;
    }
    bool is_unitriangular() const {
        for (std::size_t i = 0; i < size(); ++i)
            if (get(i, i) != 1) return false;
        return true;
    }

    TransitionMatrix transposed() const {
        TransitionMatrix t(poset_, support_ == Support::row_leq_col ? Support::col_leq_row : Support::row_leq_col);
        for (std::size_t r = 0; r < size(); ++r)
            for (const auto& [c, v] : rows_[r]) t.rows_[c][r] = v;
        return t;
    }

    friend TransitionMatrix operator*(const TransitionMatrix& a, const TransitionMatrix& b) {
        if (a.poset_.get() != b.poset_.get() || a.support_ != b.support_)
            throw std::invalid_argument("multiplying transition matrices over different posets");
        TransitionMatrix out(a.poset_, a.support_);
        for (std::size_t r = 0; r < a.size(); ++r) {
            std::map<std::size_t, Rational> acc;
            for (const auto& [k, v] : a.rows_[r])
                for (const auto& [c, w] : b.rows_[k]) acc[c] += v * w;
            for (auto& [c, v] : acc)
                if (v != 0) out.rows_[r][c] = v;
        }
        return out;
    }

    bool is_identity() const {
        for (std::size_t r = 0; r < size(); ++r) {
            if (rows_[r].size() != 1) return false;
            auto it = rows_[r].find(r);
            if (it == rows_[r].end() || it->second != 1) return false;
        }
        return true;
    }

    friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
        return a.poset_->elements() == b.poset_->elements() && a.support_ == b.support_ && a.rows_ == b.rows_;
    }

    static TransitionMatrix identity(std::shared_ptr<const Poset> poset, Support support = Support::row_leq_col) {
        TransitionMatrix m(std::move(poset), support);
        for (std::size_t i = 0; i < m.size(); ++i) m.rows_[i][i] = 1;
        return m;
    }

    // The incidence function: 1 on every comparable pair.
    static TransitionMatrix incidence(std::shared_ptr<const Poset> poset) {
        TransitionMatrix m(poset, Support::row_leq_col);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j)
                if (poset->leq(i, j)) m.rows_[i][j] = 1;
        return m;
    }

private:
    std::shared_ptr<const Poset> poset_;
    Support support_;
    std::vector<std::map<std::size_t, Rational>> rows_;
};

enum class InversionMode { chains, backsub };

inline void require_unitriangular(const TransitionMatrix& eta) {
    for (std::size_t i = 0; i < eta.size(); ++i)
        if (eta.get(i, i) != 1)
            throw std::domain_error("transition matrix is not unitriangular: diagonal entry at " +
                                    format_index(eta.poset().element(i)) + " is " + to_string(eta.get(i, i)));
}

namespace detail {

inline TransitionMatrix invert_chains_upper(const TransitionMatrix& eta) {
    const std::size_t n = eta.size();
    TransitionMatrix rho(eta.poset_ptr(), Support::row_leq_col);
    for (std::size_t x = 0; x < n; ++x) {
        std::map<std::size_t, Rational> total;
        std::map<std::size_t, Rational> layer{{x, 1}};  // signed weight of chains of the current length
        while (!layer.empty()) {
            for (const auto& [z, w] : layer) total[z] += w;
            std::map<std::size_t, Rational> next;
            for (const auto& [z, w] : layer)
                for (const auto& [t, v] : eta.row(z))
                    if (t != z) next[t] -= w * v;
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            layer = std::move(next);
        }
        for (const auto& [y, v] : total)
            if (v != 0) rho.set(x, y, v);
    }
    return rho;
}

inline TransitionMatrix invert_backsub_upper(const TransitionMatrix& eta) {
    const std::size_t n = eta.size();
    const Poset& p = eta.poset();
    TransitionMatrix rho(eta.poset_ptr(), Support::row_leq_col);
    const auto& ext = p.linear_extension();
    for (std::size_t y = 0; y < n; ++y) {
        std::vector<Rational> col(n, 0);
        col[y] = 1;
        for (std::size_t pos = p.position(y); pos-- > 0;) {
            std::size_t x = ext[pos];
            if (!p.less(x, y)) continue;
            Rational s = 0;
            for (const auto& [z, v] : eta.row(x))
                if (z != x && col[z] != 0) s += v * col[z];
            col[x] = -s;
        }
        for (std::size_t x = 0; x < n; ++x)
            if (col[x] != 0) rho.set(x, y, col[x]);
    }
    return rho;
}

}  // namespace detail

inline TransitionMatrix invert_unitriangular_chains(const TransitionMatrix& eta) {
    require_unitriangular(eta);
    if (eta.support() == Support::row_leq_col) return detail::invert_chains_upper(eta);
    return detail::invert_chains_upper(eta.transposed()).transposed();
}

inline TransitionMatrix invert_unitriangular_backsub(const TransitionMatrix& eta) {
    require_unitriangular(eta);
    if (eta.support() == Support::row_leq_col) return detail::invert_backsub_upper(eta);
    return detail::invert_backsub_upper(eta.transposed()).transposed();
}

inline TransitionMatrix invert_unitriangular(const TransitionMatrix& eta, InversionMode mode) {
    return mode == InversionMode::chains ? invert_unitriangular_chains(eta) : invert_unitriangular_backsub(eta);
}

// Triangular (nonzero diagonal) inverse: normalize rows to a unitriangular
// matrix, invert, and undo the scaling on the columns.
inline TransitionMatrix invert_triangular(const TransitionMatrix& eta, InversionMode mode) {
    const std::size_t n = eta.size();
    std::vector<Rational> diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = eta.get(i, i);
        if (diag[i] == 0)
            throw std::domain_error("transition matrix is not triangular: zero diagonal at " +
                                    format_index(eta.poset().element(i)));
    }
    TransitionMatrix unit(eta.poset_ptr(), eta.support());
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& [c, v] : eta.row(r)) unit.set(r, c, v / diag[r]);
    TransitionMatrix inv = invert_unitriangular(unit, mode);
    TransitionMatrix out(eta.poset_ptr(), eta.support());
    for (std::size_t r = 0; r < n; ++r)
        for (const auto& [c, v] : inv.row(r)) out.set(r, c, v / diag[c]);
    return out;
}

// Literal chain-by-chain evaluation of the signed weighted sum for one entry.
// Exponential; intended for small intervals and for checking the other routes.
inline Rational signed_chain_sum(const TransitionMatrix& eta, std::size_t x, std::size_t y) {
    const Poset& p = eta.poset();
    bool upper = eta.support() == Support::row_leq_col;
    auto below = [&](std::size_t a, std::size_t b) { return upper ? p.less(a, b) : p.less(b, a); };
    if (x == y) return 1;
    if (!below(x, y)) return 0;
    Rational total = 0;
    auto rec = [&](auto&& self, std::size_t cur, const Rational& weight, int len) -> void {
        for (std::size_t z = 0; z < p.size(); ++z) {
            if (!below(cur, z)) continue;
            if (z != y && !below(z, y)) continue;
            Rational step = eta.get(cur, z);
            if (step == 0) continue;
            Rational w = weight * step;
            if (z == y) total += (len % 2 == 0 ? -w : w);
            else self(self, z, w, len + 1);
        }
    };
    rec(rec, x, Rational(1), 0);
    return total;
}

// Row vector times matrix: given f = sum_r c_r B_r and B_r = sum_c m(r,c) C_c,
// returns the C-coefficients of f.
inline CoeffMap apply_row_vector(const CoeffMap& coeffs, const TransitionMatrix& m) {
    const Poset& p = m.poset();
    std::map<std::size_t, Rational> acc;
    for (const auto& [key, c] : coeffs) {
        auto r = p.find(key);
        if (!r) throw std::domain_error("index " + format_index(key) + " is outside poset " + p.name());
        for (const auto& [col, v] : m.row(*r)) acc[col] += c * v;
    }
    CoeffMap out;
    for (const auto& [col, v] : acc) add_to(out, p.element(col), v);
    return out;
}

}  // namespace structcon
