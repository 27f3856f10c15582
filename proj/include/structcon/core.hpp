#pragma once

// Index objects for every basis: partitions, weak and strong compositions,
// permutations and box diagrams, together with the orders used to state
// triangularity (dominance, refinement, sorted-then-dominance).
//
// Dominance follows the "prefix sums of the smaller element are larger"
// convention throughout: a <= b iff a_1 + ... + a_i >= b_1 + ... + b_i for
// all i, and |a| == |b|. Under this convention (2,1) <= (1,1,1).

#include "structcon/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace structcon {

using Index = std::vector<int>;

inline int index_size(std::span<const int> v) { return std::accumulate(v.begin(), v.end(), 0); }

inline std::string format_index(std::span<const int> v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

// Comma separated nonnegative integers; the empty string is the empty index.
inline Index parse_index(std::string_view text) {
    Index out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("malformed index '" + std::string(text) + "'");
        int value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("malformed index '" + std::string(text) + "'");
            value = value * 10 + (ch - '0');
            if (value > 1000000) throw std::invalid_argument("index part too large in '" + std::string(text) + "'");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive: " + format_index(parts_));
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must weakly decrease: " + format_index(parts_));
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return index_size(parts_); }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    bool is_strict() const {
        return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
    }

    Partition conjugate() const {
        std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    // Multiplicity of the part value v.
    int multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("weak composition entries must be nonnegative: " + format_index(parts_));
    }
    WeakComposition(std::initializer_list<int> parts) : WeakComposition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return index_size(parts_); }
    int nvars() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    WeakComposition padded(int n) const {
        if (n < nvars()) throw std::invalid_argument("cannot pad to a shorter length");
        auto p = parts_;
        p.resize(static_cast<std::size_t>(n), 0);
        return WeakComposition(std::move(p));
    }

    auto operator<=>(const WeakComposition&) const = default;

private:
    std::vector<int> parts_;
};

class StrongComposition {
public:
    StrongComposition() = default;
    explicit StrongComposition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("strong composition parts must be positive: " + format_index(parts_));
    }
    StrongComposition(std::initializer_list<int> parts) : StrongComposition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return index_size(parts_); }
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    auto operator<=>(const StrongComposition&) const = default;

private:
    std::vector<int> parts_;
};

// One-line notation w(1) w(2) ... w(m); trailing fixed points are stripped so
// that permutations of S_m and their stabilizations compare equal.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        std::vector<bool> seen(word_.size() + 1, false);
        for (int v : word_) {
            if (v < 1 || v > static_cast<int>(word_.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("not a permutation: " + format_index(word_));
            seen[static_cast<std::size_t>(v)] = true;
        }
        while (!word_.empty() && word_.back() == static_cast<int>(word_.size())) word_.pop_back();
    }
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}

    static Permutation identity() { return Permutation(); }

    // Parses "2143" (single digit values) or "2,1,4,3".
    static Permutation parse(std::string_view text) {
        if (text.find(',') != std::string_view::npos) return Permutation(parse_index(text));
        std::vector<int> w;
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
            w.push_back(ch - '0');
        }
        return Permutation(std::move(w));
    }

    // Value at position i (1-based), with the stabilization convention.
    int operator()(int i) const {
        return i >= 1 && i <= static_cast<int>(word_.size()) ? word_[static_cast<std::size_t>(i - 1)] : i;
    }
    int support() const { return static_cast<int>(word_.size()); }
    std::vector<int> word(int m) const {
        std::vector<int> w(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i - 1)] = (*this)(i);
        return w;
    }
    const std::vector<int>& word() const { return word_; }

    int inversions() const {
        int inv = 0;
        for (std::size_t i = 0; i < word_.size(); ++i)
            for (std::size_t j = i + 1; j < word_.size(); ++j)
                if (word_[i] > word_[j]) ++inv;
        return inv;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> word_;
};

// ---------------------------------------------------------------------------
// Orders

// Dominance, zero-padding the shorter argument. Different sizes are
// incomparable.
inline bool dominance_leq(std::span<const int> a, std::span<const int> b) {
    if (index_size(a) != index_size(b)) return false;
    long sa = 0, sb = 0;
    std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

inline bool dominance_less(std::span<const int> a, std::span<const int> b) {
    return dominance_leq(a, b) && !std::ranges::equal(a, b);
}

// When `finer` refines `coarser`, returns the consecutive blocks of `finer`
// summing to the parts of `coarser`.
inline std::optional<std::vector<std::vector<int>>> refinement_blocks(std::span<const int> finer,
                                                                      std::span<const int> coarser) {
    std::vector<std::vector<int>> blocks;
    std::size_t pos = 0;
    for (int target : coarser) {
        std::vector<int> block;
        int sum = 0;
        while (sum < target && pos < finer.size()) {
            sum += finer[pos];
            block.push_back(finer[pos]);
            ++pos;
        }
        if (sum != target || block.empty()) return std::nullopt;
        blocks.push_back(std::move(block));
    }
    if (pos != finer.size()) return std::nullopt;
    return blocks;
}

inline bool refines(std::span<const int> finer, std::span<const int> coarser) {
    return refinement_blocks(finer, coarser).has_value();
}

inline Index sorted_decreasing(std::span<const int> a) {
    Index s;
    for (int v : a)
        if (v != 0) s.push_back(v);
    std::ranges::sort(s, std::greater<>());
    return s;
}

// The order used for quasisymmetric Schur polynomials: compositions with
// different sorted shapes compare through (classical) dominance of the sorted
// shapes, compositions with the same sorted shape through dominance of the
// compositions themselves.
inline bool dominance_prime_leq(std::span<const int> a, std::span<const int> b) {
    if (index_size(a) != index_size(b))
        throw std::domain_error("dominance_prime_leq: sizes differ (" + format_index(a) + " vs " + format_index(b) + ")");
    Index sa = sorted_decreasing(a), sb = sorted_decreasing(b);
    if (sa != sb) return dominance_less(sa, sb);
    return dominance_leq(a, b);
}

// Graded by size, then reverse lexicographic (lexicographically larger first).
inline bool canonical_less(std::span<const int> a, std::span<const int> b) {
    int na = index_size(a), nb = index_size(b);
    if (na != nb) return na < nb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

struct CanonicalLess {
    bool operator()(const Index& a, const Index& b) const { return canonical_less(a, b); }
};

// ---------------------------------------------------------------------------
// Lehmer codes

inline WeakComposition lehmer_code(const Permutation& w, int n = 0) {
    int m = std::max(n, w.support());
    std::vector<int> c(static_cast<std::size_t>(m), 0);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (w(i) >= w(j)) ++c[static_cast<std::size_t>(i - 1)];
    return WeakComposition(std::move(c));
}

// Inverse of the Lehmer code inside S_m; requires c_i <= m - i.
inline Permutation code_inverse(const WeakComposition& c, int m) {
    if (m < c.nvars()) throw std::domain_error("code_inverse: ambient size smaller than code length");
    for (int i = 1; i <= c.nvars(); ++i)
        if (c[static_cast<std::size_t>(i - 1)] > m - i)
            throw std::domain_error("code_inverse: entry " + std::to_string(i) + " of " + format_index(c.parts()) +
                                    " violates the Lehmer bound c_i <= " + std::to_string(m) + " - i");
    std::vector<int> unused(static_cast<std::size_t>(m));
    std::iota(unused.begin(), unused.end(), 1);
    std::vector<int> w;
    for (int i = 1; i <= m; ++i) {
        int ci = i <= c.nvars() ? c[static_cast<std::size_t>(i - 1)] : 0;
        w.push_back(unused[static_cast<std::size_t>(ci)]);
        unused.erase(unused.begin() + ci);
    }
    return Permutation(std::move(w));
}

// Smallest ambient symmetric group that contains a permutation with code c.
inline int lehmer_ambient(const WeakComposition& c) {
    int m = c.nvars();
    for (int i = 1; i <= c.nvars(); ++i) m = std::max(m, i + c[static_cast<std::size_t>(i - 1)]);
    return m;
}

inline Permutation code_inverse(const WeakComposition& c) { return code_inverse(c, lehmer_ambient(c)); }

// ---------------------------------------------------------------------------
// sort / flat / z

struct SortFlatZ {
    Partition sort;
    StrongComposition flat;
    Integer z;
};

inline StrongComposition flat(std::span<const int> a) {
    std::vector<int> f;
    for (int v : a)
        if (v != 0) f.push_back(v);
    return StrongComposition(std::move(f));
}

inline Integer z_factor(std::span<const int> a) {
    Integer z = 1;
    Index s = sorted_decreasing(a);
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j] == s[i]) ++j;
        long mult = static_cast<long>(j - i);
        Integer part = s[i];
        for (long k = 0; k < mult; ++k) z *= part;
        z *= factorial(mult);
        i = j;
    }
    return z;
}

inline SortFlatZ sort_flat_z(std::span<const int> a) {
    return {Partition(sorted_decreasing(a)), flat(a), z_factor(a)};
}

// ---------------------------------------------------------------------------
// Enumeration, all in canonical order

namespace detail {
inline void partitions_rec(int remaining, int max_part, int max_len, Index& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_len, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

inline std::vector<Partition> partitions_of(int k, int max_len = -1) {
    std::vector<Partition> out;
    Index cur;
    detail::partitions_rec(k, k, max_len < 0 ? k : max_len, cur, out);
    return out;
}

inline std::vector<StrongComposition> strong_compositions_of(int k, int max_len = -1) {
    std::vector<StrongComposition> out;
    if (max_len < 0) max_len = k;
    Index cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = remaining; p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p);
            cur.pop_back();
        }
    };
    rec(rec, k);
    return out;
}

inline std::vector<WeakComposition> weak_compositions_of(int n, int k) {
    std::vector<WeakComposition> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    Index cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int p = remaining; p >= 0; --p) {
            cur[static_cast<std::size_t>(pos)] = p;
            self(self, pos + 1, remaining - p);
        }
    };
    rec(rec, 0, k);
    return out;
}

inline std::vector<Permutation> permutations_of(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

// ---------------------------------------------------------------------------
// Diagrams: cells (row, col), 1-based, row 1 on top.

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

using Diagram = std::set<Cell>;

// Row i holds a_i left-justified cells.
inline Diagram diagram_of(std::span<const int> a) {
    Diagram d;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int j = 1; j <= a[i]; ++j) d.insert({static_cast<int>(i) + 1, j});
    return d;
}

inline std::vector<int> row_weight(const Diagram& d, int n) {
    std::vector<int> wt(static_cast<std::size_t>(n), 0);
    for (const auto& c : d) {
        if (c.row < 1 || c.row > n) throw std::domain_error("diagram cell outside the first n rows");
        ++wt[static_cast<std::size_t>(c.row - 1)];
    }
    return wt;
}

}  // namespace structcon
