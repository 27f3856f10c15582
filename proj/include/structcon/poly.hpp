#pragma once

// Sparse multivariate polynomials over the rationals.

#include "structcon/core.hpp"
#include "structcon/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace structcon {

using Exponent = std::vector<int>;

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (int v : e) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class SparsePoly {
public:
    using Terms = std::map<Exponent, Rational>;

    SparsePoly() = default;
    explicit SparsePoly(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }

    static SparsePoly constant(int nvars, const Rational& c) {
        SparsePoly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static SparsePoly monomial(const Exponent& e, const Rational& c = 1) {
        SparsePoly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }
    static SparsePoly variable(int nvars, int i) {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        return monomial(e);
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    void add_term(const Exponent& e, const Rational& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("exponent length " + std::to_string(e.size()) + " does not match nvars " +
                                        std::to_string(nvars_));
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coeff(const Exponent& e) const {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("coeff: exponent length mismatch");
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    SparsePoly& operator+=(const SparsePoly& q) {
        check_same(q);
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& q) {
        check_same(q);
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
    friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
    friend SparsePoly operator*(SparsePoly p, const Rational& c) { return p *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly p) { return p *= c; }

    friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
        p.check_same(q);
        std::unordered_map<Exponent, Rational, ExponentHash> acc;
        Exponent e(static_cast<std::size_t>(p.nvars_));
        for (const auto& [ep, cp] : p.terms_)
            for (const auto& [eq, cq] : q.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + eq[i];
                acc[e] += cp * cq;
            }
        SparsePoly r(p.nvars_);
        for (auto& [k, v] : acc)
            if (v != 0) r.terms_.emplace(k, std::move(v));
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& q) { return *this = *this * q; }

    friend bool operator==(const SparsePoly& p, const SparsePoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }

    int min_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = index_size(e);
            if (d < 0 || s < d) d = s;
        }
        return d;
    }
    int max_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, index_size(e));
        return d;
    }

    SparsePoly homogeneous_part(int degree) const {
        SparsePoly r(nvars_);
        for (const auto& [e, c] : terms_)
            if (index_size(e) == degree) r.terms_.emplace(e, c);
        return r;
    }

    // Appends zero exponents so the polynomial lives in more variables.
    SparsePoly embedded(int n) const {
        if (n < nvars_) throw std::invalid_argument("embedded: fewer variables requested");
        SparsePoly r(n);
        for (const auto& [e, c] : terms_) {
            Exponent f = e;
            f.resize(static_cast<std::size_t>(n), 0);
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    // Swapping variables i and i+1 leaves a symmetric polynomial unchanged;
    // returns the first exponent whose swap image has a different coefficient.
    std::optional<std::pair<Exponent, Exponent>> symmetry_violation() const {
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i + 1 < e.size(); ++i) {
                if (e[i] == e[i + 1]) continue;
                Exponent f = e;
                std::swap(f[i], f[i + 1]);
                if (coeff(f) != c) return std::make_pair(e, f);
            }
        return std::nullopt;
    }
    bool is_symmetric() const { return !symmetry_violation().has_value(); }

    // Coefficients of x_{i_1}^{a_1}...x_{i_k}^{a_k} must not depend on the
    // increasing index choice.
    bool is_quasisymmetric() const {
        for (const auto& [e, c] : terms_) {
            Exponent packed(static_cast<std::size_t>(nvars_), 0);
            std::size_t k = 0;
            for (int v : e)
                if (v) packed[k++] = v;
            if (coeff(packed) != c) return false;
        }
        // Every compositional exponent must be matched by all its spreads.
        for (const auto& [e, c] : terms_) {
            std::size_t k = 0;
            while (k < e.size() && e[k] != 0) ++k;
            bool packed = std::all_of(e.begin() + static_cast<long>(k), e.end(), [](int v) { return v == 0; });
            if (!packed) continue;
            // Check all placements of the k nonzero parts.
            std::vector<int> pick(e.size(), 0);
            std::fill(pick.end() - static_cast<long>(k), pick.end(), 1);
            do {
                Exponent f(e.size(), 0);
                std::size_t j = 0;
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (pick[i]) f[i] = e[j++];
                if (coeff(f) != c) return false;
            } while (std::next_permutation(pick.begin(), pick.end()));
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<Exponent> keys;
        for (const auto& [e, c] : terms_) keys.push_back(e);
        std::ranges::sort(keys, CanonicalLess{});
        std::ostringstream os;
        bool first = true;
        for (const auto& e : keys) {
            Rational c = terms_.at(e);
            bool neg = c < 0;
            if (neg) c = -c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            bool unit = c == 1;
            bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
            if (!unit || constant_term) os << structcon::to_string(c);
            bool need_star = !unit && !constant_term;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (need_star) os << '*';
                need_star = true;
                os << 'x' << (i + 1);
                if (e[i] > 1) os << '^' << e[i];
            }
        }
        return os.str();
    }

private:
    void check_same(const SparsePoly& q) const {
        if (q.nvars_ != nvars_)
            throw std::invalid_argument("variable count mismatch: " + std::to_string(nvars_) + " vs " +
                                        std::to_string(q.nvars_));
    }

    int nvars_ = 0;
    Terms terms_;
};

inline SparsePoly poly_add(const SparsePoly& p, const SparsePoly& q) { return p + q; }
inline SparsePoly poly_mul(const SparsePoly& p, const SparsePoly& q) { return p * q; }
inline Rational poly_coeff(const SparsePoly& p, const WeakComposition& e) { return p.coeff(e.parts()); }

// Coefficient maps keyed by index objects (partitions, compositions, ...).
using CoeffMap = std::map<Index, Rational>;

inline void add_to(CoeffMap& m, const Index& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

inline std::vector<Index> canonical_keys(const CoeffMap& m) {
    std::vector<Index> keys;
    for (const auto& [k, v] : m) keys.push_back(k);
    std::ranges::sort(keys, CanonicalLess{});
    return keys;
}

}  // namespace structcon
