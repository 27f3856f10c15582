#pragma once

// Named verification suites. Each case aggregates many checks and keeps the
// first counterexample.

#include "structcon/bridge.hpp"
#include "structcon/core.hpp"
#include "structcon/hall_littlewood.hpp"
#include "structcon/oracle.hpp"
#include "structcon/plethysm.hpp"
#include "structcon/poly.hpp"
#include "structcon/polybases.hpp"
#include "structcon/posets.hpp"
#include "structcon/qsym.hpp"
#include "structcon/symfn.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace structcon {

struct CaseResult {
    std::string id;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<CaseResult> cases;
    double seconds = 0;
    bool passed() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    std::string to_text() const {
        std::ostringstream os;
        for (const auto& c : cases)
            os << (c.pass ? "PASS " : "FAIL ") << suite << "/" << c.id << " (" << c.checks << " checks)"
               << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        os << suite << ": " << (passed() ? "PASS" : "FAIL") << " in " << seconds << " s\n";
        return os.str();
    }
};

class CaseBuilder {
public:
    explicit CaseBuilder(std::string id) { r_.id = std::move(id); }
    // detail is only evaluated for the first failure
    void check(bool ok, const std::function<std::string()>& detail) {
        ++r_.checks;
        if (!ok && r_.pass) {
            r_.pass = false;
            r_.detail = detail();
        }
    }
    void note(const std::string& s) {
        if (r_.pass) r_.detail = s;
    }
    void guard(const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return std::string("exception: ") + e.what(); });
        }
    }
    CaseResult done() { return std::move(r_); }

private:
    CaseResult r_;
};

inline std::string format_map(const CoeffMap& m) {
    std::string out = "{";
    bool first = true;
    for (const auto& k : canonical_keys(m)) {
        if (!first) out += ", ";
        first = false;
        out += "(" + format_index(k) + "):" + to_string(m.at(k));
    }
    return out + "}";
}

inline CoeffMap strip_zeros(CoeffMap m) {
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
}

inline SparsePoly poly_from_terms(int n, const std::vector<std::pair<Index, Rational>>& terms) {
    SparsePoly p(n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

// Runs tasks on up to `jobs` threads; results keep task order.
template <class T>
std::vector<T> run_parallel(const std::vector<std::function<T()>>& tasks, int jobs) {
    std::vector<T> out(tasks.size());
    if (jobs <= 1 || tasks.size() < 2) {
        for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
        });
    for (auto& t : pool) t.join();
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CaseResult> suite_paper_examples() {
    std::vector<CaseResult> out;
    auto qcase = [&](const std::string& id, QBasis b, const Index& a, const CoeffMap& expected) {
        CaseBuilder cb(id);
        cb.guard([&] {
            CoeffMap got = strip_zeros(qsym_to_M(b, a, index_size(a)));
            cb.check(got == expected, [&] { return "got " + format_map(got) + ", expected " + format_map(expected); });
        });
        out.push_back(cb.done());
    };
    auto R = [](long p, long q = 1) { return make_rational(p, q); };
    qcase("F_22", QBasis::F, {2, 2}, {{{1, 1, 1, 1}, R(1)}, {{1, 1, 2}, R(1)}, {{2, 1, 1}, R(1)}, {{2, 2}, R(1)}});
    qcase("dual-immaculate_22", QBasis::dimm, {2, 2},
          {{{1, 1, 1, 1}, R(3)}, {{1, 1, 2}, R(2)}, {{1, 2, 1}, R(2)}, {{1, 3}, R(1)}, {{2, 1, 1}, R(1)}, {{2, 2}, R(1)}});
    qcase("quasisymmetric-schur_22", QBasis::qschur, {2, 2},
          {{{1, 1, 1, 1}, R(2)}, {{1, 1, 2}, R(1)}, {{1, 2, 1}, R(1)}, {{2, 1, 1}, R(1)}, {{2, 2}, R(1)}});
    {
        CaseBuilder cb("kostka-I-and-S_22_121");
        cb.guard([&] {
            Integer ki = immaculate_kostka({2, 2}, {1, 2, 1}), ks = qschur_kostka({2, 2}, {1, 2, 1});
            cb.check(ki == 2, [&] { return "K^I = " + ki.get_str(); });
            cb.check(ks == 1, [&] { return "K^S = " + ks.get_str(); });
        });
        out.push_back(cb.done());
    }
    qcase("pcomb_112", QBasis::pcomb, {1, 1, 2}, {{{1, 1, 2}, R(2)}, {{2, 2}, R(1)}});
    qcase("psi_112", QBasis::psi, {1, 1, 2}, {{{1, 1, 2}, R(2)}, {{2, 2}, R(1)}, {{1, 3}, R(4, 5)}, {{4}, R(1, 3)}});
    qcase("phi_112", QBasis::phi, {1, 1, 2}, {{{1, 1, 2}, R(2)}, {{2, 2}, R(1)}, {{1, 3}, R(4, 3)}, {{4}, R(1, 2)}});
    {
        CaseBuilder cb("kostka-p_112_112");
        cb.guard([&] {
            Integer k = pcomb_kostka({1, 1, 2}, {1, 1, 2});
            cb.check(k == 2, [&] { return "K^p = " + k.get_str(); });
        });
        out.push_back(cb.done());
    }
    auto pcase = [&](const std::string& id, const std::function<SparsePoly()>& got, const SparsePoly& expected) {
        CaseBuilder cb(id);
        cb.guard([&] {
            SparsePoly g = got();
            cb.check(g == expected, [&] { return "got " + g.to_string() + ", expected " + expected.to_string(); });
        });
        out.push_back(cb.done());
    };
    pcase("atom_021", [] { return expand_atom({0, 2, 1}); }, poly_from_terms(3, {{{1, 1, 1}, 1}, {{0, 2, 1}, 1}}));
    SparsePoly key = poly_from_terms(3, {{{2, 1, 0}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}, {{1, 1, 1}, 1}, {{0, 2, 1}, 1}});
    pcase("key_021", [] { return expand_key({0, 2, 1}); }, key);
    pcase("lascoux_021", [] { return expand_lascoux({0, 2, 1}); },
          key - poly_from_terms(3, {{{2, 2, 0}, 1}, {{2, 1, 1}, 2}, {{1, 2, 1}, 2}}) +
              poly_from_terms(3, {{{2, 2, 1}, 1}}));
    {
        CaseBuilder cb("kohnert-closures_021");
        cb.guard([&] {
            auto plain = kohnert_closure(labeled_diagram_of({0, 2, 1}), false);
            cb.check(plain.size() == 5, [&] { return std::to_string(plain.size()) + " Kohnert diagrams"; });
            auto mk = [](std::vector<std::tuple<int, int, bool>> cells) {
                LabeledDiagram d;
                for (auto [r, c, f] : cells) d.emplace(Cell{r, c}, f);
                return d;
            };
            std::set<LabeledDiagram> drawn{
                mk({{1, 1, true}, {1, 2, true}, {2, 1, true}, {2, 2, false}}),
                mk({{1, 1, true}, {1, 2, true}, {2, 1, true}, {3, 1, false}}),
                mk({{1, 1, true}, {1, 2, true}, {2, 1, false}, {3, 1, true}}),
                mk({{1, 1, true}, {2, 1, true}, {2, 2, true}, {3, 1, false}}),
                mk({{1, 2, true}, {2, 1, true}, {2, 2, false}, {3, 1, true}}),
            };
            std::set<LabeledDiagram> size4;
            for (const auto& d : kohnert_closure(labeled_diagram_of({0, 2, 1}), true))
                if (d.size() == 4) size4.insert(d);
            cb.check(size4 == drawn, [&] { return std::to_string(size4.size()) + " size-4 diagrams, differing from the drawn five"; });
        });
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("code_2143");
        cb.guard([&] {
            Index c = lehmer_code(Permutation{2, 1, 4, 3}).parts();
            cb.check(c == Index{1, 0, 1, 0}, [&] { return "code = " + format_index(c); });
            auto w = code_inverse(WeakComposition{1, 0, 1, 0}).word();
            cb.check(w == std::vector<int>{2, 1, 4, 3}, [&] { return "code^-1 = " + format_index(w); });
        });
        out.push_back(cb.done());
    }
    SparsePoly schub = poly_from_terms(4, {{{2, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 1}, {{1, 0, 1, 0}, 1}});
    pcase("schubert_1010", [] { return expand_schubert({1, 0, 1, 0}); }, schub);
    pcase("grothendieck_1010", [] { return expand_grothendieck({1, 0, 1, 0}); },
          schub - poly_from_terms(4, {{{2, 1, 0, 0}, 1}, {{2, 0, 1, 0}, 1}, {{1, 1, 1, 0}, 1}}) +
              poly_from_terms(4, {{{2, 1, 1, 0}, 1}}));
    {
        CaseBuilder cb("pipe-dreams_2143");
        cb.guard([&] {
            std::set<Diagram> drawn{{{1, 1}, {1, 3}, {3, 1}}, {{1, 1}, {2, 2}, {3, 1}}, {{1, 1}, {1, 3}, {2, 2}}};
            std::set<Diagram> size3;
            for (const auto& d : ladder_closure(Permutation{2, 1, 4, 3}, true))
                if (d.size() == 3) size3.insert(d);
            cb.check(size3 == drawn, [&] { return std::to_string(size3.size()) + " size-3 diagrams, differing from the drawn three"; });
            cb.check(ladder_closure(Permutation{2, 1, 4, 3}, false).size() == 3, [] { return "rPipes(2143) has wrong size"; });
        });
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

inline bool mobius_identity_holds(const Poset& p, std::string& where) {
    for (std::size_t x = 0; x < p.size(); ++x)
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            Integer s = 0;
            for (auto z : p.interval(x, y)) s += mobius(p, z, y);
            if (s != (x == y ? 1 : 0)) {
                where = format_index(p.element(x)) + " .. " + format_index(p.element(y));
                return false;
            }
        }
    return true;
}

inline std::vector<std::pair<std::string, TransitionMatrix>> transition_matrices_up_to(int max_degree) {
    std::vector<std::pair<std::string, TransitionMatrix>> out;
    for (int k = 1; k <= max_degree; ++k) {
        out.emplace_back("kostka k=" + std::to_string(k), *kostka_data(k, k).kostka);
        for (const auto& t : {Rational(0), Rational(1, 2), Rational(-1)})
            out.emplace_back("hall-littlewood t=" + to_string(t) + " k=" + std::to_string(k), *hl_data(k, k, t).to_m);
        for (auto b : all_qbases())
            if (b != QBasis::M)
                out.emplace_back(basis_name(b) + " k=" + std::to_string(k), *qsym_data(b, k, k).to_M);
        for (auto b : all_pbases())
            if (is_homogeneous(b))
                for (int n = 1; n <= 3; ++n)
                    out.emplace_back(basis_name(b) + " n=" + std::to_string(n) + " k=" + std::to_string(k),
                                     *poly_data(b, n, k).to_monomials);
    }
    for (auto b : {PBasis::lascoux, PBasis::grothendieck})
        for (int k = 0; k <= 3; ++k) {
            std::vector<Index> seeds;
            for (const auto& a : weak_compositions_of(3, k)) seeds.push_back(a.parts());
            out.emplace_back(basis_name(b) + " closure n=3 k=" + std::to_string(k), pbasis_closure_transition(b, seeds));
        }
    return out;
}

inline std::vector<CaseResult> suite_mobius() {
    std::vector<CaseResult> out;
    {
        CaseBuilder cb("zeta-mobius-Q_m");
        for (int m = 0; m <= 7; ++m) {
            Poset p = Poset::dominance_partitions(m);
            std::string where;
            cb.check(mobius_identity_holds(p, where), [&] { return "Q_" + std::to_string(m) + " at " + where; });
        }
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("zeta-mobius-Z_nk");
        std::string maxima;
        for (int k = 1; k <= 6; ++k) {
            Integer mx = 0;
            for (int n = 1; n <= 6; ++n) {
                Poset p = Poset::dominance_strong_compositions(n, k);
                std::string where;
                cb.check(mobius_identity_holds(p, where), [&] {
                    return "Z_{" + std::to_string(n) + "," + std::to_string(k) + "} at " + where;
                });
                for (std::size_t x = 0; x < p.size(); ++x)
                    for (std::size_t y = 0; y < p.size(); ++y) {
                        Integer v = abs(mobius(p, x, y));
                        if (v > mx) mx = v;
                    }
            }
            maxima += (maxima.empty() ? "" : " ") + std::string("k=") + std::to_string(k) + ":" + mx.get_str();
        }
        cb.note("max |mu| on Z_{n,k}, n<=6: " + maxima);
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("zeta-mobius-I_3k");
        for (int k = 0; k <= 4; ++k) {
            Poset p = Poset::dominance_weak(3, k);
            std::string where;
            cb.check(mobius_identity_holds(p, where), [&] { return "I_{3," + std::to_string(k) + "} at " + where; });
        }
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("mobius-values-Q_m");
        for (int m = 0; m <= 8; ++m) {
            Poset p = Poset::dominance_partitions(m);
            for (std::size_t x = 0; x < p.size(); ++x)
                for (std::size_t y = 0; y < p.size(); ++y) {
                    Integer v = mobius(p, x, y);
                    cb.check(v >= -1 && v <= 1, [&] {
                        return "mu(" + format_index(p.element(x)) + ", " + format_index(p.element(y)) + ") = " + v.get_str();
                    });
                }
        }
        Poset q3 = Poset::dominance_partitions(3);
        cb.check(mobius(q3, Index{3}, Index{1, 1, 1}) == 0, [] { return "mu((3),(1,1,1)) != 0"; });
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("chains-vs-backsub");
        cb.guard([&] {
            for (const auto& [name, T] : transition_matrices_up_to(6)) {
                bool unit = T.is_unitriangular();
                TransitionMatrix a = unit ? invert_unitriangular(T, InversionMode::chains)
                                          : invert_triangular(T, InversionMode::chains);
                TransitionMatrix b = unit ? invert_unitriangular(T, InversionMode::backsub)
                                          : invert_triangular(T, InversionMode::backsub);
                cb.check(a == b, [&] { return "inverses differ for " + name; });
                cb.check((T * b).is_identity(), [&] { return "T * T^-1 != 1 for " + name; });
            }
        });
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CaseResult> suite_unitriangular() {
    std::vector<CaseResult> out;
    {
        CaseBuilder cb("kostka");
        for (int k = 0; k <= 7; ++k)
            for (const auto& lam : partitions_of(k))
                for (const auto& mu : partitions_of(k)) {
                    Integer K = kostka(lam, mu);
                    if (lam.parts() == mu.parts())
                        cb.check(K == 1, [&] { return "K_{" + format_index(lam.parts()) + "," + format_index(lam.parts()) + "} != 1"; });
                    else if (K != 0)
                        cb.check(dominance_leq(lam.parts(), mu.parts()), [&] {
                            return "K_{" + format_index(lam.parts()) + "," + format_index(mu.parts()) + "} != 0 outside the up-set";
                        });
                }
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("hall-littlewood");
        for (const auto& t : {Rational(0), Rational(1, 2), Rational(-1), Rational(2)})
            for (int k = 0; k <= 6; ++k)
                for (const auto& lam : partitions_of(k)) {
                    CoeffMap m = hl_to_monomial(lam, t, std::max(k, 1));
                    for (const auto& [mu, c] : m)
                        cb.check(mu == lam.parts() ? c == 1 : dominance_leq(lam.parts(), mu), [&] {
                            return "P_" + format_index(lam.parts()) + " at t=" + to_string(t) + " has m_" + format_index(mu) +
                                   " coefficient " + to_string(c);
                        });
                    cb.check(m.count(lam.parts()) == 1, [&] { return "missing diagonal for " + format_index(lam.parts()); });
                }
        out.push_back(cb.done());
    }
    for (auto b : all_qbases()) {
        if (b == QBasis::M) continue;
        CaseBuilder cb(basis_name(b));
        for (int k = 1; k <= 6; ++k)
            for (const auto& sc : strong_compositions_of(k)) {
                const Index& a = sc.parts();
                CoeffMap m = strip_zeros(qsym_to_M(b, a, k));
                bool power = b == QBasis::pcomb || b == QBasis::psi || b == QBasis::phi;
                Rational diag = 1;
                if (power) {
                    Integer prod = 1;
                    for (int v : a) prod *= v;
                    diag = Rational(z_factor(a)) / Rational(prod);
                }
                cb.check(m.count(a) && m.at(a) == diag, [&] { return "diagonal of " + format_index(a) + " is not " + to_string(diag); });
                for (const auto& [beta, c] : m) {
                    bool ok;
                    if (power) ok = refines(a, beta);
                    else if (b == QBasis::qschur) ok = dominance_prime_leq(a, beta);
                    else ok = dominance_leq(a, beta);
                    cb.check(ok, [&] { return format_index(a) + " has M_" + format_index(beta) + " outside its support order"; });
                }
            }
        out.push_back(cb.done());
    }
    for (auto b : all_pbases()) {
        CaseBuilder cb(basis_name(b));
        cb.guard([&] {
            for (int n = 3; n <= 4; ++n)
                for (int k = 0; k <= 4; ++k)
                    for (const auto& wc : weak_compositions_of(n, k)) {
                        const Index& a = wc.parts();
                        const SparsePoly& p = expand_poly_basis(b, a);
                        cb.check(p.coeff(a) == 1, [&] { return "coefficient of x^" + format_index(a) + " is " + to_string(p.coeff(a)); });
                        for (const auto& [e, c] : p.terms()) {
                            int d = index_size(e);
                            bool ok = d > k || (d == k && dominance_leq(e, a));
                            if (is_homogeneous(b)) ok = d == k && dominance_leq(e, a);
                            cb.check(ok, [&] { return format_index(a) + " has x^" + format_index(e) + " outside its support order"; });
                            if (!is_homogeneous(b))
                                cb.check((c > 0) == ((d - k) % 2 == 0), [&] {
                                    return format_index(a) + ": sign of x^" + format_index(e) + " is wrong";
                                });
                        }
                        if (b == PBasis::lascoux)
                            cb.check(p.homogeneous_part(k) == expand_key(a), [&] { return "lowest part of L_" + format_index(a) + " is not the key polynomial"; });
                        if (b == PBasis::grothendieck)
                            cb.check(p.homogeneous_part(k) == expand_schubert(a), [&] { return "lowest part of G_" + format_index(a) + " is not the Schubert polynomial"; });
                        if (b == PBasis::schubert) {
                            Index longer = a;
                            longer.push_back(0);
                            cb.check(expand_schubert(longer) == p.embedded(n + 1), [&] { return "S_" + format_index(a) + " changes when a zero is appended"; });
                        }
                    }
        });
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

inline CaseResult compare_structure(const std::string& id, const AnyBasis& b, const std::vector<std::pair<Index, Index>>& pairs,
                                    const std::function<CoeffMap(const Index&, const Index&)>& pipeline,
                                    bool nonnegative, bool integral, int jobs) {
    struct One {
        bool ok = true;
        std::string detail;
    };
    std::vector<std::function<One()>> tasks;
    for (const auto& [a, c] : pairs)
        tasks.push_back([&, a, c]() -> One {
            try {
                CoeffMap got = strip_zeros(pipeline(a, c));
                CoeffMap want = strip_zeros(oracle_structure(b, a, c));
                std::string where = any_basis_name(b) + " (" + format_index(a) + ")*(" + format_index(c) + ")";
                if (got != want) return {false, where + ": pipeline " + format_map(got) + ", oracle " + format_map(want)};
                for (const auto& [g, v] : got) {
                    if (nonnegative && v < 0) return {false, where + ": negative coefficient at " + format_index(g)};
                    if (integral && !is_integral(v)) return {false, where + ": non-integral coefficient at " + format_index(g)};
                }
                return {};
            } catch (const std::exception& e) {
                return {false, std::string("exception: ") + e.what()};
            }
        });
    CaseBuilder cb(id);
    for (const auto& r : run_parallel(tasks, jobs)) cb.check(r.ok, [&] { return r.detail; });
    return cb.done();
}

inline std::vector<std::pair<Index, Index>> partition_pairs(int max_each) {
    std::vector<std::pair<Index, Index>> out;
    for (int i = 0; i <= max_each; ++i)
        for (int j = 0; j <= max_each; ++j)
            for (const auto& a : partitions_of(i))
                for (const auto& c : partitions_of(j)) out.emplace_back(a.parts(), c.parts());
    return out;
}

inline std::vector<CaseResult> suite_pipeline_vs_oracle(int jobs = 1) {
    std::vector<CaseResult> out;
    out.push_back(compare_structure("schur", SymBasis::s, partition_pairs(4),
                                    [](const Index& a, const Index& c) {
                                        return structure_constants_classic(SymBasis::s, Partition(a), Partition(c));
                                    },
                                    true, true, jobs));
    {
        CaseBuilder cb("littlewood-richardson");
        cb.guard([&] {
            for (const auto& [a, c] : partition_pairs(4)) {
                CoeffMap s = strip_zeros(structure_constants_classic(SymBasis::s, Partition(a), Partition(c)));
                for (const auto& nu : partitions_of(index_size(a) + index_size(c))) {
                    Integer lr = littlewood_richardson(nu, Partition(a), Partition(c));
                    Rational want = s.count(nu.parts()) ? s.at(nu.parts()) : Rational(0);
                    cb.check(lr >= 0 && Rational(lr) == want, [&] {
                        return "c^" + format_index(nu.parts()) + "_{" + format_index(a) + "," + format_index(c) + "} = " + lr.get_str();
                    });
                }
            }
        });
        out.push_back(cb.done());
    }
    std::vector<std::pair<Index, Index>> comps;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; i + j <= 6; ++j) {
            std::vector<Index> as{Index{}}, cs{Index{}};
            if (i > 0) {
                as.clear();
                for (const auto& x : strong_compositions_of(i)) as.push_back(x.parts());
            }
            if (j > 0) {
                cs.clear();
                for (const auto& x : strong_compositions_of(j)) cs.push_back(x.parts());
            }
            for (const auto& a : as)
                for (const auto& c : cs) comps.emplace_back(a, c);
        }
    for (auto b : all_qbases())
        out.push_back(compare_structure(basis_name(b), b, comps,
                                        [b](const Index& a, const Index& c) { return qsym_structure(b, a, c); },
                                        b == QBasis::F || b == QBasis::M, false, jobs));
    std::vector<std::pair<Index, Index>> weak;
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; i + j <= 4; ++j)
            for (const auto& a : weak_compositions_of(4, i))
                for (const auto& c : weak_compositions_of(4, j)) weak.emplace_back(a.parts(), c.parts());
    for (auto b : all_pbases()) {
        bool positive = b == PBasis::schubert || b == PBasis::mslide || b == PBasis::fslide;
        out.push_back(compare_structure(basis_name(b), b, weak,
                                        [b](const Index& a, const Index& c) { return poly_structure(b, a, c); }, positive,
                                        true, jobs));
    }
    for (const auto& t : {Rational(0), Rational(1, 2)}) {
        std::vector<std::pair<Index, Index>> pp = partition_pairs(3);
        out.push_back(compare_structure("hall-littlewood t=" + to_string(t), HLBasis{t}, pp,
                                        [t](const Index& a, const Index& c) {
                                            return hl_structure(Partition(a), Partition(c), t);
                                        },
                                        false, false, jobs));
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CaseResult> suite_hall_littlewood() {
    std::vector<CaseResult> out;
    {
        CaseBuilder cb("tableau-vs-symmetrization");
        for (const auto& t : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(2)})
            for (int n = 1; n <= 4; ++n)
                for (int k = 0; k <= 5; ++k)
                    for (const auto& lam : partitions_of(k, n))
                        cb.check(hl_expand(lam, t, n) == hl_symmetrization_oracle(lam, t, n), [&] {
                            return "P_" + format_index(lam.parts()) + " at t=" + to_string(t) + ", n=" + std::to_string(n);
                        });
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("t0-is-schur");
        for (int k = 0; k <= 6; ++k)
            for (const auto& lam : partitions_of(k)) {
                int n = std::max(k, 1);
                cb.check(hl_expand(lam, Rational(0), n) == schur(lam, n),
                         [&] { return "P_" + format_index(lam.parts()) + "(t=0) != s"; });
            }
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("schur-P-integral");
        cb.guard([&] {
            std::vector<Partition> strict;
            for (int k = 0; k <= 4; ++k)
                for (const auto& p : partitions_of(k))
                    if (p.is_strict()) strict.push_back(p);
            for (const auto& a : strict)
                for (const auto& c : strict) {
                    if (a.size() + c.size() > 7) continue;
                    CoeffMap r = schur_p_structure(a, c);
                    for (const auto& [nu, v] : r)
                        cb.check(is_integral(v), [&] {
                            return "P_" + format_index(a.parts()) + " P_" + format_index(c.parts()) + " has " +
                                   to_string(v) + " at " + format_index(nu);
                        });
                }
        });
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

// f_lambda[g_mu] in n variables by substituting g's monomials into the
// explicit polynomial of f.
inline SparsePoly plethysm_by_substitution(SymBasis fb, const Partition& lambda, SymBasis gb, const Partition& mu, int n) {
    std::vector<Exponent> ys = monomial_multiset(expand_classic(gb, mu, n), default_plethysm_variable_bound);
    SparsePoly out(n);
    if (ys.empty()) {
        if (lambda.size() == 0) out.add_term(Exponent(static_cast<std::size_t>(n), 0), 1);
        return out;
    }
    SparsePoly f = expand_classic(fb, lambda, static_cast<int>(ys.size()));
    for (const auto& [e, c] : f.terms()) {
        Exponent x(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                for (int v = 0; v < n; ++v) x[static_cast<std::size_t>(v)] += e[i] * ys[i][static_cast<std::size_t>(v)];
        out.add_term(x, c);
    }
    return out;
}

inline std::vector<CaseResult> suite_plethysm(int jobs = 1) {
    std::vector<CaseResult> out;
    const std::vector<SymBasis> all{SymBasis::m, SymBasis::p, SymBasis::e, SymBasis::h, SymBasis::s};
    {
        CaseBuilder cb("substitution-identities");
        cb.guard([&] {
            for (int n = 2; n <= 4; ++n)
                for (auto b : {SymBasis::s, SymBasis::e, SymBasis::h}) {
                    Partition two{2};
                    CoeffMap f = strip_zeros(to_monomial_basis(b, two, n));
                    CoeffMap left = strip_zeros(plethysm_monomial_coeffs(b, two, SymBasis::p, Partition{1}, n));
                    CoeffMap right = strip_zeros(plethysm_monomial_coeffs(SymBasis::p, Partition{1}, b, two, n));
                    cb.check(left == f, [&] { return basis_name(b) + "_2[p_1] != " + basis_name(b) + "_2 at n=" + std::to_string(n); });
                    cb.check(right == f, [&] { return "p_1[" + basis_name(b) + "_2] != " + basis_name(b) + "_2 at n=" + std::to_string(n); });
                }
            CoeffMap p22 = strip_zeros(plethysm_monomial_coeffs(SymBasis::p, Partition{2}, SymBasis::p, Partition{2}, 3));
            cb.check(p22 == strip_zeros(to_monomial_basis(SymBasis::p, Partition{4}, 3)), [&] { return "p_2[p_2] = " + format_map(p22); });
            CoeffMap e2p2 = strip_zeros(plethysm_monomial_coeffs(SymBasis::e, Partition{2}, SymBasis::p, Partition{2}, 4));
            cb.check(e2p2 == CoeffMap{{{2, 2}, Rational(1)}}, [&] { return "e_2[p_2] = " + format_map(e2p2); });
        });
        out.push_back(cb.done());
    }
    struct One {
        bool ok = true;
        std::string detail;
    };
    auto pair_task = [](SymBasis fb, Partition lam, SymBasis gb, Partition mu, int n) {
        return [=]() -> One {
            try {
                std::string where = basis_name(fb) + "_" + format_index(lam.parts()) + "[" + basis_name(gb) + "_" +
                                    format_index(mu.parts()) + "] n=" + std::to_string(n);
                SparsePoly direct = plethysm_by_substitution(fb, lam, gb, mu, n);
                CoeffMap dm = strip_zeros(plethysm_monomial_coeffs(fb, lam, gb, mu, n));
                CoeffMap om = strip_zeros(monomial_coefficients(direct));
                if (dm != om) return {false, where + ": monomial coefficients " + format_map(dm) + " vs " + format_map(om)};
                const int d = lam.size() * mu.size();
                CoeffMap ds = strip_zeros(plethysm_schur_coeffs(fb, lam, gb, mu, std::max(d, n)));
                CoeffMap os = strip_zeros(extract_in_basis(direct, SymBasis::s));
                // in n variables only Schur functions with at most n rows survive
                CoeffMap visible;
                for (const auto& [nu, c] : ds)
                    if (static_cast<int>(nu.size()) <= n) visible[nu] = c;
                if (visible != os) return {false, where + ": Schur coefficients " + format_map(visible) + " vs " + format_map(os)};
                return {};
            } catch (const std::exception& e) {
                return {false, std::string("exception: ") + e.what()};
            }
        };
    };
    {
        std::vector<std::function<One()>> tasks;
        for (auto fb : all)
            for (auto gb : all)
                for (int i = 1; i <= 2; ++i)
                    for (int j = 1; j <= 2; ++j)
                        for (const auto& lam : partitions_of(i))
                            for (const auto& mu : partitions_of(j)) tasks.push_back(pair_task(fb, lam, gb, mu, 4));
        CaseBuilder cb("oracle-all-pairs");
        for (const auto& r : run_parallel(tasks, jobs)) cb.check(r.ok, [&] { return r.detail; });
        out.push_back(cb.done());
    }
    {
        std::vector<std::function<One()>> tasks;
        for (auto fb : {SymBasis::s, SymBasis::h})
            for (auto gb : {SymBasis::s, SymBasis::h})
                for (int i = 1; i <= 3; ++i)
                    for (int j = 1; j <= 3; ++j)
                        for (const auto& lam : partitions_of(i))
                            for (const auto& mu : partitions_of(j)) tasks.push_back(pair_task(fb, lam, gb, mu, 4));
        CaseBuilder cb("oracle-s-h-size-3");
        for (const auto& r : run_parallel(tasks, jobs)) cb.check(r.ok, [&] { return r.detail; });
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("symmetric-and-homogeneous");
        cb.guard([&] {
            for (auto fb : all)
                for (auto gb : all)
                    for (const auto& lam : partitions_of(2))
                        for (const auto& mu : partitions_of(2)) {
                            CoeffMap m = strip_zeros(plethysm_monomial_coeffs(fb, lam, gb, mu, 4));
                            for (const auto& [nu, c] : m) cb.check(index_size(nu) == 4, [&] { return "degree of " + format_index(nu); });
                        }
        });
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

inline std::vector<CaseResult> suite_bridge() {
    std::vector<CaseResult> out;
    const std::vector<SymBasis> all{SymBasis::m, SymBasis::p, SymBasis::e, SymBasis::h, SymBasis::s};
    for (auto qb : {QBasis::F, QBasis::M}) {
        CaseBuilder cb(std::string("round-trip-") + basis_name(qb));
        cb.guard([&] {
            for (auto b : all)
                for (int d = 1; d <= 5; ++d)
                    for (const auto& lam : partitions_of(d)) {
                        SparsePoly p = expand_classic(b, lam, d);
                        CoeffMap q = extract_in_basis(p, qb);
                        CoeffMap got = strip_zeros(schur_from_qsym(q, qb, d));
                        CoeffMap want = strip_zeros(extract_in_basis(p, SymBasis::s));
                        cb.check(got == want, [&] {
                            return basis_name(b) + "_" + format_index(lam.parts()) + ": " + format_map(got) + " vs " + format_map(want);
                        });
                    }
        });
        out.push_back(cb.done());
    }
    {
        CaseBuilder cb("rejects-non-symmetric");
        try {
            schur_from_qsym({{{2, 1}, Rational(1)}}, QBasis::M);
            cb.check(false, [] { return "M_21 was accepted"; });
        } catch (const std::domain_error& e) {
            std::string msg = e.what();
            cb.check(msg.find("x^(1,2,0)") != std::string::npos && msg.find("x^(2,1,0)") != std::string::npos,
                     [&] { return "message does not name the pair: " + msg; });
        }
        out.push_back(cb.done());
    }
    return out;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"paper-examples", "mobius",  "unitriangular", "pipeline-vs-oracle",
                                                "hall-littlewood", "plethysm", "bridge"};
    return names;
}

inline Report run_suite(const std::string& name, int jobs = 1) {
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    r.suite = name;
    if (name == "paper-examples") r.cases = suite_paper_examples();
    else if (name == "mobius") r.cases = suite_mobius();
    else if (name == "unitriangular") r.cases = suite_unitriangular();
    else if (name == "pipeline-vs-oracle") r.cases = suite_pipeline_vs_oracle(jobs);
    else if (name == "hall-littlewood") r.cases = suite_hall_littlewood();
    else if (name == "plethysm") r.cases = suite_plethysm(jobs);
    else if (name == "bridge") r.cases = suite_bridge();
    else throw std::invalid_argument("unknown suite '" + name + "'");
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace structcon
