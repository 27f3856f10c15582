#include "structcon/bridge.hpp"
#include "structcon/core.hpp"
#include "structcon/hall_littlewood.hpp"
#include "structcon/io.hpp"
#include "structcon/oracle.hpp"
#include "structcon/plethysm.hpp"
#include "structcon/polybases.hpp"
#include "structcon/posets.hpp"
#include "structcon/qsym.hpp"
#include "structcon/symfn.hpp"
#include "structcon/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

using namespace structcon;

namespace {

struct Options {
    std::string basis, index, perm, code, t, format = "text", mode = "backsub";
    std::string poset, x, y, a, b, f, flambda, g, gmu, out = "schur", input = "-", suite;
    int nvars = -1, degree = -1, jobs = 1;
    bool inverse = false, oracle = false;
};

std::optional<Rational> parameter(const Options& o) {
    if (o.t.empty()) return std::nullopt;
    return parse_rational(o.t);
}

InversionMode mode_of(const Options& o) {
    if (o.mode == "chains") return InversionMode::chains;
    if (o.mode == "backsub") return InversionMode::backsub;
    throw std::invalid_argument("--mode must be chains or backsub");
}

void emit(const Options& o, const CoeffMap& m) {
    if (o.format == "json") std::cout << coeffs_json(m).dump() << "\n";
    else if (o.format == "csv") std::cout << coeffs_csv(m);
    else
        for (const auto& k : canonical_keys(m))
            if (m.at(k) != 0) std::cout << "(" << format_index(k) << ")\t" << to_string(m.at(k)) << "\n";
}

void emit(const Options& o, const SparsePoly& p) {
    if (o.format == "json") std::cout << poly_json(p).dump() << "\n";
    else if (o.format == "csv") std::cout << poly_csv(p);
    else std::cout << p.to_string() << "\n";
}

void emit(const Options& o, const TransitionMatrix& m) {
    if (o.format == "json") std::cout << transition_json(m).dump() << "\n";
    else if (o.format == "csv") std::cout << transition_csv(m);
    else {
        Json j = transition_json(m);
        for (const auto& e : j.at("entries"))
            std::cout << "(" << format_index(index_from_json(e.at("row"))) << ") -> ("
                      << format_index(index_from_json(e.at("col"))) << ")\t" << e.at("num").get<std::string>()
                      << (e.at("den") == "1" ? "" : "/" + e.at("den").get<std::string>()) << "\n";
    }
}

Index basis_index(const Options& o, const AnyBasis& b) {
    int given = !o.index.empty() + !o.perm.empty() + !o.code.empty();
    if (given != 1) throw std::invalid_argument("give exactly one of --index, --perm, --code");
    if (!o.index.empty()) return parse_index(o.index);
    auto pb = std::get_if<PBasis>(&b);
    if (!pb || (*pb != PBasis::schubert && *pb != PBasis::grothendieck))
        throw std::invalid_argument("--perm and --code only apply to schubert and grothendieck");
    if (!o.code.empty()) return parse_index(o.code);
    // code of the full one-line word, so 2143 gives 1,0,1,0
    Permutation w = Permutation::parse(o.perm);
    std::size_t len = o.perm.find(',') == std::string::npos ? o.perm.size() : parse_index(o.perm).size();
    Index c = lehmer_code(w, static_cast<int>(std::max<std::size_t>(len, 1))).parts();
    return c;
}

int cmd_expand(const Options& o) {
    AnyBasis b = parse_any_basis(o.basis, parameter(o));
    Index idx = basis_index(o, b);
    if (std::holds_alternative<PBasis>(b)) {
        int n = o.nvars < 0 ? static_cast<int>(idx.size()) : o.nvars;
        if (n < static_cast<int>(idx.size())) throw std::invalid_argument("--nvars is smaller than the index length");
        emit(o, oracle_basis_poly(b, idx, n));
        return 0;
    }
    int n = o.nvars < 0 ? std::max(index_size(idx), 1) : o.nvars;
    if (std::holds_alternative<SymBasis>(b) || std::holds_alternative<HLBasis>(b)) {
        if (!std::is_sorted(idx.begin(), idx.end(), std::greater<int>()) || std::count(idx.begin(), idx.end(), 0))
            throw std::invalid_argument("index " + o.index + " is not a partition");
        if (auto h = std::get_if<HLBasis>(&b)) {
            emit(o, h->t == -1 ? schur_p_expand(Partition(idx), n) : hl_expand(Partition(idx), h->t, n));
            return 0;
        }
    }
    emit(o, oracle_basis_poly(b, idx, n));
    return 0;
}

int cmd_transition(const Options& o) {
    AnyBasis b = parse_any_basis(o.basis, parameter(o));
    if (o.degree < 0) throw std::invalid_argument("--degree is required");
    const int k = o.degree;
    const int n = o.nvars < 0 ? std::max(k, 1) : o.nvars;
    InversionMode mode = mode_of(o);
    auto pick = [&](const TransitionMatrix& fwd, const TransitionMatrix& inv) { emit(o, o.inverse ? inv : fwd); };
    if (auto s = std::get_if<SymBasis>(&b)) {
        if (*s != SymBasis::s) throw std::domain_error("only the Schur basis has a triangular transition to m");
        const auto& d = kostka_data(k, n, mode);
        pick(*d.kostka, *d.inverse);
    } else if (auto h = std::get_if<HLBasis>(&b)) {
        const auto& d = hl_data(k, n, h->t, mode);
        pick(*d.to_m, *d.inverse);
    } else if (auto q = std::get_if<QBasis>(&b)) {
        if (*q == QBasis::M) throw std::domain_error("M is the target basis");
        const auto& d = qsym_data(*q, k, n, mode);
        pick(*d.to_M, *d.inverse);
    } else {
        PBasis pb = std::get<PBasis>(b);
        if (is_homogeneous(pb)) {
            const auto& d = poly_data(pb, n, k, mode);
            pick(*d.to_monomials, *d.inverse);
        } else {
            std::vector<Index> seeds;
            for (const auto& a : weak_compositions_of(n, k)) seeds.push_back(a.parts());
            TransitionMatrix fwd = pbasis_closure_transition(pb, seeds);
            pick(fwd, o.inverse ? invert_unitriangular(fwd, mode) : fwd);
        }
    }
    return 0;
}

int cmd_mobius(const Options& o) {
    Index x = parse_index(o.x), y = parse_index(o.y);
    const int k = index_size(x);
    if (index_size(y) != k) throw std::invalid_argument("--x and --y have different sizes");
    Poset p = [&] {
        int len = static_cast<int>(std::max(x.size(), y.size()));
        int n = o.nvars < 0 ? std::max(len, 1) : o.nvars;
        if (o.poset == "dominance-partitions") return Poset::dominance_partitions(k);
        if (o.poset == "dominance-compositions") return Poset::dominance_strong_compositions(o.nvars < 0 ? k : n, k);
        if (o.poset == "dominance-prime") return Poset::dominance_prime(o.nvars < 0 ? k : n, k);
        if (o.poset == "dominance-weak") return Poset::dominance_weak(n, k);
        if (o.poset == "lehmer") return Poset::lehmer(n, k);
        throw std::invalid_argument("unknown poset '" + o.poset +
                                    "' (dominance-partitions, dominance-compositions, dominance-prime, dominance-weak, lehmer)");
    }();
    if (!p.find(x) || !p.find(y)) throw std::invalid_argument("--x or --y is not an element of " + p.name());
    MobiusSplit s = mobius_split(p, p.index_of(x), p.index_of(y));
    if (o.format == "json")
        std::cout << Json{{"poset", p.name()}, {"mobius", s.value().get_str()}, {"even_chains", s.plus.get_str()},
                          {"odd_chains", s.minus.get_str()}}
                         .dump()
                  << "\n";
    else if (o.format == "csv")
        std::cout << "mobius,even_chains,odd_chains\n" << s.value() << "," << s.plus << "," << s.minus << "\n";
    else std::cout << s.value() << "\n";
    return 0;
}

int cmd_mult(const Options& o) {
    AnyBasis b = parse_any_basis(o.basis, parameter(o));
    Index a = parse_index(o.a), c = parse_index(o.b);
    if (o.oracle) {
        emit(o, oracle_structure(b, a, c));
        return 0;
    }
    InversionMode mode = mode_of(o);
    if (auto s = std::get_if<SymBasis>(&b)) emit(o, structure_constants_classic(*s, Partition(a), Partition(c), o.nvars, mode));
    else if (auto q = std::get_if<QBasis>(&b)) emit(o, qsym_structure(*q, a, c, o.nvars, mode));
    else if (auto h = std::get_if<HLBasis>(&b))
        emit(o, h->t == -1 ? schur_p_structure(Partition(a), Partition(c), mode)
                           : hl_structure(Partition(a), Partition(c), h->t, mode));
    else emit(o, poly_structure(std::get<PBasis>(b), a, c, mode));
    return 0;
}

int cmd_plethysm(const Options& o) {
    SymBasis fb = parse_sym_basis(o.f), gb = parse_sym_basis(o.g);
    Partition lam(parse_index(o.flambda)), mu(parse_index(o.gmu));
    int n = o.nvars < 0 ? std::max(lam.size() * mu.size(), 1) : o.nvars;
    if (o.out == "schur") emit(o, plethysm_schur_coeffs(fb, lam, gb, mu, n, default_plethysm_variable_bound, mode_of(o)));
    else if (o.out == "monomial") emit(o, plethysm_monomial_coeffs(fb, lam, gb, mu, n));
    else throw std::invalid_argument("--out must be schur or monomial");
    return 0;
}

int cmd_bridge(const Options& o) {
    QBasis qb = parse_qbasis(o.basis);
    std::string text;
    if (o.input == "-") text.assign(std::istreambuf_iterator<char>(std::cin), {});
    else {
        std::ifstream in(o.input);
        if (!in) throw std::invalid_argument("cannot read " + o.input);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("input is not JSON: ") + e.what());
    }
    emit(o, schur_from_qsym(coeffs_from_json(j), qb, o.nvars, mode_of(o)));
    return 0;
}

int cmd_verify(const Options& o) {
    if (o.suite.empty()) throw std::invalid_argument("--suite must name one of the suites");
    std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    bool ok = true;
    Json all = Json::array();
    for (const auto& name : names) {
        Report r = run_suite(name, o.jobs);
        ok = ok && r.passed();
        if (o.format == "json") all.push_back(report_json(r));
        else std::cout << r.to_text();
    }
    if (o.format == "json") std::cout << (all.size() == 1 ? all[0] : all).dump() << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure constants of combinatorial bases"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };
    auto basis_opts = [&](CLI::App* c) {
        c->add_option("--basis", o.basis, "basis name")->required();
        c->add_option("--nvars", o.nvars, "number of variables");
        c->add_option("--t", o.t, "Hall-Littlewood parameter p/q");
        c->add_option("--mode", o.mode, "inversion: chains or backsub");
        fmt(c);
    };

    auto* expand = app.add_subcommand("expand", "basis element as a polynomial");
    basis_opts(expand);
    expand->add_option("--index", o.index, "comma-separated index");
    expand->add_option("--perm", o.perm, "permutation in one-line notation");
    expand->add_option("--code", o.code, "Lehmer code");

    auto* transition = app.add_subcommand("transition", "transition matrix to the monomial basis");
    basis_opts(transition);
    transition->add_option("--degree", o.degree, "homogeneous degree")->required();
    transition->add_flag("--inverse", o.inverse, "print the inverse matrix");

    auto* mob = app.add_subcommand("mobius", "Mobius function of a poset interval");
    mob->add_option("--poset", o.poset, "poset name")->required();
    mob->add_option("--x", o.x, "lower element")->required();
    mob->add_option("--y", o.y, "upper element")->required();
    mob->add_option("--nvars", o.nvars, "number of parts");
    fmt(mob);

    auto* mult = app.add_subcommand("mult", "structure constants of a product");
    basis_opts(mult);
    mult->add_option("--a", o.a, "first index")->required();
    mult->add_option("--b", o.b, "second index")->required();
    mult->add_flag("--oracle", o.oracle, "use brute-force extraction");
    mult->add_option("--jobs", o.jobs, "worker threads");

    auto* pl = app.add_subcommand("plethysm", "plethysm coefficients");
    pl->add_option("--f", o.f, "outer basis")->required();
    pl->add_option("--flambda", o.flambda, "outer index")->required();
    pl->add_option("--g", o.g, "inner basis")->required();
    pl->add_option("--gmu", o.gmu, "inner index")->required();
    pl->add_option("--nvars", o.nvars, "number of variables");
    pl->add_option("--out", o.out, "schur or monomial");
    pl->add_option("--mode", o.mode, "inversion: chains or backsub");
    fmt(pl);

    auto* br = app.add_subcommand("bridge", "Schur expansion from an F or M expansion");
    br->add_option("--basis", o.basis, "F or M")->required();
    br->add_option("--input", o.input, "JSON file, - for stdin");
    br->add_option("--nvars", o.nvars, "number of variables");
    br->add_option("--mode", o.mode, "inversion: chains or backsub");
    fmt(br);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", o.suite, "suite name or all")->required();
    ver->add_option("--jobs", o.jobs, "worker threads");
    fmt(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (o.jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
        if (*expand) return cmd_expand(o);
        if (*transition) return cmd_transition(o);
        if (*mob) return cmd_mobius(o);
        if (*mult) return cmd_mult(o);
        if (*pl) return cmd_plethysm(o);
        if (*br) return cmd_bridge(o);
        if (*ver) return cmd_verify(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
