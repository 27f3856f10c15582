#pragma once

// JSON and CSV serialization. Rationals are {"num","den"} decimal strings;
// maps and polynomials are arrays in canonical index order, so output is
// stable and re-serializes byte for byte.

#include "structcon/core.hpp"
#include "structcon/poly.hpp"
#include "structcon/posets.hpp"
#include "structcon/rational.hpp"
#include "structcon/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace structcon {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) {
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_object() && j.contains("num") && j.contains("den")) {
        auto part = [&](const char* key) {
            const Json& v = j.at(key);
            return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>());
        };
        return parse_rational(part("num") + "/" + part("den"));
    }
    throw std::invalid_argument("cannot read a rational from " + j.dump());
}

inline Json index_json(const Index& a) {
    Json arr = Json::array();
    for (int v : a) arr.push_back(v);
    return arr;
}

inline Index index_from_json(const Json& j) {
    if (j.is_string()) return parse_index(j.get<std::string>());
    if (!j.is_array()) throw std::invalid_argument("index must be an array or a comma-separated string");
    Index out;
    for (const auto& v : j) {
        if (!v.is_number_integer() || v.get<long>() < 0) throw std::invalid_argument("index entries must be nonnegative integers");
        out.push_back(v.get<int>());
    }
    return out;
}

inline Json coeffs_json(const CoeffMap& m) {
    Json terms = Json::array();
    for (const auto& k : canonical_keys(m)) {
        if (m.at(k) == 0) continue;
        terms.push_back(Json{{"index", index_json(k)}, {"coeff", rational_json(m.at(k))}});
    }
    return terms;
}

// Accepts the array form written by coeffs_json, an object with a "terms"
// array, or an object mapping "1,2" to a rational.
inline CoeffMap coeffs_from_json(const Json& j) {
    CoeffMap out;
    const Json* arr = &j;
    if (j.is_object() && j.contains("terms")) arr = &j.at("terms");
    if (arr->is_array()) {
        for (const auto& t : *arr) add_to(out, index_from_json(t.at("index")), rational_from_json(t.at("coeff")));
        return out;
    }
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) add_to(out, parse_index(k), rational_from_json(v));
        return out;
    }
    throw std::invalid_argument("cannot read a coefficient map");
}

inline Json poly_json(const SparsePoly& p) {
    Json terms = Json::array();
    std::vector<Exponent> keys;
    for (const auto& [e, c] : p.terms()) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), CanonicalLess{});
    for (const auto& e : keys) terms.push_back(Json{{"exponent", index_json(e)}, {"coeff", rational_json(p.coeff(e))}});
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline Json transition_json(const TransitionMatrix& m) {
    const Poset& p = m.poset();
    Json entries = Json::array();
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return canonical_less(p.element(a), p.element(b)); });
    for (auto r : order) {
        std::vector<std::size_t> cols;
        for (const auto& [c, v] : m.row(r)) cols.push_back(c);
        std::sort(cols.begin(), cols.end(), [&](auto a, auto b) { return canonical_less(p.element(a), p.element(b)); });
        for (auto c : cols) {
            Rational v = m.get(r, c);
            entries.push_back(Json{{"row", index_json(p.element(r))},
                                   {"col", index_json(p.element(c))},
                                   {"num", v.get_num().get_str()},
                                   {"den", v.get_den().get_str()}});
        }
    }
    return Json{{"poset", p.name()}, {"entries", entries}};
}

inline Json report_json(const Report& r) {
    Json cases = Json::array();
    for (const auto& c : r.cases)
        cases.push_back(Json{{"id", c.id}, {"status", c.pass ? "pass" : "fail"}, {"checks", c.checks}, {"detail", c.detail}});
    return Json{{"suite", r.suite}, {"cases", cases}};
}

// ---------------------------------------------------------------------------
// CSV: a header line, then one quoted index and "num/den" per line.

inline std::string coeffs_csv(const CoeffMap& m) {
    std::ostringstream os;
    os << "index,coeff\n";
    for (const auto& k : canonical_keys(m))
        if (m.at(k) != 0) os << '"' << format_index(k) << "\"," << m.at(k).get_num() << '/' << m.at(k).get_den() << "\n";
    return os.str();
}

inline std::string poly_csv(const SparsePoly& p) {
    std::vector<Exponent> keys;
    for (const auto& [e, c] : p.terms()) keys.push_back(e);
    std::sort(keys.begin(), keys.end(), CanonicalLess{});
    std::ostringstream os;
    os << "exponent,coeff\n";
    for (const auto& e : keys) {
        Rational c = p.coeff(e);
        os << '"' << format_index(e) << "\"," << c.get_num() << '/' << c.get_den() << "\n";
    }
    return os.str();
}

inline std::string transition_csv(const TransitionMatrix& m) {
    std::ostringstream os;
    os << "row,col,coeff\n";
    Json j = transition_json(m);
    for (const auto& e : j.at("entries"))
        os << '"' << format_index(index_from_json(e.at("row"))) << "\",\"" << format_index(index_from_json(e.at("col")))
           << "\"," << e.at("num").get<std::string>() << '/' << e.at("den").get<std::string>() << "\n";
    return os.str();
}

}  // namespace structcon
