#pragma once

#include <string>

#include <json.hpp>

#include "pjet/bound.hpp"
#include "pjet/chow.hpp"
#include "pjet/errors.hpp"
#include "pjet/jetspace.hpp"

namespace pjet {

// All emitted documents use insertion-ordered JSON so output is
// byte-deterministic. Big integers are serialized as decimal strings;
// consumers never need native big-integer support.
using Json = nlohmann::ordered_json;

inline Json to_json(const JetPresentation& pres) {
    Json doc;
    doc["p"] = pres.p;
    doc["r"] = pres.r;
    Json vars = Json::array();
    for (const Variable& v : pres.base_vars) vars.push_back(v.str());
    doc["base_vars"] = std::move(vars);
    Json slices = Json::array();
    for (const auto& slice : pres.slices) {
        Json one = Json::array();
        for (const Polynomial& g : slice) one.push_back(g.str());
        slices.push_back(std::move(one));
    }
    doc["generators"] = std::move(slices);
    return doc;
}

inline Json to_json(const BoundReport& report) {
    Json doc;
    doc["p"] = report.p;
    doc["n"] = report.n;
    doc["d"] = report.d;
    doc["interior"] = report.interior.str();
    doc["coset_constant"] = report.coset_constant.str();
    doc["translate_factor"] = report.translate_factor.str();
    doc["bound"] = report.bound.str();
    doc["warnings"] = report.warnings;
    doc["assumptions"] = report.assumptions;
    return doc;
}

inline Json to_json(const ChernSeries& series) {
    Json doc;
    doc["n"] = series.ambient().n;
    doc["truncation"] = series.truncation();
    Json symbols = Json::array();
    for (const DivisorSymbol& s : series.ambient().symbols) symbols.push_back(s.name);
    doc["symbols"] = std::move(symbols);
    Json comps = Json::array();
    for (unsigned i = 0; i <= series.truncation(); ++i) comps.push_back(series.component(i).str());
    doc["components"] = std::move(comps);
    return doc;
}

inline Json to_json(const IntersectionTable& table) {
    Json doc;
    doc["n"] = table.ambient().n;
    Json symbols = Json::array();
    for (const DivisorSymbol& s : table.ambient().symbols) symbols.push_back(s.name);
    doc["symbols"] = std::move(symbols);
    Json numbers = Json::object();
    for (const auto& [m, v] : table.numbers()) {
        numbers[detail::sym_monomial_str(table.ambient(), m)] = v.str();
    }
    doc["numbers"] = std::move(numbers);
    return doc;
}

namespace detail {

inline BigInt bigint_from_json(const Json& v, const std::string& what) {
    if (v.is_number_integer()) {
        return BigInt(v.get<long long>());
    }
    if (v.is_number_unsigned()) {
        return BigInt(v.get<unsigned long long>());
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start ||
            s.find_first_not_of("0123456789", start) != std::string::npos) {
            throw InvalidInput(what + ": '" + s + "' is not a decimal integer");
        }
        return BigInt(s);
    }
    throw InvalidInput(what + ": expected an integer or a decimal string");
}

} // namespace detail

// {"n":…, "symbols":[…], "numbers":{"theta^3":6, …}} with values as JSON
// integers or decimal strings.
inline IntersectionTable intersection_table_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("symbols") ||
        !doc.contains("numbers")) {
        throw InvalidInput("intersection table: expected keys n, symbols, numbers");
    }
    if (!doc["n"].is_number_unsigned() || !doc["symbols"].is_array() ||
        !doc["numbers"].is_object()) {
        throw InvalidInput("intersection table: malformed n, symbols, or numbers");
    }
    std::vector<DivisorSymbol> symbols;
    for (const auto& s : doc["symbols"]) {
        if (!s.is_string()) throw InvalidInput("intersection table: symbols must be strings");
        symbols.emplace_back(s.get<std::string>());
    }
    AmbientSpec ambient(doc["n"].get<unsigned>(), std::move(symbols));
    IntersectionTable table(ambient);
    for (const auto& [key, value] : doc["numbers"].items()) {
        table.set(key, detail::bigint_from_json(value, "intersection number '" + key + "'"));
    }
    return table;
}

} // namespace pjet
