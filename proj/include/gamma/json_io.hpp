#pragma once

// JSON wire formats.
//
// Ring element:   {"m": 3, "terms": [{"h": [5,1,1,1], "e": [3,3], "coeff": "1"}, ...]}
//   terms in canonical order, coefficients as decimal strings, no zero
//   coefficients.  element_from_json(element_to_json(x)) == x.
//
// Multiplicity table:  {"p": 3, "entries": [{"base": "2,1|3", "summand": "2,1|3", "mult": 1}, ...]}
//   base and summand in pair text form; mult a non-negative integer (a
//   decimal string is accepted for large values).

#include "gamma/core.hpp"
#include "gamma/pairs.hpp"
#include "gamma/rep.hpp"
#include "gamma/ring.hpp"

#include "json.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gamma_m {

using json = nlohmann::ordered_json;

namespace detail {

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument(where + ": expected an array of parts");
    std::vector<int> parts;
    for (const auto& item : j) {
        if (!item.is_number_integer())
            throw std::invalid_argument(where + ": parts must be integers");
        parts.push_back(item.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(where + ": " + e.what());
    }
}

inline Int int_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        const std::string& text = j.get_ref<const std::string&>();
        try {
            return Int(text);
        } catch (const std::exception&) {
            throw std::invalid_argument(where + ": malformed integer '" + text + "'");
        }
    }
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument(where + ": expected an integer or decimal string");
}

}  // namespace detail

inline json element_to_json(const RingElement& a) {
    json terms = json::array();
    for (const auto& [key, coeff] : a.terms()) {
        json term;
        term["h"] = detail::partition_to_json(key.h);
        term["e"] = detail::partition_to_json(key.e);
        term["coeff"] = coeff.str();
        terms.push_back(std::move(term));
    }
    json out;
    out["m"] = a.modulus();
    out["terms"] = std::move(terms);
    return out;
}

inline RingElement element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("terms"))
        throw std::invalid_argument("element: expected {\"m\": ..., \"terms\": [...]}");
    if (!j["m"].is_number_integer() || j["m"].get<int>() <= 0)
        throw std::invalid_argument("element: m must be a positive integer");
    const int m = j["m"].get<int>();
    if (!j["terms"].is_array()) throw std::invalid_argument("element: terms must be an array");

    RingElement::TermMap terms;
    std::size_t index = 0;
    for (const auto& term : j["terms"]) {
        const std::string where = "element term " + std::to_string(index++);
        if (!term.is_object() || !term.contains("h") || !term.contains("e") ||
            !term.contains("coeff"))
            throw std::invalid_argument(where + ": expected h, e and coeff fields");
        Partition h = detail::partition_from_json(term["h"], where + " h");
        Partition e = detail::partition_from_json(term["e"], where + " e");
        Int coeff = detail::int_from_json(term["coeff"], where + " coeff");
        if (coeff == 0) throw std::invalid_argument(where + ": zero coefficient");
        BasisKey key = [&] {
            try {
                return BasisKey(std::move(h), std::move(e), m);
            } catch (const std::invalid_argument& ex) {
                throw std::invalid_argument(where + ": " + ex.what());
            }
        }();
        if (!terms.emplace(std::move(key), std::move(coeff)).second)
            throw std::invalid_argument(where + ": duplicate key");
    }
    return RingElement::from_terms(m, std::move(terms));
}

inline KostkaTable kostka_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("entries"))
        throw table_error("table: expected {\"p\": ..., \"entries\": [...]}");
    if (!j["p"].is_number_integer())
        throw table_error("table: p must be an integer");
    KostkaTable table = [&] {
        try {
            return KostkaTable(j["p"].get<int>());
        } catch (const std::invalid_argument& e) {
            throw table_error(std::string("table: ") + e.what());
        }
    }();
    if (!j["entries"].is_array()) throw table_error("table: entries must be an array");

    std::size_t index = 0;
    for (const auto& entry : j["entries"]) {
        const std::string where = "table entry " + std::to_string(index++);
        if (!entry.is_object() || !entry.contains("base") || !entry.contains("summand") ||
            !entry.contains("mult"))
            throw table_error(where + ": expected base, summand and mult fields");
        if (!entry["base"].is_string() || !entry["summand"].is_string())
            throw table_error(where + ": base and summand must be pair strings");
        try {
            PairPartition base = PairPartition::parse(entry["base"].get_ref<const std::string&>(),
                                                      table.prime());
            PairPartition summand = PairPartition::parse(
                entry["summand"].get_ref<const std::string&>(), table.prime());
            table.insert(base, summand, detail::int_from_json(entry["mult"], where + " mult"));
        } catch (const table_error&) {
            throw;
        } catch (const std::exception& e) {
            throw table_error(where + ": " + e.what());
        }
    }
    return table;
}

}  // namespace gamma_m
