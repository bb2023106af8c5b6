#pragma once

// JSON surfaces: matrix literals, tower configs, the cross-validation catalog,
// and serializers for every report type.

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "derivations.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "steinitz.hpp"
#include "subspace.hpp"
#include "tower.hpp"

namespace locmat {

using json = nlohmann::ordered_json;

/// Matrix literal: array of rows, each an array of field-element strings.
/// Bare JSON integers are accepted as well.
inline Matrix matrix_from_json(const FieldSpec& spec, const json& j)
{
    if (!j.is_array() || j.empty())
        throw ParseError("matrix literal must be a nonempty array of rows");
    const std::size_t n = j.size();
    std::vector<FieldElement> entries;
    entries.reserve(n * n);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw ParseError("matrix literal must be square");
        for (const auto& x : row) {
            if (x.is_string())
                entries.push_back(FieldElement::parse(spec, x.get<std::string>()));
            else if (x.is_number_integer())
                entries.push_back(FieldElement::from_int(spec, x.get<std::int64_t>()));
            else
                throw ParseError("matrix entries must be strings such as \"2/3\" or integers");
        }
    }
    return Matrix(spec, n, std::move(entries));
}

inline json matrix_to_json(const Matrix& a)
{
    json rows = json::array();
    for (std::size_t i = 1; i <= a.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= a.size(); ++j)
            row.push_back(a.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace detail {

inline const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline std::uint64_t require_nat(const json& j, const char* key)
{
    const auto& v = require(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw ParseError(std::string("'") + key + "' must be a natural number");
    return v.get<std::uint64_t>();
}

inline bool require_bool(const json& j, const char* key)
{
    const auto& v = require(j, key);
    if (!v.is_boolean())
        throw ParseError(std::string("'") + key + "' must be a boolean");
    return v.get<bool>();
}

} // namespace detail

/// {"field": "Q" | "Fp:3", "sizes": [3, 6, 12], "limit": "3*2^inf"}; "field" may be
/// omitted when a default is supplied, "limit" is optional.
inline Tower tower_from_json(const json& j, const std::optional<FieldSpec>& default_field = std::nullopt)
{
    std::optional<FieldSpec> field = default_field;
    if (j.is_object() && j.contains("field")) {
        const auto parsed = FieldSpec::parse(j.at("field").get<std::string>());
        if (field && *field != parsed)
            throw PreconditionError("tower field " + parsed.to_string() + " conflicts with " + field->to_string());
        field = parsed;
    }
    if (!field)
        throw ParseError("tower config needs a 'field'");

    const auto& raw = detail::require(j, "sizes");
    if (!raw.is_array())
        throw ParseError("'sizes' must be an array");
    std::vector<std::size_t> sizes;
    for (const auto& x : raw) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 1)
            throw ParseError("tower sizes must be positive integers");
        sizes.push_back(x.get<std::size_t>());
    }

    std::optional<SteinitzNumber> limit;
    if (j.contains("limit") && !j.at("limit").is_null())
        limit = SteinitzNumber::parse(j.at("limit").get<std::string>());
    return Tower(*field, std::move(sizes), std::move(limit));
}

inline json tower_to_json(const Tower& t)
{
    json j;
    j["field"] = t.spec().to_string();
    j["sizes"] = t.sizes();
    j["limit"] = t.declared_limit() ? json(t.declared_limit()->to_string()) : json(nullptr);
    return j;
}

/// Catalog: [{"name", "char", "tower": {...}, "expected": {"quotient_simple", "der_simple"}}, ...]
inline std::vector<CatalogEntry> catalog_from_json(const json& j)
{
    if (!j.is_array())
        throw ParseError("catalog must be a JSON array");
    std::vector<CatalogEntry> out;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
        const auto& e = j[idx];
        const auto c = detail::require_nat(e, "char");
        const auto& expected = detail::require(e, "expected");
        std::string name = e.contains("name") ? e.at("name").get<std::string>() : "entry-" + std::to_string(idx + 1);
        out.push_back({std::move(name), c, tower_from_json(detail::require(e, "tower"), FieldSpec::of_characteristic(c)),
                       detail::require_bool(expected, "quotient_simple"), detail::require_bool(expected, "der_simple")});
    }
    return out;
}

inline json to_json(const Exponent& e)
{
    return e.is_infinite() ? json("inf") : json(e.value());
}

inline json to_json(const SimplicityVerdict& v)
{
    json j;
    j["subject"] = to_string(v.subject);
    j["simple"] = v.simple;
    j["reason"] = to_string(v.reason.branch);
    j["char"] = v.reason.characteristic;
    j["k"] = v.reason.k ? json(*v.reason.k) : json(nullptr);
    return j;
}

/// {ambient_n, field, seed_count, all_generate, proper_ideal_dim} plus per-seed closures.
inline json to_json(const PglEvidence& ev)
{
    json j;
    j["ambient_n"] = ev.ambient_n;
    j["field"] = ev.field.to_string();
    j["seed_count"] = ev.seed_count;
    j["all_generate"] = ev.all_generate;
    j["proper_ideal_dim"] = ev.proper_ideal_dim ? json(*ev.proper_ideal_dim) : json(nullptr);
    j["char_divides_n"] = ev.char_divides_n;
    json closures = json::array();
    for (const auto& c : ev.closures)
        closures.push_back({{"seed", matrix_to_json(c.seed)}, {"closure_dim", c.closure_dim}, {"generates_all", c.generates_all}});
    j["closures"] = std::move(closures);
    return j;
}

inline json to_json(const Thm3Verdict& v)
{
    json j;
    j["p"] = v.p;
    j["k"] = v.k;
    j["m"] = v.m;
    j["block"] = v.block;
    j["multiplicity"] = v.multiplicity;
    j["witness_trace"] = v.witness_trace.to_string();
    j["lifted_trace"] = v.lifted_trace.to_string();
    j["rank_coefficients"] = v.rank_coefficients;
    j["rank_augmented"] = v.rank_augmented;
    j["feasible"] = v.feasible();
    return j;
}

/// Levels are reported 1-based.
inline json to_json(const NonmembershipReport& r)
{
    json j;
    j["p"] = r.p;
    j["k"] = r.k;
    j["base_level"] = r.base_level + 1;
    j["base_trace"] = r.base_trace.to_string();
    j["base_excluded"] = r.base_excluded;
    json levels = json::array();
    for (const auto& l : r.levels)
        levels.push_back({{"level", l.level + 1},
                          {"size", l.size},
                          {"multiplicity", l.multiplicity},
                          {"trace", l.trace.to_string()},
                          {"excluded", l.excluded}});
    j["levels"] = std::move(levels);
    j["pass"] = r.pass();
    return j;
}

inline json to_json(const AbsorptionReport& r)
{
    json j;
    j["p"] = r.p;
    j["from"] = r.from + 1;
    j["to"] = r.to + 1;
    j["ratio"] = r.ratio;
    std::size_t inside = 0;
    bool traces_vanish = true;
    for (const auto& u : r.units) {
        inside += u.contained ? 1 : 0;
        traces_vanish = traces_vanish && u.trace.is_zero();
    }
    j["units_checked"] = r.units.size();
    j["units_contained"] = inside;
    j["lifted_traces_vanish"] = traces_vanish;
    j["contained"] = r.contained;
    return j;
}

inline json to_json(const CrossValidation& cv)
{
    json j;
    j["char"] = cv.characteristic;
    j["tower"] = tower_to_json(cv.tower);
    j["steinitz"] = cv.steinitz.to_string();
    j["steinitz_source"] = cv.from_declared_limit ? "declared_limit" : "tower";
    j["quotient"] = to_json(cv.quotient);
    j["der"] = to_json(cv.der);
    if (cv.nonmembership)
        j["nonmembership"] = to_json(*cv.nonmembership);
    if (!cv.absorption.empty()) {
        json a = json::array();
        for (const auto& r : cv.absorption)
            a.push_back(to_json(r));
        j["absorption"] = std::move(a);
    }
    if (!cv.decomposition.empty()) {
        json d = json::array();
        for (const auto& c : cv.decomposition)
            d.push_back({{"level", c.level + 1}, {"size", c.size}, {"universal", c.universal}});
        j["decomposition"] = std::move(d);
    }
    j["pass"] = cv.pass;
    return j;
}

} // namespace locmat
