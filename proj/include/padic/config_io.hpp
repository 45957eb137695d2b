#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "classical.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "valuation.hpp"
#include "welch.hpp"

namespace padic {

using Json = nlohmann::json;

/// Raised for malformed input documents; the message carries a field path.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Exact scalar strings. Rationals render as "a" / "a/b" (reduced, sign on the
// numerator); absolute values as "p^e", with the literal "0" for zero. Both
// parse back bit-for-bit.
// ---------------------------------------------------------------------------

inline std::string render_absvalue(const AbsValue& a) { return a.str(); }

inline AbsValue parse_absvalue(const std::string& s, std::uint64_t p) {
    if (s == "0") return AbsValue::zero(p);
    std::size_t caret = s.find('^');
    if (caret == std::string::npos) {
        throw ConfigError("parse_absvalue: expected \"p^e\" or \"0\", got \"" + s + "\"");
    }
    std::string base = s.substr(0, caret);
    std::string exp = s.substr(caret + 1);
    try {
        if (std::stoull(base) != p) {
            throw ConfigError("parse_absvalue: base " + base + " does not match p = " + std::to_string(p));
        }
        return AbsValue::power(p, std::stoll(exp));
    } catch (const std::invalid_argument&) {
        throw ConfigError("parse_absvalue: malformed \"" + s + "\"");
    } catch (const std::out_of_range&) {
        throw ConfigError("parse_absvalue: out of range \"" + s + "\"");
    }
}

// ---------------------------------------------------------------------------
// Frame configuration interchange:
//   {"p": <prime>, "d": <dim>, "vectors": [["1","0"], ["1/2","3"], ...]}
// ---------------------------------------------------------------------------

inline Json config_to_json(const FrameConfig& config) {
    Json vectors = Json::array();
    for (const Vector& v : config.vectors) {
        Json row = Json::array();
        for (const Rational& c : v.coords) row.push_back(to_string(c));
        vectors.push_back(std::move(row));
    }
    return Json{{"p", config.ctx.p()}, {"d", config.d}, {"vectors", std::move(vectors)}};
}

inline std::string render_config(const FrameConfig& config) { return config_to_json(config).dump(); }

inline FrameConfig config_from_json(const Json& doc) {
    if (!doc.is_object()) throw ConfigError("config: top-level document must be an object");
    for (const char* key : {"p", "d", "vectors"}) {
        if (!doc.contains(key)) throw ConfigError(std::string("config: missing field \"") + key + "\"");
    }
    if (!doc["p"].is_number_unsigned()) throw ConfigError("config: \"p\" must be a positive integer");
    std::uint64_t p = doc["p"].get<std::uint64_t>();
    if (!is_prime_u64(p)) throw ConfigError("config: p = " + std::to_string(p) + " is not prime");
    PrimeContext ctx(p);

    if (!doc["d"].is_number_unsigned() || doc["d"].get<std::uint64_t>() == 0) {
        throw ConfigError("config: \"d\" must be a positive integer");
    }
    std::size_t d = doc["d"].get<std::size_t>();

    const Json& rows = doc["vectors"];
    if (!rows.is_array() || rows.empty()) throw ConfigError("config: \"vectors\" must be a non-empty array");
    std::vector<Vector> vectors;
    vectors.reserve(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const Json& row = rows[j];
        std::string where = "vectors[" + std::to_string(j) + "]";
        if (!row.is_array()) throw ConfigError("config: " + where + " must be an array of rational strings");
        if (row.size() != d) {
            throw ConfigError("config: " + where + " has " + std::to_string(row.size()) +
                              " coordinates, expected d = " + std::to_string(d));
        }
        std::vector<Rational> coords;
        coords.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (!row[i].is_string()) {
                throw ConfigError("config: " + where + "[" + std::to_string(i) + "] must be a rational string");
            }
            try {
                coords.push_back(parse_rational(row[i].get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw ConfigError("config: " + where + "[" + std::to_string(i) + "]: " + e.what());
            }
        }
        vectors.push_back(Vector{ctx, std::move(coords)});
    }
    return FrameConfig(ctx, d, std::move(vectors));
}

inline FrameConfig parse_config(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

// ---------------------------------------------------------------------------
// Search specification document.
// ---------------------------------------------------------------------------

inline SearchMode parse_search_mode(const std::string& s) {
    if (s == "q1") return SearchMode::Q1;
    if (s == "q2") return SearchMode::Q2;
    if (s == "zauner") return SearchMode::Zauner;
    if (s == "zauner-strong") return SearchMode::ZaunerStrong;
    if (s == "equiangular") return SearchMode::Equiangular;
    throw ConfigError("search spec: unknown mode \"" + s +
                      "\" (expected q1 | q2 | zauner | zauner-strong | equiangular)");
}

inline SearchSpec search_spec_from_json(const Json& doc) {
    if (!doc.is_object()) throw ConfigError("search spec: top-level document must be an object");
    SearchSpec spec;
    for (const char* key : {"p", "d", "n", "mode"}) {
        if (!doc.contains(key)) throw ConfigError(std::string("search spec: missing field \"") + key + "\"");
    }
    if (!doc["p"].is_number_unsigned()) throw ConfigError("search spec: \"p\" must be a positive integer");
    spec.p = doc["p"].get<std::uint64_t>();
    if (!doc["d"].is_number_unsigned() || !doc["n"].is_number_unsigned()) {
        throw ConfigError("search spec: \"d\" and \"n\" must be positive integers");
    }
    spec.d = doc["d"].get<std::size_t>();
    spec.n = doc["n"].get<std::size_t>();
    if (!doc["mode"].is_string()) throw ConfigError("search spec: \"mode\" must be a string");
    spec.mode = parse_search_mode(doc["mode"].get<std::string>());

    if (doc.contains("height")) {
        if (!doc["height"].is_number_unsigned() || doc["height"].get<std::uint64_t>() == 0) {
            throw ConfigError("search spec: \"height\" must be a positive integer");
        }
        spec.height = doc["height"].get<unsigned>();
    }
    if (doc.contains("entries") && !(doc["entries"].is_string() && doc["entries"] == "auto")) {
        if (!doc["entries"].is_array()) {
            throw ConfigError("search spec: \"entries\" must be \"auto\" or an array of rational strings");
        }
        for (const Json& item : doc["entries"]) {
            if (!item.is_string()) throw ConfigError("search spec: entries must be rational strings");
            spec.entries.push_back(parse_rational(item.get<std::string>()));
        }
        if (spec.entries.empty()) throw ConfigError("search spec: explicit entry list is empty");
    }
    if (doc.contains("symmetry_pruning")) {
        if (!doc["symmetry_pruning"].is_boolean()) {
            throw ConfigError("search spec: \"symmetry_pruning\" must be a boolean");
        }
        spec.symmetry_pruning = doc["symmetry_pruning"].get<bool>();
    }
    if (doc.contains("limit")) {
        if (!doc["limit"].is_number_unsigned()) throw ConfigError("search spec: \"limit\" must be a nonnegative integer");
        spec.limit = doc["limit"].get<std::uint64_t>();
    }
    if (doc.contains("budget")) {
        if (doc["budget"].is_number_unsigned()) {
            spec.budget = Integer(static_cast<unsigned long>(doc["budget"].get<std::uint64_t>()));
        } else if (doc["budget"].is_string()) {
            spec.budget = Integer(doc["budget"].get<std::string>());
        } else {
            throw ConfigError("search spec: \"budget\" must be an integer or integer string");
        }
    }
    if (doc.contains("workers")) {
        if (!doc["workers"].is_number_unsigned() || doc["workers"].get<std::uint64_t>() == 0) {
            throw ConfigError("search spec: \"workers\" must be a positive integer");
        }
        spec.workers = doc["workers"].get<unsigned>();
    }
    if (doc.contains("a")) {
        if (!doc["a"].is_string()) throw ConfigError("search spec: \"a\" must be a rational string");
        spec.equi_a = parse_rational(doc["a"].get<std::string>());
    }
    if (doc.contains("gamma")) {
        if (!doc["gamma"].is_string()) throw ConfigError("search spec: \"gamma\" must be \"p^e\" or \"0\"");
        spec.equi_gamma = parse_absvalue(doc["gamma"].get<std::string>(), spec.p);
    }
    if (doc.contains("target_n")) {
        if (doc["target_n"].is_number_unsigned()) {
            spec.target_n = Integer(static_cast<unsigned long>(doc["target_n"].get<std::uint64_t>()));
        } else if (doc["target_n"].is_string()) {
            spec.target_n = Integer(doc["target_n"].get<std::string>());
        } else {
            throw ConfigError("search spec: \"target_n\" must be an integer or integer string");
        }
    }
    validate(spec);
    return spec;
}

inline SearchSpec parse_search_spec(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ConfigError(std::string("search spec: invalid JSON: ") + e.what());
    }
    return search_spec_from_json(doc);
}

inline Json search_spec_to_json(const SearchSpec& spec) {
    Json doc{{"p", spec.p},
             {"d", spec.d},
             {"n", spec.n},
             {"mode", to_string(spec.mode)},
             {"height", spec.height},
             {"symmetry_pruning", spec.symmetry_pruning},
             {"budget", spec.budget.get_str()},
             {"workers", spec.workers}};
    if (spec.entries.empty()) {
        doc["entries"] = "auto";
    } else {
        Json entries = Json::array();
        for (const Rational& q : spec.entries) entries.push_back(to_string(q));
        doc["entries"] = std::move(entries);
    }
    if (spec.limit != UINT64_MAX) doc["limit"] = spec.limit;
    if (spec.equi_a) doc["a"] = to_string(*spec.equi_a);
    if (spec.equi_gamma) doc["gamma"] = render_absvalue(*spec.equi_gamma);
    if (spec.target_n) doc["target_n"] = spec.target_n->get_str();
    return doc;
}

// ---------------------------------------------------------------------------
// Report serialization. Every exact quantity appears as its canonical string.
// ---------------------------------------------------------------------------

inline Json tightness_to_json(const TightnessReport& r) {
    Json doc{{"is_tight", r.is_tight}};
    if (r.is_tight) {
        doc["b"] = to_string(r.b);
    } else {
        doc["witness"] = Json{{"row", r.witness->row},
                              {"col", r.witness->col},
                              {"expected", to_string(r.witness->expected)},
                              {"found", to_string(r.witness->found)}};
    }
    return doc;
}

inline Json welch_to_json(const WelchReport& r) {
    Json doc{{"m", r.m}, {"precondition", tightness_to_json(r.precondition)}};
    if (!r.precondition.is_tight) return doc;
    doc["unit_inner"] = r.unit_inner;
    doc["diag_term"] = render_absvalue(r.diag_term);
    if (r.max_offdiag) {
        doc["max_offdiag"] = Json{{"j", r.max_offdiag->j},
                                  {"k", r.max_offdiag->k},
                                  {"value", render_absvalue(r.max_offdiag->value)}};
    } else {
        doc["max_offdiag"] = nullptr;
    }
    doc["lhs"] = render_absvalue(r.lhs);
    doc["rhs"] = render_absvalue(r.rhs);
    doc["holds"] = r.holds;
    doc["equality"] = r.equality;
    doc["b_is_zero"] = r.precondition.b == 0;
    return doc;
}

inline Json q_to_json(const QReport& r) {
    Json doc{{"question", r.with_norms ? "q2" : "q1"},
             {"unit_inner", r.unit_inner},
             {"tight", tightness_to_json(r.tight)},
             {"equality", r.equality},
             {"verdict", r.ok}};
    if (r.non_unit_index) doc["non_unit_index"] = *r.non_unit_index;
    if (r.with_norms) {
        doc["norms_ok"] = r.norms_ok;
        if (r.bad_norm_index) doc["bad_norm_index"] = *r.bad_norm_index;
    }
    if (r.welch) doc["welch"] = welch_to_json(*r.welch);
    return doc;
}

inline Json zauner_to_json(const ZaunerReport& r) {
    Json doc{{"form", r.strong ? "strong" : "standard"},
             {"d", r.d},
             {"target", render_absvalue(r.target)},
             {"target_interpretation", r.target_interpretation},
             {"unit_inner", r.cond_unit},
             {"tight", tightness_to_json(r.tight)},
             {"b_is_zero", r.b_is_zero},
             {"offdiag_matches_target", r.cond_angle},
             {"offdiag_vacuous", r.angle_vacuous},
             {"verdict", r.verdict}};
    if (r.unit_witness) doc["unit_witness"] = *r.unit_witness;
    if (r.angle_witness) {
        doc["angle_witness"] = Json{{"j", r.angle_witness->first},
                                    {"k", r.angle_witness->second},
                                    {"found", render_absvalue(*r.angle_found)}};
    }
    if (r.strong) {
        doc["norms_ok"] = r.cond_norm;
        if (r.norm_witness) doc["norm_witness"] = *r.norm_witness;
    }
    return doc;
}

inline Json equiangular_to_json(const EquiangularReport& r) {
    Json doc{{"a", to_string(r.a)},
             {"gamma", render_absvalue(r.gamma)},
             {"diag_ok", r.diag_ok},
             {"offdiag_ok", r.offdiag_ok},
             {"verdict", r.ok}};
    if (r.diag_witness) {
        doc["diag_witness"] = Json{{"j", *r.diag_witness}, {"found", to_string(*r.diag_found)}};
    }
    if (r.offdiag_witness) {
        doc["offdiag_witness"] = Json{{"j", r.offdiag_witness->first},
                                      {"k", r.offdiag_witness->second},
                                      {"found", render_absvalue(*r.offdiag_found)}};
    }
    return doc;
}

inline Json hit_report_to_json(const HitReport& report) {
    return std::visit(
        [](const auto& r) -> Json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, QReport>) return q_to_json(r);
            else if constexpr (std::is_same_v<T, ZaunerReport>) return zauner_to_json(r);
            else return equiangular_to_json(r);
        },
        report);
}

inline Json search_result_to_json(const SearchResult& r) {
    Json hits = Json::array();
    for (const SearchHit& hit : r.hits) {
        hits.push_back(Json{{"config", config_to_json(hit.config)}, {"report", hit_report_to_json(hit.report)}});
    }
    return Json{{"spec", search_spec_to_json(r.spec)},
                {"entry_count", r.entries_used.size()},
                {"space_size", r.space_size.get_str()},
                {"configs_scanned", r.configs_scanned},
                {"hit_count", r.hits.size()},
                {"truncated", r.truncated},
                {"wall_seconds", r.wall_seconds},
                {"hits", std::move(hits)}};
}

inline Json classical_welch_to_json(const ClassicalWelch& w) {
    return Json{{"approximate", true}, {"sum_bound", w.sum_bound}, {"max_bound", w.max_bound}};
}

inline Json classical_bounds_to_json(const ClassicalBounds& b) {
    auto bound = [](const BoundValue& v) {
        Json doc{{"applicable", v.applicable}};
        if (v.applicable) doc["value"] = v.value;
        return doc;
    };
    return Json{{"approximate", true},
                {"field", b.field == Field::C ? "C" : "R"},
                {"gerzon", b.gerzon_bound},
                {"bukh_cox", bound(b.bukh_cox)},
                {"orthoplex", bound(b.orthoplex)},
                {"levenstein", bound(b.levenstein)},
                {"exponential", bound(b.exponential)}};
}

} // namespace padic
