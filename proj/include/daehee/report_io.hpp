#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "daehee/polynomial.hpp"
#include "daehee/rational.hpp"
#include "daehee/verify.hpp"
#include "daehee/volkenborn.hpp"

namespace daehee::io {

// Machine-readable output. Rationals are serialized as exact "p/q" strings,
// never floating point, and field order is fixed so that identical inputs
// produce byte-identical output.

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactName = "daehee-kit";

inline Json envelope(const std::string& command, Json params) {
    Json j;
    j["artifact"] = kArtifactName;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["params"] = std::move(params);
    j["entries"] = Json::array();
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// --- sequence tables ---------------------------------------------------

struct TableEntry {
    std::vector<std::pair<std::string, int>> indices;
    Rational value;
};

inline Json table_json(Json params, const std::vector<TableEntry>& entries) {
    Json j = envelope("table", std::move(params));
    for (const auto& e : entries) {
        Json row;
        for (const auto& [name, idx] : e.indices) {
            row[name] = idx;
        }
        row["value"] = to_string(e.value);
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline std::string table_csv(const std::vector<TableEntry>& entries) {
    std::string out;
    if (entries.empty()) return out;
    for (std::size_t i = 0; i < entries.front().indices.size(); ++i) {
        out += entries.front().indices[i].first;
        out += ',';
    }
    out += "value\n";
    for (const auto& e : entries) {
        for (const auto& [name, idx] : e.indices) {
            out += std::to_string(idx);
            out += ',';
        }
        out += csv_escape(to_string(e.value));
        out += '\n';
    }
    return out;
}

// --- polynomials ---------------------------------------------------------

inline Json poly_json(Json params, const RationalPolynomial& p) {
    Json j = envelope("poly", std::move(params));
    Json row;
    row["degree"] = p.degree();
    Json coeffs = Json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        coeffs.push_back(to_string(p.coeff(i)));
    }
    row["coefficients"] = std::move(coeffs);
    j["entries"].push_back(std::move(row));
    return j;
}

/// One CSV row listing the coefficients in ascending powers of x.
inline std::string poly_csv(const RationalPolynomial& p) {
    std::string out;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i > 0) out += ',';
        out += csv_escape(to_string(p.coeff(i)));
    }
    out += '\n';
    return out;
}

// --- verification reports -------------------------------------------------

inline Json report_json(const VerificationReport& report) {
    Json j;
    j["id"] = to_string(report.id);
    Json grid;
    grid["n_max"] = report.grid.n_max;
    grid["k_max"] = report.grid.k_max;
    Json samples = Json::array();
    for (const Rational& x : report.grid.x_samples) {
        samples.push_back(to_string(x));
    }
    grid["x_samples"] = std::move(samples);
    j["grid"] = std::move(grid);
    j["status"] = report.passed ? "pass" : "fail";
    if (report.first_failure) {
        Json f;
        Json indices;
        for (const auto& [name, value] : report.first_failure->indices) {
            indices[name] = value;
        }
        f["indices"] = std::move(indices);
        f["lhs"] = report.first_failure->lhs;
        f["rhs"] = report.first_failure->rhs;
        j["first_failure"] = std::move(f);
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

inline Json verify_json(Json params, const std::vector<VerificationReport>& reports) {
    Json j = envelope("verify", std::move(params));
    for (const auto& r : reports) {
        j["entries"].push_back(report_json(r));
    }
    return j;
}

inline std::string verify_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "id,status,failure_indices,lhs,rhs\n";
    for (const auto& r : reports) {
        out += to_string(r.id);
        out += ',';
        out += r.passed ? "pass" : "fail";
        out += ',';
        if (r.first_failure) {
            std::string idx;
            for (const auto& [name, value] : r.first_failure->indices) {
                if (!idx.empty()) idx += ' ';
                idx += name + "=" + value;
            }
            out += csv_escape(idx);
            out += ',';
            out += csv_escape(r.first_failure->lhs);
            out += ',';
            out += csv_escape(r.first_failure->rhs);
        } else {
            out += ",,";
        }
        out += '\n';
    }
    return out;
}

// --- Volkenborn probes -----------------------------------------------------

inline Json volkenborn_json(Json params, const std::vector<VolkenbornProbe>& probes) {
    Json j = envelope("volkenborn", std::move(params));
    for (const auto& probe : probes) {
        Json row;
        row["depth"] = probe.depth;
        row["partial_sum"] = to_string(probe.partial_sum);
        row["exact_value"] = to_string(probe.exact_value);
        row["valuation"] = to_string(probe.error_valuation);
        j["entries"].push_back(std::move(row));
    }
    return j;
}

inline std::string volkenborn_csv(const std::vector<VolkenbornProbe>& probes) {
    std::string out = "depth,partial_sum,exact_value,valuation\n";
    for (const auto& probe : probes) {
        out += std::to_string(probe.depth);
        out += ',';
        out += csv_escape(to_string(probe.partial_sum));
        out += ',';
        out += csv_escape(to_string(probe.exact_value));
        out += ',';
        out += csv_escape(to_string(probe.error_valuation));
        out += '\n';
    }
    return out;
}

}  // namespace daehee::io
