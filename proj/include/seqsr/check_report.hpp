#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "seqsr/face.hpp"
#include "seqsr/field.hpp"

namespace seqsr {

/// Why a check failed. Only the fields relevant to `reason` are set.
struct Witness {
    std::string reason;
    std::optional<Face> face;
    std::optional<int> degree;
    std::optional<int> skeleton_index;
    std::optional<int> vertex;
    std::optional<int> betti_i;
    std::optional<int> betti_j;
    std::string detail;
};

/// Verdict plus witness. A false verdict always carries a witness; some true
/// verdicts carry a certificate (shedding sequence, shelling order).
struct CheckReport {
    std::string property;
    std::optional<int> r;
    std::string field;
    bool verdict = true;
    std::optional<Witness> witness;
    std::string certificate_kind;
    std::vector<std::vector<int>> certificate;

    static CheckReport pass(std::string property, std::optional<int> r, const FieldSpec& f) {
        CheckReport rep;
        rep.property = std::move(property);
        rep.r = r;
        rep.field = f.name();
        return rep;
    }

    CheckReport& fail(Witness w) {
        verdict = false;
        witness = std::move(w);
        return *this;
    }

    explicit operator bool() const noexcept { return verdict; }
};

inline nlohmann::ordered_json to_json(const Witness& w) {
    nlohmann::ordered_json j;
    j["reason"] = w.reason;
    if (w.face) j["face"] = w.face->labels();
    if (w.degree) j["degree"] = *w.degree;
    if (w.skeleton_index) j["skeleton_index"] = *w.skeleton_index;
    if (w.vertex) j["vertex"] = *w.vertex;
    if (w.betti_i) j["i"] = *w.betti_i;
    if (w.betti_j) j["j"] = *w.betti_j;
    if (!w.detail.empty()) j["detail"] = w.detail;
    return j;
}

/// {property, r, field, verdict, witness[, certificate]}
inline nlohmann::ordered_json to_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["property"] = rep.property;
    j["r"] = rep.r ? nlohmann::ordered_json(*rep.r) : nlohmann::ordered_json(nullptr);
    j["field"] = rep.field;
    j["verdict"] = rep.verdict;
    j["witness"] = rep.witness ? to_json(*rep.witness) : nlohmann::ordered_json(nullptr);
    if (!rep.certificate_kind.empty()) {
        j["certificate"] = {{"kind", rep.certificate_kind}, {"steps", rep.certificate}};
    }
    return j;
}

inline std::string describe(const Witness& w) {
    std::string s = w.reason;
    if (w.skeleton_index) s += " skeleton=" + std::to_string(*w.skeleton_index);
    if (w.vertex) s += " vertex=" + std::to_string(*w.vertex);
    if (w.face) s += " face=" + w.face->to_string();
    if (w.degree) s += " degree=" + std::to_string(*w.degree);
    if (w.betti_i) s += " i=" + std::to_string(*w.betti_i);
    if (w.betti_j) s += " j=" + std::to_string(*w.betti_j);
    if (!w.detail.empty()) s += " (" + w.detail + ")";
    return s;
}

/// One-line human summary.
inline std::string to_text(const CheckReport& rep) {
    std::string s = rep.property;
    if (rep.r) s += " r=" + std::to_string(*rep.r);
    s += " field=" + rep.field + " verdict=" + (rep.verdict ? "true" : "false");
    if (rep.witness) s += " witness: " + describe(*rep.witness);
    if (!rep.certificate_kind.empty()) {
        s += " " + rep.certificate_kind + ":";
        for (const auto& step : rep.certificate) {
            s += " [";
            for (std::size_t k = 0; k < step.size(); ++k) s += (k ? " " : "") + std::to_string(step[k]);
            s += "]";
        }
    }
    return s;
}

}  // namespace seqsr
