#include "harmonic/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace harmonic {

namespace {

json complex_to_json(Cx v) { return json::array({v.real(), v.imag()}); }

std::vector<Cx> coeffs_from_json(const json& arr) {
    if (!arr.is_array()) throw std::runtime_error("coefficient list must be a JSON array");
    std::vector<Cx> out;
    out.reserve(arr.size());
    for (const json& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw std::runtime_error("coefficient entries must be [re, im] number pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

json coeffs_to_json(const std::vector<Cx>& c) {
    json arr = json::array();
    for (Cx v : c) arr.push_back(complex_to_json(v));
    return arr;
}

}  // namespace

json to_json(const HarmonicMap& f) {
    return json{{"h", coeffs_to_json(f.h().coeffs())}, {"g", coeffs_to_json(f.g().coeffs())}};
}

HarmonicMap map_from_json(const json& j) {
    if (!j.contains("h") || !j.contains("g"))
        throw std::runtime_error("map JSON must contain \"h\" and \"g\" coefficient lists");
    return HarmonicMap(coeffs_from_json(j["h"]), coeffs_from_json(j["g"]));
}

std::string class_label_name(ClassLabel label) {
    switch (label) {
        case ClassLabel::us_star: return "us_star";
        case ClassLabel::uk: return "uk";
        case ClassLabel::ak0_necessary: return "ak0_necessary";
        case ClassLabel::uk0_necessary: return "uk0_necessary";
        case ClassLabel::ak_necessary: return "ak_necessary";
        case ClassLabel::a2_b2_necessary: return "a2_b2_necessary";
    }
    return "unknown";
}

std::string transfer_rule_name(TransferRule rule) {
    switch (rule) {
        case TransferRule::product_bound: return "product_bound";
        case TransferRule::quartic_bound: return "quartic_bound";
        case TransferRule::floor_match: return "floor_match";
        case TransferRule::bernardi_limit: return "bernardi_limit";
        case TransferRule::equal_params: return "equal_params";
        case TransferRule::none: return "none";
    }
    return "unknown";
}

json to_json(const ClassVerdict& v) {
    return json{{"schema", kSchemaVersion},
                {"type", "class_verdict"},
                {"class", class_label_name(v.label)},
                {"passed", v.passed},
                {"margin", v.margin},
                {"detail", v.detail},
                {"truncation_order", v.truncation_order}};
}

json to_json(const OracleReport& r) {
    return json{{"schema", kSchemaVersion},
                {"type", "oracle_report"},
                {"verdict", r.pass ? "pass" : "fail"},
                {"min_residual", r.min_residual},
                {"argmin", json::array({complex_to_json(r.argmin_z), complex_to_json(r.argmin_zeta)})},
                {"samples", r.samples}};
}

json to_json(const BoundsReport& r) {
    return json{{"schema", kSchemaVersion},
                {"type", "bounds_report"},
                {"r", r.r},
                {"b1", r.b1_mod},
                {"growth", json::array({r.growth.first, r.growth.second})},
                {"jacobian", json::array({r.jacobian.first, r.jacobian.second})},
                {"area", json::array({r.area.first, r.area.second})},
                {"covering_radius", r.covering_radius}};
}

json to_json(const TransferVerdict& v) {
    json j{{"schema", kSchemaVersion},
           {"type", "transfer_verdict"},
           {"rule", transfer_rule_name(v.rule)},
           {"admissible", v.admissible},
           {"phi_min_over_n", v.phi_min_over_n}};
    if (v.roots)
        j["roots"] = json::array({v.roots->first, v.roots->second});
    else
        j["roots"] = nullptr;
    return j;
}

json to_json(const ConditionReport& r) {
    return json{{"schema", kSchemaVersion},
                {"type", "condition_report"},
                {"condition", condition_name(r.id)},
                {"satisfied", r.satisfied},
                {"lhs", r.lhs_value},
                {"threshold", r.threshold}};
}

HarmonicMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("map file is not valid JSON: " + std::string(e.what()));
    }
    return map_from_json(j);
}

void save_map_file(const std::string& path, const HarmonicMap& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write map file: " + path);
    out << to_json(f).dump() << "\n";
}

}  // namespace harmonic
