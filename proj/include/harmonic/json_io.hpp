#pragma once

#include <string>

#include <json.hpp>

#include "harmonic/bounds.hpp"
#include "harmonic/class_tests.hpp"
#include "harmonic/families.hpp"
#include "harmonic/geometry.hpp"
#include "harmonic/operators.hpp"
#include "harmonic/series.hpp"

namespace harmonic {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Wire format: {"h": [[re, im], ...], "g": [[re, im], ...]}, index 0
/// holding the coefficient of z^1. Values round-trip at full double
/// precision.
json to_json(const HarmonicMap& f);
HarmonicMap map_from_json(const json& j);

json to_json(const ClassVerdict& v);
json to_json(const OracleReport& r);
json to_json(const BoundsReport& r);
json to_json(const TransferVerdict& v);
json to_json(const ConditionReport& r);

std::string class_label_name(ClassLabel label);
std::string transfer_rule_name(TransferRule rule);

HarmonicMap load_map_file(const std::string& path);
void save_map_file(const std::string& path, const HarmonicMap& f);

}  // namespace harmonic
