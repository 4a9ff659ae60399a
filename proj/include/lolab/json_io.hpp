#pragma once

#include <json.hpp>

#include <string>

#include "lolab/configuration.hpp"
#include "lolab/exact_engine.hpp"
#include "lolab/extremal.hpp"
#include "lolab/mc_engine.hpp"
#include "lolab/pipeline.hpp"

namespace lolab {

using ordered_json = nlohmann::ordered_json;

/// Parse a configuration document: {"angles": [...]} takes precedence, then
/// {"rational": {"scale": s, "pairs": [[p,q],...]}}, then
/// {"vectors": [[x,y],...]}.
Configuration config_from_json(const ordered_json& j);
Configuration config_from_file(const std::string& path);

ordered_json config_to_json(const Configuration& v);

ordered_json to_json(const CountResult& r);
ordered_json to_json(const McEstimate& e);
ordered_json to_json(const Certificate& c);
ordered_json to_json(const PairingPlan& p);
ordered_json to_json(const TwoDirectionClass& c);
ordered_json to_json(const AxisProfile& p);
ordered_json to_json(const ExtremalReport& r);

ordered_json rational_to_json(const mpq_class& q);

/// Serialize with every floating-point number printed at 17 significant
/// digits (lossless round trip, byte-stable output).
std::string dump_json17(const ordered_json& j, int indent = 2);

}  // namespace lolab
