#pragma once

#include <json.hpp>

#include "cckit/couples.hpp"
#include "cckit/iso.hpp"
#include "cckit/separability.hpp"

namespace cckit {

// One JSON object per report, stable key names; batch subcommands emit one
// object per line. Big integers are serialized as decimal strings.
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const AnalysisReport& r);
nlohmann::json to_json(const ExceptionalPair& r);
nlohmann::json to_json(const TwoSeparabilityReport& r);
nlohmann::json to_json(const PaleyBoundReport& r);
nlohmann::json to_json(const WitnessReport& r);

} // namespace cckit
