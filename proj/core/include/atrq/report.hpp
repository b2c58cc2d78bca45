#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "atrq/manifest.hpp"
#include "atrq/pipeline.hpp"
#include "atrq/regression.hpp"
#include "atrq/stats.hpp"

namespace atrq {

using Json = nlohmann::json;

// Serialisers for the machine-readable report documents. Keys are emitted in
// sorted order and doubles in shortest round-trip form, so identical inputs
// give identical bytes.

void to_json(Json& j, const FilterParams& p);
void to_json(Json& j, const AtrScore& s);
void to_json(Json& j, const Signature& s);
void to_json(Json& j, const MetricReport& m);
void to_json(Json& j, const MeanSd& m);
void to_json(Json& j, const RegressionModel& m);
void to_json(Json& j, const HybridPrediction& p);
void to_json(Json& j, const CalibrationResult& c);
void to_json(Json& j, const CvReport& r);
void to_json(Json& j, const EndToEndReport& r);

/// {"tool": "atrq", "version": ..., "command": ..., "parameters": ..., "payload": ...}
Json make_report(std::string_view command, Json parameters, Json payload);

/// Pretty-printed with a trailing newline.
std::string dump_report(const Json& doc);

}  // namespace atrq
