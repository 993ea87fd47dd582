#pragma once

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "curvekit/ccc.hpp"
#include "curvekit/explorer.hpp"
#include "curvekit/fourier.hpp"
#include "curvekit/functionals.hpp"
#include "curvekit/grassmann.hpp"

namespace curvekit {

using json = nlohmann::json;

void to_json(json& j, const CCCSpec& spec);
void from_json(const json& j, CCCSpec& spec);

void to_json(json& j, const EvenCCCSpec& spec);
void from_json(const json& j, EvenCCCSpec& spec);

void to_json(json& j, const FourierCurveSpec& spec);
void from_json(const json& j, FourierCurveSpec& spec);

void to_json(json& j, const ExplorerConfig& config);
void from_json(const json& j, ExplorerConfig& config);

void to_json(json& j, const IndicatrixInvariants& inv);
void to_json(json& j, const Theorem2Item& item);
void to_json(json& j, const Theorem2Report& report);
void to_json(json& j, const InequalityVerdict& verdict);
void to_json(json& j, const FunctionalReport& report);
void to_json(json& j, const MinimalValueResult& result);
void to_json(json& j, const TwoFrequencyForm& form);
void to_json(json& j, const IterationStep& step);
void to_json(json& j, const IterationReport& report);
void to_json(json& j, const TraceEntry& entry);
void to_json(json& j, const ExplorationResult& result);

}  // namespace curvekit
