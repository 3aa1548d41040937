#pragma once

#include <optional>
#include <string>

#include "nomasec/experiments.hpp"

namespace nomasec {

/// Parsed scenario configuration: system parameters, secrecy targets,
/// simulation settings, and an optional sweep specification.
struct ScenarioFile {
  ScenarioTemplate scenario;
  std::optional<SweepSpec> sweep;
};

/// Strict JSON parsing: unknown keys are rejected, exactly one SNR form must
/// be present, and every field is validated against its type invariants
/// before any computation. Failures throw validation_error with the
/// offending field in the message.
ScenarioFile parse_scenario(const std::string& json_text);
ScenarioFile load_scenario(const std::string& path);
std::string serialize_scenario(const ScenarioFile& file);

}  // namespace nomasec
