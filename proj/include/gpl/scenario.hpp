#pragma once

// Batch front-end: built-in scenarios, user configurations, finite-field
// witness search, and deterministic text/JSON reports.

#include <optional>
#include <string>
#include <vector>

#include "gpl/serialize.hpp"

namespace gpl {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCriterion = 2;
inline constexpr int kExitConstruction = 3;
inline constexpr int kExitExpectation = 4;
inline constexpr int kExitConfig = 5;
inline constexpr int kExitIo = 6;

enum class CurveKind { Rational, FermatCubic };
enum class RunMode { Inner, Outer };

struct Expectations {
  std::optional<std::int64_t> degree;
  std::optional<std::string> group1, group2;
};

struct ScenarioConfig {
  std::string name;
  std::string comment;
  FieldPtr field;
  CurveKind curve = CurveKind::Rational;
  RunMode mode = RunMode::Inner;
  std::size_t cap = FiniteMoebiusGroup::kDefaultCap;
  std::vector<Moebius> g1_gens, g2_gens;
  std::optional<ProjPoint> p1, p2; // inner mode
  std::optional<ProjPoint> q;      // outer mode
  std::vector<ProjPoint> candidates; // search over infinite fields
  std::vector<std::int64_t> char_not;
  Expectations expect;
  std::optional<CubicPoint> cubic_q; // fermat-cubic: fixed base point (else scan)
};

ScenarioConfig config_from_json(const json& j);

struct RunReport {
  int exit_code = kExitOk;
  std::string status; // "ok", "criterion-failed", "construction-failed", ...
  json payload;
  std::string text;
};

const std::vector<std::string>& builtin_scenario_names();
// The raw JSON config of a built-in scenario (also valid as a user config).
std::string builtin_scenario_text(const std::string& name);
ScenarioConfig builtin_scenario(const std::string& name);

RunReport run_scenario(const ScenarioConfig& cfg);
RunReport run_search(const ScenarioConfig& cfg);

// format is "text" or "json"; empty path writes to stdout.
void emit(const RunReport& report, const std::string& format, const std::string& out_path);

// Exit-code class for an error thrown during a run.
int exit_code_for(Errc code);

} // namespace gpl
