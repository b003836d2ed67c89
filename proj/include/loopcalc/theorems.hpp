#pragma once

// Loop-space decompositions checked as exact identities of truncated
// homology series.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "loopcalc/error.hpp"
#include "loopcalc/freealg.hpp"
#include "loopcalc/series.hpp"

namespace loopcalc {

enum class TheoremId {
  Ganea,
  Dbard,
  Mtypealt,
  Adinvcor,
  Etype1,
  Sphereex,
  Mooreex,
  Pdex,
  Connsum,
  Inertideal,
  OmegachlgyXcheck,
  Jamescompat,
  Cpsi,
  Prelcofib,
  PolywhDomain,
  RewriteSoundness,
};

std::string to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

struct TheoremInfo {
  TheoremId id;
  std::string schema;
  std::string anchor;
};

/// Registry order; verify --all runs in this order.
const std::vector<TheoremInfo>& list_theorems();

enum class Level { Quick, Full };

struct Instance {
  nlohmann::json params;
  int cap;
  std::vector<FieldTag> fields;
};

std::vector<Instance> default_instances(TheoremId id, Level level);

struct Comparison {
  std::string label;
  GradedSeries lhs;
  GradedSeries rhs;
};

struct Check {
  std::string label;
  bool ok;
};

struct Discrepancy {
  std::string label;
  FieldTag field;
  int degree;
  Integer lhs;
  Integer rhs;
};

struct Report {
  TheoremId theorem;
  nlohmann::json instance;
  int cap = 0;
  std::vector<FieldTag> fields_checked;
  std::vector<Comparison> comparisons;
  /// Non-series conditions (structural round trips, aggregate counts).
  std::vector<Check> checks;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  /// Set when evaluation failed; pass is then false.
  std::optional<ErrorCode> error_code;
  std::string error;
  nlohmann::json assumed_hypotheses = nlohmann::json::array();
  /// Per-summand listing (POLYWH_DOMAIN only).
  nlohmann::json summands;
};

/// Throws Error(SchemaMismatch) for malformed instances; evaluation errors
/// are reported in the Report.
Report verify(TheoremId id, const nlohmann::json& instance, int cap, const std::vector<FieldTag>& fields,
              long long budget = kDefaultMatrixBudget);

nlohmann::json to_json(const Report& r);

}  // namespace loopcalc
