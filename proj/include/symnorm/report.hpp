#pragma once
/**
 * @file report.hpp
 * @brief Machine- and human-readable result reports.
 *
 * A Report is the single output object of every CLI command: tensor digest,
 * field, method tag, norm value with witness, entanglement measures when
 * requested, diagnostics (path counts, residuals, oracle certification) and
 * wall time.  JSON emission is schema-stable (keys sorted); human emission
 * prints values at 4 decimal digits with round-half-even.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symnorm/norm_report.hpp"

namespace symnorm {

struct Report {
  std::string digest;
  std::string field;
  std::string method;
  bool has_value = false;  ///< false on hard solver failure (partial report)
  double value = 0.0;
  VectorC witness;
  double witness_residual = 0.0;
  bool lower_bound_only = false;
  std::optional<double> eta;
  std::optional<double> geo_distance;
  std::string warning;
  std::string certification;  ///< "PASS", "GAP", or empty when no oracle ran
  std::optional<double> oracle_lower;
  std::vector<std::pair<std::string, double>> diagnostics;
  double wall_time_s = 0.0;
  std::string error;  ///< hard-failure message accompanying a partial report
};

/// Copies the norm-level fields of a NormReport into a Report shell.
Report report_from_norm(const NormReport& nr);

/// Single JSON object (sorted keys, trailing newline).
std::string report_json(const Report& rep);

/// Human-readable block, 4-decimal round-half-even values.
std::string report_human(const Report& rep);

/// Value formatted at 4 decimals with round-half-even ties.
std::string format_fixed4(double v);

}  // namespace symnorm
