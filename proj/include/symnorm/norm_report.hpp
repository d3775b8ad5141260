#pragma once
/**
 * @file norm_report.hpp
 * @brief Result record shared by every norm computation path.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symnorm/sym_tensor.hpp"

namespace symnorm {

/// Field the optimization ran over.
enum class Field { Complex, Real };

inline const char* field_name(Field f) {
  return f == Field::Complex ? "complex" : "real";
}

/**
 * Outcome of a spectral-norm computation.
 *
 * method is one of "univariate", "homotopy-F", "homotopy-H", "closed-form",
 * "perturbation".  witness is a unit vector with |f(witness)| ~ value
 * (real entries when field == Real).  witness_residual is the method's
 * defining residual at the witness (e.g. | |f(w)| - value |, or the
 * fixed-point residual of the winning solution).  oracle_lower is attached
 * by the certification step.  lower_bound_only is set when path tracking was
 * unreliable and the value is certified only as a lower bound.  diagnostics
 * carries named numeric observations (root counts, observed degrees, ...).
 */
struct NormReport {
  double value = 0.0;
  Field field = Field::Complex;
  VectorC witness;
  std::string method;
  double witness_residual = 0.0;
  std::optional<double> oracle_lower;
  bool lower_bound_only = false;
  std::vector<std::pair<std::string, double>> diagnostics;

  /// First diagnostic with the given key, if any.
  std::optional<double> diagnostic(const std::string& key) const {
    for (const auto& kv : diagnostics)
      if (kv.first == key) return kv.second;
    return std::nullopt;
  }
};

}  // namespace symnorm
