#pragma once
/**
 * @file entanglement.hpp
 * @brief Entanglement measures and Dicke-basis closed forms.
 *
 * For a unit symmetric state T the geometric measure is
 * eta = -log2 |T|_sigma^2 (bits) and the distance to the product states is
 * sqrt(2 (1 - |T|_sigma)).  The Dicke basis element S(j) (proportional to
 * sqrt(c(j)) x^j) has the closed-form norm
 * |S(j)|_sigma^2 = d! prod j_k^{j_k} / (d^d prod j_k!), 0^0 = 1, minimized
 * over J(d,n) by the balanced index S(d,n).  Everything is evaluated in
 * log space so d ~ 10^3 stays finite.
 */

#include <optional>
#include <string>
#include <utility>

#include "symnorm/multi_index.hpp"

namespace symnorm {

struct EntanglementReport {
  double sigma_norm = 0.0;
  double eta = 0.0;           ///< -log2(sigma_norm^2), in bits
  double geo_distance = 0.0;  ///< sqrt(2 (1 - sigma_norm)); NaN when invalid
  bool geo_valid = false;     ///< false when the input is not a unit state
  std::string warning;        ///< non-empty when geo_distance is withheld
  std::optional<std::pair<double, double>> bounds;  ///< eta_sym(d,n) range
};

/// Both measures from a computed spectral norm.  When hs_norm is not within
/// 1e-9 of 1 the distance formula does not apply: geo_distance is NaN,
/// geo_valid is false and warning explains why, but eta is still returned.
EntanglementReport measures(double sigma_norm, double hs_norm);

/// Strict variant of the distance: throws StateNormalizationError unless
/// hs_norm is within 1e-9 of 1.
double geo_distance(double sigma_norm, double hs_norm);

/// |S(j)|_sigma for a Dicke basis index j (entries >= 0, sum >= 1).
double dicke_norm(const MultiIndex& j);

/// The most entangled Dicke element S(d,n): the balanced index with
/// l = n*ceil(d/n) - d entries floor(d/n) first, and its norm.  Minimality
/// over all of J(d,n) is verified by exhaustive scan.
std::pair<MultiIndex, double> most_entangled_dicke(int d, int n);

/// (lower, upper) bounds for eta_sym(d,n): lower = eta(S(d,n)), upper =
/// log2 binom(n+d-1, n-1).
std::pair<double, double> eta_sym_bounds(int d, int n);

}  // namespace symnorm
