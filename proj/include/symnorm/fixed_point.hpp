#pragma once
/**
 * @file fixed_point.hpp
 * @brief Spectral norms for general n via fixed points of F and H.
 *
 * The complex spectral norm of a degree-d symmetric tensor equals the max of
 * |f(x)|/|x|^d over the nonzero fixed points of H = conj(F) o F, enumerated
 * through the square system {F(x) = y, conj-F(y) = x} with (d-1)^(2n) paths.
 * The real norm of a real tensor needs only the fixed points of F itself
 * ((d-1)^n paths); for even d the candidate set additionally contains the
 * conj(omega)-scaled copies of complex fixed points, omega = e^{i pi/(d-2)}.
 */

#include "symnorm/homotopy.hpp"
#include "symnorm/norm_report.hpp"
#include "symnorm/sym_tensor.hpp"

namespace symnorm {

/// n equations F_i(x) - x_i, declared degree d-1 each (the declaration stays
/// d-1 even when a degenerate gradient component has lower actual degree, so
/// the surplus paths diverge and flag singularity).
PolySystem fix_F_system(const SymTensor& S);

/// 2n equations in (x, y): F_i(x) - y_i and conj-F_i(y) - x_i, declared
/// degree d-1 each.  The x-part of a solution is a fixed point of H.
PolySystem fix_H_system(const SymTensor& S);

/// Complex spectral norm via the H-system.  Drops the origin cluster
/// (|x| < hs^{-1/(d-2)} (1-1e-6)), reports max |f(x)|/|x|^d with unit
/// witness, cross-checks every candidate against the radius bound
/// |x|^{-(d-2)} <= norm, and carries the path/count diagnostics.  Unreliable
/// tracking flags the value as lower-bound-only instead of throwing.
NormReport complex_spectral_norm(const SymTensor& S,
                                 const SolveOptions& opts = {});

/// Real spectral norm of a real tensor via the F-system.  Candidates are the
/// real fixed points, plus for even d the real points among the
/// conj(omega_{d-2})-scaled copies, omega_{d-2} = e^{i pi/(d-2)}.
NormReport real_spectral_norm(const SymTensor& S, const SolveOptions& opts = {});

/// Solutions of the H-system restricted to their x-parts, with the
/// anti-fixed subset (F(x) = conj(x) within 1e-6 (1+|x|)^(d-1)) and the
/// soft orbit-count bounds ((d-1)^n - 1)/d <= mu <= sum_{k<n} (d-1)^(2k).
struct FixedPointInventory {
  Field field = Field::Complex;
  std::vector<SolutionPoint> points;  ///< x-parts with H-system residuals
  long long expected = 0;             ///< (d-1)^(2n)
  int found_multiplicity = 0;
  int diverged = 0;
  std::vector<int> antifix_subset;  ///< indices into points
  int mu_orbits = 0;      ///< nonzero anti-fixed points grouped by x -> zeta x
  double mu_lower = 0.0;  ///< ((d-1)^n - 1)/d
  double mu_upper = 0.0;  ///< sum_{k=0}^{n-1} (d-1)^(2k)
  bool bounds_satisfied = true;  ///< soft diagnostic, not an assertion
};

FixedPointInventory antifixed_points(const SymTensor& S,
                                     const SolveOptions& opts = {});

/// Nonsingularity is diagnosed from path behavior: any diverged path in the
/// F-system solve means the top homogeneous parts share a nontrivial zero.
struct SingularityReport {
  long long expected = 0;  ///< (d-1)^n
  int found_multiplicity = 0;
  int diverged_paths = 0;
  int failed_paths = 0;
  bool singular = false;
};

SingularityReport singularity_diagnostic(const SymTensor& S,
                                         const SolveOptions& opts = {});

}  // namespace symnorm
