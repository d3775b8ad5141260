#pragma once
/**
 * @file homotopy.hpp
 * @brief Total-degree homotopy continuation for small square systems.
 *
 * Tracks the D = prod(d_i) solution paths of
 *     H(x,t) = (1-t) gamma (x_i^{d_i} - 1)_i + t g(x),   t: 0 -> 1,
 * from the roots-of-unity start points with an Euler predictor and Newton
 * corrector under adaptive step control.  Paths that stall short of t = 1
 * (singular endpoints) are finished with a Cauchy endgame: the tracker loops
 * around the circle t = 1 - eps e^{i theta}, detects the winding number by
 * return-to-start, averages the loop samples into a limit estimate, and
 * shrinks eps until two successive estimates agree.  Start offsets are the
 * constant vector b = 1: at a real fixed point of the composed map the
 * homotopy residual direction is the all-ones vector, which lies in the
 * range of the Jacobian exactly when the offsets are equal, so equal offsets
 * are what make paths land on the real points of positive-dimensional
 * solution sets.
 */

#include <cstdint>
#include <vector>

#include "symnorm/poly_system.hpp"

namespace symnorm {

struct SolveOptions {
  /// Corrector tolerance factor.  Acceptance thresholds scale from it:
  /// stalled points are accepted directly at 10*tol residual, Cauchy-endgame
  /// limits at 1000*tol (defaults 1e-9 and 1e-7).
  double tol = 1e-10;
  std::uint64_t seed = 0;
  /// Worker threads for path tracking (<= 1 means sequential).  The merge is
  /// deterministic regardless: outcomes are slotted by path index.
  int threads = 1;
};

struct SolutionPoint {
  VectorC x;
  double residual = 0.0;
  int multiplicity = 1;  ///< estimated as the number of paths that landed here
  int path_count = 1;    ///< paths in this cluster
};

struct SolutionSet {
  std::vector<SolutionPoint> points;
  /// Paths with no finite endpoint: at-infinity plus hard failures, so that
  /// sum(path_count) + diverged_paths = tracked_paths always holds.
  int diverged_paths = 0;
  int tracked_paths = 0;  ///< = D
  /// Subset of diverged_paths whose endgame failed outright (not at
  /// infinity); rate > 5% sets tracking_unreliable.
  int failed_paths = 0;
  bool tracking_unreliable = false;
  std::uint64_t seed = 0;
};

/// Tracks all D paths and returns the clustered finite solutions (cluster
/// radius 1e-6 (1+|x|), representative = first landing in path order, which
/// keeps results bit-identical for a fixed seed).  Divergence bound
/// |x| > 1e8; stalls with |x| > 1e3 are classified at infinity.
SolutionSet solve_total_degree(const PolySystem& sys,
                               const SolveOptions& opts = {});

}  // namespace symnorm
