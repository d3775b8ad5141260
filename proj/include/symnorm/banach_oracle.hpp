#pragma once
/**
 * @file banach_oracle.hpp
 * @brief Independent lower-bound oracle: multi-start projected ascent of
 *        |f(x)| on the unit sphere.
 *
 * Any unit vector certifies |f(x)| as a lower bound on the spectral norm, so
 * the best value found over many ascent trajectories is an independent check
 * on the root-finding pipelines.  The ascent iterates x <- conj(F(x))/|F(x)|
 * (complex field) or x <- +-F(x)/|F(x)| (real field), blending with the
 * previous iterate when a full step would decrease |f|.
 */

#include <cstdint>

#include "symnorm/norm_report.hpp"
#include "symnorm/sym_tensor.hpp"

namespace symnorm {

struct OracleResult {
  double lower_bound = 0.0;
  VectorC witness;                  ///< unit vector with |f(witness)| = lower_bound
  int starts = 0;
  double converged_fraction = 0.0;  ///< trajectories that hit the |df| < 1e-12 stop
};

/// Multi-start ascent.  num_starts <= 0 selects the default 16*n*d.  Starts
/// are normalized Gaussian vectors drawn from a seeded generator; the result
/// is deterministic for a fixed seed (best-of merge tie-breaks by trajectory
/// index).  Throws ZeroTensor for S = 0.
OracleResult ascend(const SymTensor& S, int num_starts = -1,
                    int max_iters = 300, std::uint64_t seed = 0,
                    Field field = Field::Complex);

/// Single ascent trajectory from a caller-supplied start (normalized
/// internally).  Used to polish witnesses from other pipelines.
OracleResult ascend_from(const SymTensor& S, const VectorC& x0,
                         int max_iters = 300, Field field = Field::Complex);

enum class Verdict { PASS, GAP };

/// PASS iff oracle.lower_bound <= report.value + 1e-8 and
/// report.value <= hs_norm(S) + 1e-12; GAP otherwise (a GAP signals a missed
/// fixed point -- hard failure downstream).
Verdict certify(const SymTensor& S, const NormReport& report,
                const OracleResult& oracle);

}  // namespace symnorm
