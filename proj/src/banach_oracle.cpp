#include "symnorm/banach_oracle.hpp"

#include <cmath>
#include <random>

#include "symnorm/errors.hpp"

namespace symnorm {

namespace {

/// Rotates x so that f(x) is real nonnegative: global phase (complex field),
/// sign flip (real field, odd degree).  |f| is unchanged; afterwards the
/// blend target conj(F)/|F| (or sign(f) F/|F|) is an ascent direction for
/// |f|, with slope d (|F| - |f|) >= 0 vanishing exactly at anti-fixed points.
void phase_align(const SymTensor& S, VectorC& x, Field field) {
  const cdouble f = evaluate(S, x);
  if (std::abs(f) == 0.0) return;
  if (field == Field::Complex) {
    x *= std::polar(1.0, -std::arg(f) / S.d());
  } else if (f.real() < 0.0 && S.d() % 2 == 1) {
    x = -x;
  }
}

/// One damped ascent trajectory; returns the final point through x and |f|
/// through fabs_out, and whether the |df| < 1e-12 stop was reached.
bool run_trajectory(const SymTensor& S, VectorC& x, double& fabs_out,
                    int max_iters, Field field) {
  double f_prev = std::abs(evaluate(S, x));
  bool converged = false;
  for (int it = 0; it < max_iters; ++it) {
    phase_align(S, x, field);
    const cdouble f = evaluate(S, x);
    VectorC Fx = grad_map_F(S, x);
    const double Fn = Fx.norm();
    if (Fn == 0.0) break;  // zero-gradient point; caller restarts
    VectorC target;
    if (field == Field::Complex) {
      target = Fx.conjugate() / Fn;
    } else {
      // Even degree cannot flip the sign of f away; ascend on -f instead.
      const double sign = f.real() < 0.0 ? -1.0 : 1.0;
      target = sign * Fx / Fn;
    }
    // Backtracking blend toward the fixed-point step: monotone in |f|.
    double alpha = 1.0;
    double f_cand = f_prev;
    VectorC cand;
    bool improved = false;
    while (alpha >= 1e-3) {
      cand = (1.0 - alpha) * x + alpha * target;
      const double cn = cand.norm();
      if (cn > 1e-14) {
        cand /= cn;
        f_cand = std::abs(evaluate(S, cand));
        if (f_cand >= f_prev) {
          improved = true;
          break;
        }
      }
      alpha *= 0.5;
    }
    if (!improved) {  // no ascent left along the fixed-point direction
      converged = true;
      break;
    }
    x = cand;
    if (f_cand - f_prev < 1e-12) {
      f_prev = f_cand;
      converged = true;
      break;
    }
    f_prev = f_cand;
  }
  phase_align(S, x, field);
  fabs_out = f_prev;
  return converged;
}

VectorC random_unit(std::mt19937_64& rng, int n, Field field) {
  std::normal_distribution<double> g(0.0, 1.0);
  VectorC x(n);
  for (int i = 0; i < n; ++i) {
    double re = g(rng);
    double im = (field == Field::Complex) ? g(rng) : 0.0;
    x[i] = cdouble(re, im);
  }
  double nn = x.norm();
  if (nn == 0.0) {
    x.setZero();
    x[0] = 1.0;
    return x;
  }
  return x / nn;
}

}  // namespace

OracleResult ascend(const SymTensor& S, int num_starts, int max_iters,
                    std::uint64_t seed, Field field) {
  if (hs_norm(S) == 0.0) throw ZeroTensor("ascend: zero tensor");
  if (num_starts <= 0) num_starts = 16 * S.n() * S.d();

  std::mt19937_64 rng(seed);
  OracleResult best;
  best.starts = num_starts;
  int converged_count = 0;
  for (int t = 0; t < num_starts; ++t) {
    VectorC x = random_unit(rng, S.n(), field);
    double fa = 0.0;
    bool ok = false;
    for (int restart = 0; restart < 10; ++restart) {
      ok = run_trajectory(S, x, fa, max_iters, field);
      if (fa > 0.0 || grad_map_F(S, x).norm() > 0.0) break;
      x = random_unit(rng, S.n(), field);  // zero-gradient point: restart
    }
    if (ok) ++converged_count;
    if (fa > best.lower_bound || best.witness.size() == 0) {
      best.lower_bound = fa;
      best.witness = x;
    }
  }
  best.converged_fraction =
      static_cast<double>(converged_count) / static_cast<double>(num_starts);
  return best;
}

OracleResult ascend_from(const SymTensor& S, const VectorC& x0, int max_iters,
                         Field field) {
  if (x0.size() != S.n())
    throw DimensionMismatch("ascend_from: start has wrong length");
  double n0 = x0.norm();
  if (n0 == 0.0) throw ZeroTensor("ascend_from: zero start vector");
  VectorC x = x0 / n0;
  OracleResult r;
  r.starts = 1;
  double fa = 0.0;
  bool ok = run_trajectory(S, x, fa, max_iters, field);
  r.lower_bound = fa;
  r.witness = x;
  r.converged_fraction = ok ? 1.0 : 0.0;
  return r;
}

Verdict certify(const SymTensor& S, const NormReport& report,
                const OracleResult& oracle) {
  if (oracle.lower_bound > report.value + 1e-8) return Verdict::GAP;
  if (report.value > hs_norm(S) + 1e-12) return Verdict::GAP;
  return Verdict::PASS;
}

}  // namespace symnorm
