#include "symnorm/homotopy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace symnorm {

namespace {

constexpr double kDivergenceBound = 1e8;
constexpr double kStallInfinityBound = 1e3;
constexpr double kClusterRadius = 1e-6;
constexpr int kCauchySteps = 24;
constexpr int kMaxWinding = 8;

cdouble intpow(cdouble x, int e) {
  cdouble r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

enum class PathKind { Converged, Infinity, Failed };

struct PathOutcome {
  PathKind kind = PathKind::Failed;
  VectorC x;
};

class Tracker {
 public:
  Tracker(const PolySystem& sys, cdouble gamma, double tol)
      : sys_(sys), degs_(sys.degrees), n_(sys.m()), gamma_(gamma), tol_(tol) {}

  PathOutcome run(const VectorC& start) const {
    VectorC x = start;
    double t = 0.0;
    const TrackStatus st = track_to(x, t, 1.0, 0.05, 1e-7);
    PathOutcome out;
    if (st == TrackStatus::Infinity) {
      out.kind = PathKind::Infinity;
      return out;
    }
    if (st == TrackStatus::Reached) {
      out.kind = PathKind::Converged;
      out.x = polish(x);
      return out;
    }
    // Stalled short of t = 1.
    if (t >= 1.0 - 1e-6 && residual(sys_, x) < 10.0 * tol_) {
      // The endpoint is already a solution; the remaining gap in t is too
      // small for a Cauchy circle.
      out.kind = PathKind::Converged;
      out.x = x;
      return out;
    }
    if (x.norm() > kStallInfinityBound) {
      out.kind = PathKind::Infinity;
      return out;
    }
    VectorC est;
    switch (refine_limit(x, t, est)) {
      case LimitStatus::Infinity:
        out.kind = PathKind::Infinity;
        return out;
      case LimitStatus::Converged:
        if (residual(sys_, est) < 1000.0 * tol_) {
          out.kind = PathKind::Converged;
          out.x = est;
          return out;
        }
        break;
      case LimitStatus::Failed:
        break;
    }
    out.kind = PathKind::Failed;
    return out;
  }

 private:
  enum class TrackStatus { Reached, Stalled, Infinity };

  VectorC sys_eval(const VectorC& x) const {
    VectorC v(n_);
    for (int i = 0; i < n_; ++i) v[i] = sys_.equations[i].eval(x);
    return v;
  }

  MatrixC sys_jac(const VectorC& x) const {
    MatrixC J(n_, n_);
    for (int i = 0; i < n_; ++i) J.row(i) = sys_.equations[i].grad_eval(x);
    return J;
  }

  VectorC start_eval(const VectorC& x) const {
    VectorC g(n_);
    for (int i = 0; i < n_; ++i) g[i] = intpow(x[i], degs_[i]) - 1.0;
    return g;
  }

  // t is complex during the Cauchy loops; the homotopy is holomorphic in it.
  VectorC Hval(const VectorC& x, cdouble t) const {
    return (1.0 - t) * gamma_ * start_eval(x) + t * sys_eval(x);
  }

  MatrixC Hjac(const VectorC& x, cdouble t) const {
    MatrixC J = t * sys_jac(x);
    for (int i = 0; i < n_; ++i)
      J(i, i) += (1.0 - t) * gamma_ *
                 (static_cast<double>(degs_[i]) * intpow(x[i], degs_[i] - 1));
    return J;
  }

  /// dH/dt, constant in t.
  VectorC Ht(const VectorC& x) const {
    return sys_eval(x) - gamma_ * start_eval(x);
  }

  static bool lin_solve(const MatrixC& A, const VectorC& b, VectorC& out) {
    out = A.partialPivLu().solve(b);
    return out.allFinite();
  }

  bool correct(VectorC& x, cdouble t, double tol_fac, int iters) const {
    for (int it = 0; it < iters; ++it) {
      VectorC step;
      if (!lin_solve(Hjac(x, t), -Hval(x, t), step)) return false;
      x += step;
      if (step.norm() < tol_fac * (1.0 + x.norm())) return true;
    }
    return false;
  }

  TrackStatus track_to(VectorC& x, double& t, double t_end, double dt0,
                       double dtmin) const {
    double dt = dt0;
    int streak = 0;
    while (t < t_end) {
      dt = std::min(dt, t_end - t);
      VectorC dx;
      if (!lin_solve(Hjac(x, t), -Ht(x), dx)) return TrackStatus::Stalled;
      VectorC xp = x + dx * dt;
      const double tp = t + dt;
      const VectorC predicted = xp;
      // Displacement guard: the corrector must stay near the predicted point.
      // Without it a path heading to infinity can hop onto a finite branch in
      // the last step (at t = 1 an equation whose actual degree is below its
      // declared degree gives Newton a huge basin), hiding the divergence
      // that diagnoses singular systems.
      if (correct(xp, tp, tol_, 3) &&
          (xp - predicted).norm() <=
              std::max(0.5 * dx.norm() * dt, 1e-8 * (1.0 + predicted.norm()))) {
        x = xp;
        t = tp;
        if (++streak >= 4) {
          dt *= 1.5;
          streak = 0;
        }
      } else {
        dt *= 0.5;
        streak = 0;
        if (dt < dtmin) return TrackStatus::Stalled;
      }
      if (x.norm() > kDivergenceBound) return TrackStatus::Infinity;
    }
    return TrackStatus::Reached;
  }

  /// One circuit family around t = 1 - eps e^{i theta}.  Returns true with
  /// the mean of the loop samples once the loop closes (winding detected by
  /// return-to-start); the mean over a full winding cycle converges to the
  /// path limit as eps -> 0.
  bool cauchy_loop(const VectorC& x, double eps, VectorC& mean_out) const {
    VectorC xc = x;
    const VectorC x0 = x;
    VectorC acc = VectorC::Zero(n_);
    int samples = 0;
    double th = 0.0;
    const double dth = 2.0 * M_PI / kCauchySteps;
    for (int w = 0; w < kMaxWinding; ++w) {
      for (int k = 0; k < kCauchySteps; ++k) {
        acc += xc;
        ++samples;
        const cdouble t_c = 1.0 - eps * std::polar(1.0, th);
        const cdouble t_n = 1.0 - eps * std::polar(1.0, th + dth);
        VectorC dx;
        if (!lin_solve(Hjac(xc, t_c), -Ht(xc) * (t_n - t_c), dx)) return false;
        VectorC xp = xc + dx;
        if (!correct(xp, t_n, 10.0 * tol_, 6)) return false;
        xc = xp;
        th += dth;
      }
      if ((xc - x0).norm() < 1000.0 * tol_ * (1.0 + xc.norm())) {
        mean_out = acc / static_cast<double>(samples);
        return true;
      }
    }
    return false;
  }

  enum class LimitStatus { Converged, Infinity, Failed };

  /// A limit estimate is only credible when the path sample sits in its
  /// convergence zone: for winding number m the sample-to-limit distance is
  /// O(eps^(1/m)), far below this slack.  A winding average can cancel a
  /// divergent branch exactly (mean of e^{-i theta/m} over closed loops is
  /// zero) and fabricate a finite "limit" the path never approaches; the
  /// consistency check rejects that.
  static bool limit_consistent(const VectorC& x, const VectorC& est) {
    return (x - est).norm() <= 10.0 * (1.0 + est.norm());
  }

  /// Shrinks the endgame radius, re-estimating the limit until two
  /// successive estimates agree to 10*tol relative.  A sample norm that
  /// crosses the stall-infinity bound while the radius shrinks means the
  /// path keeps growing: it is at infinity, not singular-finite.
  LimitStatus refine_limit(VectorC x, double t, VectorC& est_out) const {
    double eps = 1.0 - t;
    VectorC prev;
    bool have_prev = false;
    for (int round = 0; round < 40; ++round) {
      if (eps < 1e-13) break;
      VectorC est;
      if (cauchy_loop(x, eps, est)) {
        if (have_prev && limit_consistent(x, est) &&
            (est - prev).norm() < 10.0 * tol_ * (1.0 + est.norm())) {
          est_out = est;
          return LimitStatus::Converged;
        }
        prev = est;
        have_prev = true;
      }
      double t_cur = 1.0 - eps;
      if (track_to(x, t_cur, 1.0 - eps / 2.0, eps / 10.0, eps * 1e-7) !=
          TrackStatus::Reached)
        break;
      if (x.norm() > kStallInfinityBound) return LimitStatus::Infinity;
      eps /= 2.0;
    }
    if (have_prev && limit_consistent(x, prev)) {
      est_out = prev;
      return LimitStatus::Converged;
    }
    return LimitStatus::Failed;
  }

  /// Damped least-squares Newton; the normal solve degrades at multiple
  /// points where the Jacobian is rank-deficient, the complete orthogonal
  /// decomposition does not.
  VectorC polish(VectorC x, int iters = 60) const {
    for (int it = 0; it < iters; ++it) {
      const VectorC F = sys_eval(x);
      const MatrixC J = sys_jac(x);
      const VectorC step = J.completeOrthogonalDecomposition().solve(-F);
      if (!step.allFinite()) return x;
      double lam = 1.0;
      const double r0 = F.norm();
      VectorC xn = x + step;
      for (int k = 0; k < 8; ++k) {
        xn = x + lam * step;
        if (sys_eval(xn).norm() <= r0 || lam < 1e-3) break;
        lam *= 0.5;
      }
      x = xn;
      if (lam * step.norm() < 1e-13 * (1.0 + x.norm())) break;
    }
    return x;
  }

  const PolySystem& sys_;
  const std::vector<int>& degs_;
  int n_;
  cdouble gamma_;
  double tol_;
};

}  // namespace

SolutionSet solve_total_degree(const PolySystem& sys,
                               const SolveOptions& opts) {
  const int n = sys.m();
  if (n > 10) throw CapExceeded("solve_total_degree: more than 10 variables");
  const long long D = sys.total_degree();
  if (D > 20000)
    throw CapExceeded("solve_total_degree: total degree above 20000");

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const cdouble gamma = std::polar(1.0, 2.0 * M_PI * unif(rng));

  // Start points: the mixed-radix enumeration of per-variable roots of unity.
  std::vector<std::vector<cdouble>> axes(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int d = sys.degrees[static_cast<size_t>(i)];
    for (int k = 0; k < d; ++k)
      axes[static_cast<size_t>(i)].push_back(
          std::polar(1.0, 2.0 * M_PI * k / d));
  }
  const auto start_point = [&](long long pi) {
    VectorC x(n);
    long long rem = pi;
    for (int i = n - 1; i >= 0; --i) {
      const int d = sys.degrees[static_cast<size_t>(i)];
      x[i] = axes[static_cast<size_t>(i)][static_cast<size_t>(rem % d)];
      rem /= d;
    }
    return x;
  };

  const Tracker tracker(sys, gamma, opts.tol);
  std::vector<PathOutcome> outcomes(static_cast<size_t>(D));
  const int threads = std::max(1, opts.threads);
  if (threads == 1 || D == 1) {
    for (long long pi = 0; pi < D; ++pi)
      outcomes[static_cast<size_t>(pi)] = tracker.run(start_point(pi));
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (long long pi = w; pi < D; pi += threads)
          outcomes[static_cast<size_t>(pi)] = tracker.run(start_point(pi));
      });
    for (std::thread& th : pool) th.join();
  }

  SolutionSet set;
  set.tracked_paths = static_cast<int>(D);
  set.seed = opts.seed;
  int n_inf = 0, n_fail = 0;
  for (long long pi = 0; pi < D; ++pi) {
    const PathOutcome& out = outcomes[static_cast<size_t>(pi)];
    if (out.kind == PathKind::Infinity) {
      ++n_inf;
      continue;
    }
    if (out.kind == PathKind::Failed) {
      ++n_fail;
      continue;
    }
    bool merged = false;
    for (SolutionPoint& p : set.points) {
      if ((p.x - out.x).norm() <= kClusterRadius * (1.0 + out.x.norm())) {
        ++p.path_count;
        ++p.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) {
      SolutionPoint p;
      p.x = out.x;  // first landing stays the representative (determinism)
      p.residual = residual(sys, out.x);
      set.points.push_back(std::move(p));
    }
  }
  set.diverged_paths = n_inf + n_fail;
  set.failed_paths = n_fail;
  set.tracking_unreliable =
      n_fail > 0.05 * static_cast<double>(D);
  return set;
}

}  // namespace symnorm
