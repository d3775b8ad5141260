#include "symnorm/fixed_point.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "symnorm/errors.hpp"
#include "symnorm/multi_index.hpp"

namespace symnorm {

namespace {

constexpr double kOriginSlack = 1e-6;   // origin-exclusion radius shrink
constexpr double kRealTol = 1e-7;       // imaginary-part tolerance
constexpr double kAntifixTol = 1e-6;    // anti-fixed residual scale
constexpr double kOriginNorm = 1e-6;    // |v| below this is the origin cluster

/// Gradient components F_i as dense polynomials over `arity` variables, the
/// tensor's own variables living at columns [var_offset, var_offset + n).
/// With conj_coeffs the coefficients are conjugated, which is the polynomial
/// identity conj(F(conj(y))) = (conj-F)(y).
std::vector<MPoly> gradient_polys(const SymTensor& S, int arity,
                                  int var_offset, bool conj_coeffs) {
  const int n = S.n();
  const int d = S.d();
  std::vector<MPoly> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<MultiIndex> rows;
    std::vector<cdouble> coefs;
    const auto& idx = S.indices();
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const MultiIndex& j = idx[r];
      if (j[i] == 0 || S.fj()[static_cast<Eigen::Index>(r)] == cdouble(0.0)) {
        continue;
      }
      cdouble c = S.fj()[static_cast<Eigen::Index>(r)] * multinomial(j) *
                  (static_cast<double>(j[i]) / d);
      rows.push_back(j);
      rows.back()[i] -= 1;
      coefs.push_back(conj_coeffs ? std::conj(c) : c);
    }
    Eigen::MatrixXi exps =
        Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(rows.size()), arity);
    VectorC cs(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (int k = 0; k < n; ++k) {
        exps(static_cast<Eigen::Index>(r), var_offset + k) = rows[r][k];
      }
      cs[static_cast<Eigen::Index>(r)] = coefs[r];
    }
    out.emplace_back(std::move(exps), std::move(cs));
  }
  return out;
}

/// p - (the variable at column var), appended as one extra linear term.
MPoly minus_variable(const MPoly& p, int var) {
  Eigen::MatrixXi exps(p.terms() + 1, p.nvars());
  VectorC cs(p.terms() + 1);
  exps.topRows(p.terms()) = p.exps();
  cs.head(p.terms()) = p.coefs();
  exps.row(p.terms()).setZero();
  exps(p.terms(), var) = 1;
  cs[p.terms()] = cdouble(-1.0);
  return MPoly(std::move(exps), std::move(cs));
}

void require_fixed_point_degree(const SymTensor& S) {
  if (S.d() < 3) {
    throw DegreeTooSmall(
        "fixed-point route needs degree >= 3; use the matrix 2-norm for "
        "d = 2");
  }
}

bool is_real_vector(const VectorC& v) {
  double imag = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    imag = std::max(imag, std::abs(v[k].imag()));
  }
  return imag <= kRealTol * (1.0 + v.norm());
}

double origin_exclusion_radius(const SymTensor& S) {
  const double hs = hs_norm(S);
  return std::pow(hs, -1.0 / (S.d() - 2)) * (1.0 - kOriginSlack);
}

struct PathDiagnostics {
  double expected;
  double found;
  double diverged;
  double failed;
};

PathDiagnostics path_diagnostics(const PolySystem& sys,
                                 const SolutionSet& sol) {
  int found = 0;
  for (const auto& pt : sol.points) found += pt.path_count;
  return {static_cast<double>(sys.total_degree()), static_cast<double>(found),
          static_cast<double>(sol.diverged_paths),
          static_cast<double>(sol.failed_paths)};
}

}  // namespace

PolySystem fix_F_system(const SymTensor& S) {
  require_fixed_point_degree(S);
  const int n = S.n();
  std::vector<MPoly> eqs;
  eqs.reserve(n);
  auto F = gradient_polys(S, n, 0, /*conj_coeffs=*/false);
  for (int i = 0; i < n; ++i) {
    eqs.push_back(minus_variable(F[i], i));
  }
  return make_system(std::move(eqs), std::vector<int>(n, S.d() - 1));
}

PolySystem fix_H_system(const SymTensor& S) {
  require_fixed_point_degree(S);
  const int n = S.n();
  std::vector<MPoly> eqs;
  eqs.reserve(2 * n);
  auto Fx = gradient_polys(S, 2 * n, 0, /*conj_coeffs=*/false);
  auto Fy = gradient_polys(S, 2 * n, n, /*conj_coeffs=*/true);
  for (int i = 0; i < n; ++i) {
    eqs.push_back(minus_variable(Fx[i], n + i));  // F_i(x) - y_i
  }
  for (int i = 0; i < n; ++i) {
    eqs.push_back(minus_variable(Fy[i], i));  // conj-F_i(y) - x_i
  }
  return make_system(std::move(eqs), std::vector<int>(2 * n, S.d() - 1));
}

NormReport complex_spectral_norm(const SymTensor& S, const SolveOptions& opts) {
  require_fixed_point_degree(S);
  if (hs_norm(S) == 0.0) {
    throw ZeroTensor("complex_spectral_norm: zero tensor");
  }
  const int n = S.n();
  const int d = S.d();
  PolySystem sys = fix_H_system(S);
  SolutionSet sol = solve_total_degree(sys, opts);
  const double radius = origin_exclusion_radius(S);

  NormReport rep;
  rep.field = Field::Complex;
  rep.method = "homotopy-H";

  double best = 0.0;
  int best_idx = -1;
  double best_xnorm = 0.0;
  int real_points = 0;
  int origin_multiplicity = 0;
  std::vector<double> candidate_xnorms;
  for (std::size_t i = 0; i < sol.points.size(); ++i) {
    const SolutionPoint& pt = sol.points[i];
    if (is_real_vector(pt.x)) ++real_points;
    if (pt.x.norm() <= kOriginNorm) origin_multiplicity += pt.path_count;
    VectorC x = pt.x.head(n);
    const double xnorm = x.norm();
    if (xnorm < radius) continue;  // origin cluster (or spurious near-zero)
    candidate_xnorms.push_back(xnorm);
    const double value = std::abs(evaluate(S, x)) / std::pow(xnorm, d);
    if (value > best) {
      best = value;
      best_idx = static_cast<int>(i);
      best_xnorm = xnorm;
    }
  }

  // Every nonzero fixed point of H obeys |x|^{-(d-2)} <= norm, with equality
  // exactly at the maximizers; violations indicate mis-tracked paths.
  int radius_violations = 0;
  for (double xnorm : candidate_xnorms) {
    if (std::pow(xnorm, -(d - 2.0)) > best + 1e-7) ++radius_violations;
  }

  rep.value = best;
  if (best_idx >= 0) {
    VectorC x = sol.points[best_idx].x.head(n);
    rep.witness = x / x.norm();
    rep.witness_residual = sol.points[best_idx].residual;
    rep.diagnostics.emplace_back(
        "norm_from_radius_gap",
        std::abs(std::pow(best_xnorm, -(d - 2.0)) - best));
  }
  rep.lower_bound_only = sol.tracking_unreliable || best_idx < 0;

  PathDiagnostics pd = path_diagnostics(sys, sol);
  rep.diagnostics.emplace_back("expected_paths", pd.expected);
  rep.diagnostics.emplace_back("found_multiplicity", pd.found);
  rep.diagnostics.emplace_back("diverged_paths", pd.diverged);
  rep.diagnostics.emplace_back("failed_paths", pd.failed);
  rep.diagnostics.emplace_back("distinct_points",
                               static_cast<double>(sol.points.size()));
  rep.diagnostics.emplace_back("real_points", static_cast<double>(real_points));
  rep.diagnostics.emplace_back(
      "complex_points",
      static_cast<double>(sol.points.size()) - real_points);
  rep.diagnostics.emplace_back("origin_multiplicity",
                               static_cast<double>(origin_multiplicity));
  rep.diagnostics.emplace_back("radius_bound_violations",
                               static_cast<double>(radius_violations));
  return rep;
}

NormReport real_spectral_norm(const SymTensor& S, const SolveOptions& opts) {
  require_fixed_point_degree(S);
  if (!S.is_real()) {
    throw InternalError("real_spectral_norm: tensor is not real");
  }
  if (hs_norm(S) == 0.0) {
    throw ZeroTensor("real_spectral_norm: zero tensor");
  }
  const int n = S.n();
  const int d = S.d();
  PolySystem sys = fix_F_system(S);
  SolutionSet sol = solve_total_degree(sys, opts);
  const double radius = origin_exclusion_radius(S);

  // Candidate real vectors: real fixed points of F always; for even d also
  // the real members of conj(omega) fix(F), omega = e^{i pi/(d-2)}, since
  // real critical points then come in omega-twisted complex pairs.
  std::vector<std::pair<Eigen::VectorXd, int>> candidates;  // (x, point idx)
  int twisted_candidates = 0;
  const cdouble twist = std::polar(1.0, -M_PI / (d - 2));
  for (std::size_t i = 0; i < sol.points.size(); ++i) {
    const VectorC& x = sol.points[i].x;
    if (is_real_vector(x)) {
      candidates.emplace_back(x.real(), static_cast<int>(i));
    }
    if (d % 2 == 0) {
      VectorC tx = twist * x;
      if (is_real_vector(tx)) {
        candidates.emplace_back(tx.real(), static_cast<int>(i));
        ++twisted_candidates;
      }
    }
  }

  NormReport rep;
  rep.field = Field::Real;
  rep.method = "homotopy-F";

  double best = 0.0;
  int best_cand = -1;
  int real_candidates = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const Eigen::VectorXd& xr = candidates[c].first;
    const double xnorm = xr.norm();
    if (xnorm < radius) continue;
    ++real_candidates;
    const double value =
        std::abs(evaluate(S, xr.cast<cdouble>())) / std::pow(xnorm, d);
    if (value > best) {
      best = value;
      best_cand = static_cast<int>(c);
    }
  }

  rep.value = best;
  if (best_cand >= 0) {
    const Eigen::VectorXd& xr = candidates[best_cand].first;
    rep.witness = (xr / xr.norm()).cast<cdouble>();
    rep.witness_residual = sol.points[candidates[best_cand].second].residual;
  }
  rep.lower_bound_only = sol.tracking_unreliable || best_cand < 0;

  PathDiagnostics pd = path_diagnostics(sys, sol);
  rep.diagnostics.emplace_back("expected_paths", pd.expected);
  rep.diagnostics.emplace_back("found_multiplicity", pd.found);
  rep.diagnostics.emplace_back("diverged_paths", pd.diverged);
  rep.diagnostics.emplace_back("failed_paths", pd.failed);
  rep.diagnostics.emplace_back("distinct_points",
                               static_cast<double>(sol.points.size()));
  rep.diagnostics.emplace_back("real_candidates",
                               static_cast<double>(real_candidates));
  rep.diagnostics.emplace_back("twisted_candidates",
                               static_cast<double>(twisted_candidates));
  return rep;
}

FixedPointInventory antifixed_points(const SymTensor& S,
                                     const SolveOptions& opts) {
  require_fixed_point_degree(S);
  if (hs_norm(S) == 0.0) {
    throw ZeroTensor("antifixed_points: zero tensor");
  }
  const int n = S.n();
  const int d = S.d();
  PolySystem sys = fix_H_system(S);
  SolutionSet sol = solve_total_degree(sys, opts);

  FixedPointInventory inv;
  inv.field = Field::Complex;
  inv.expected = sys.total_degree();
  inv.diverged = sol.diverged_paths;
  for (const auto& pt : sol.points) {
    inv.found_multiplicity += pt.path_count;
    SolutionPoint xpart = pt;
    xpart.x = pt.x.head(n).eval();
    inv.points.push_back(std::move(xpart));
  }

  std::vector<VectorC> antifix_nonzero;
  for (std::size_t i = 0; i < inv.points.size(); ++i) {
    const VectorC& x = inv.points[i].x;
    VectorC gap = grad_map_F(S, x) - x.conjugate();
    const double tol = kAntifixTol * std::pow(1.0 + x.norm(), d - 1);
    if (gap.norm() <= tol) {
      inv.antifix_subset.push_back(static_cast<int>(i));
      if (x.norm() > kOriginNorm) antifix_nonzero.push_back(x);
    }
  }

  // Orbit count under x -> zeta x, zeta^d = 1 (the anti-fixed set is closed
  // under this scaling; the count-bound estimates speak about orbits).
  std::vector<bool> used(antifix_nonzero.size(), false);
  for (std::size_t i = 0; i < antifix_nonzero.size(); ++i) {
    if (used[i]) continue;
    ++inv.mu_orbits;
    for (std::size_t j = i + 1; j < antifix_nonzero.size(); ++j) {
      if (used[j]) continue;
      for (int k = 0; k < d; ++k) {
        const cdouble zeta = std::polar(1.0, 2.0 * M_PI * k / d);
        if ((antifix_nonzero[i] - zeta * antifix_nonzero[j]).norm() <=
            1e-6 * (1.0 + antifix_nonzero[i].norm())) {
          used[j] = true;
          break;
        }
      }
    }
  }

  inv.mu_lower = (std::pow(d - 1.0, n) - 1.0) / d;
  inv.mu_upper = 0.0;
  for (int k = 0; k < n; ++k) inv.mu_upper += std::pow(d - 1.0, 2 * k);
  inv.bounds_satisfied = inv.mu_orbits + 1e-9 >= inv.mu_lower &&
                         inv.mu_orbits <= inv.mu_upper + 1e-9;
  return inv;
}

SingularityReport singularity_diagnostic(const SymTensor& S,
                                         const SolveOptions& opts) {
  require_fixed_point_degree(S);
  PolySystem sys = fix_F_system(S);
  SolutionSet sol = solve_total_degree(sys, opts);
  SingularityReport rep;
  rep.expected = sys.total_degree();
  for (const auto& pt : sol.points) rep.found_multiplicity += pt.path_count;
  rep.diverged_paths = sol.diverged_paths;
  rep.failed_paths = sol.failed_paths;
  rep.singular = sol.diverged_paths > 0;
  return rep;
}

}  // namespace symnorm
