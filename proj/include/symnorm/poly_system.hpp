#pragma once
/**
 * @file poly_system.hpp
 * @brief Dense multivariate complex polynomials and square systems.
 *
 * An MPoly stores one exponent row per term plus the complex coefficients.
 * A PolySystem carries a declared total degree per equation alongside the
 * actual monomial degrees: gradient components of degenerate forms can have
 * lower actual degree (f = x1^d gives F_2 - x_2 = -x_2), but the homotopy
 * must still budget (d-1) start paths for them so that the surplus paths
 * diverge and the divergence count diagnoses singularity.
 */

#include <Eigen/Dense>
#include <vector>

#include "symnorm/errors.hpp"
#include "symnorm/sym_tensor.hpp"

namespace symnorm {

class MPoly {
 public:
  MPoly() = default;
  /// exps: one row per term (columns = variables); coefs: matching length.
  MPoly(Eigen::MatrixXi exps, VectorC coefs);

  int nvars() const { return static_cast<int>(exps_.cols()); }
  int terms() const { return static_cast<int>(exps_.rows()); }
  const Eigen::MatrixXi& exps() const { return exps_; }
  const VectorC& coefs() const { return coefs_; }

  cdouble eval(const VectorC& x) const;
  /// Gradient (one partial per variable) at x.
  VectorC grad_eval(const VectorC& x) const;

  /// Max total degree over terms (0 for the empty polynomial).
  int degree() const;
  /// Max |coefficient| (0 for the empty polynomial).
  double scale() const;

 private:
  Eigen::MatrixXi exps_;  // terms x nvars
  VectorC coefs_;
};

struct PolySystem {
  std::vector<MPoly> equations;
  std::vector<int> degrees;  ///< declared per-equation degrees (>= actual)

  int m() const { return static_cast<int>(equations.size()); }
  /// D = product of declared degrees, exact as an integer.
  long long total_degree() const;
};

/// Square system with degrees taken from the actual monomials.
PolySystem make_system(std::vector<MPoly> equations);

/// Square system with caller-declared degrees (each >= the actual degree and
/// >= 1; InternalError otherwise).  Enforces the desk-scale caps m <= 10 and
/// D <= 20000 (CapExceeded).
PolySystem make_system(std::vector<MPoly> equations,
                       std::vector<int> declared_degrees);

/// max_i |g_i(x)| / (1 + coefficient scale of g_i).
double residual(const PolySystem& sys, const VectorC& x);

}  // namespace symnorm
