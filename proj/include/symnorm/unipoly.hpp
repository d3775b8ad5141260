#pragma once
/**
 * @file unipoly.hpp
 * @brief Dense univariate complex polynomials and a simultaneous root finder.
 *
 * Coefficients are stored low-to-high (index k = coefficient of z^k) with
 * trailing exact zeros trimmed.  The zero polynomial has an empty coefficient
 * list and degree kDegNegInf.  Root finding runs the Aberth-Ehrlich
 * simultaneous iteration from a perturbed circle, polishes with Newton steps,
 * and merges clusters into multiple roots.
 */

#include <complex>
#include <limits>
#include <vector>

#include "symnorm/errors.hpp"

namespace symnorm {

using cdouble = std::complex<double>;

class ComplexPolynomial {
 public:
  /// Degree marker of the zero polynomial.
  static constexpr int kDegNegInf = std::numeric_limits<int>::min();

  ComplexPolynomial() = default;
  /// From low-to-high coefficients; trailing exact zeros are trimmed.
  explicit ComplexPolynomial(std::vector<cdouble> coeffs);

  /// kDegNegInf for the zero polynomial, len-1 otherwise.
  int degree() const;
  bool is_zero() const { return c_.empty(); }

  /// max |coeff| (0 for the zero polynomial).
  double scale() const { return scale_; }

  const std::vector<cdouble>& coeffs() const { return c_; }

  /// Coefficient of z^k (0 beyond the stored range).
  cdouble coeff(size_t k) const { return k < c_.size() ? c_[k] : cdouble(0.0); }

  /// Horner evaluation.
  cdouble eval(cdouble z) const;

 private:
  std::vector<cdouble> c_;
  double scale_ = 0.0;
};

ComplexPolynomial add(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial sub(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial mul(const ComplexPolynomial& a, const ComplexPolynomial& b);
ComplexPolynomial scalar_mul(cdouble s, const ComplexPolynomial& a);
ComplexPolynomial derivative(const ComplexPolynomial& a);
/// a^k by repeated multiplication (a^0 = 1).
ComplexPolynomial compose_power(const ComplexPolynomial& a, int k);
/// The monomial z (handy for building z*v - u and z*q - p).
ComplexPolynomial shift_up(const ComplexPolynomial& a);

/// True iff max|coeffs| <= rel_eps * construction_scale.  The caller supplies
/// the scale at which the polynomial was constructed so that "zero" means
/// "zero relative to the sizes that entered the computation".
bool is_zero_poly(const ComplexPolynomial& p, double rel_eps,
                  double construction_scale);

struct Root {
  cdouble value;
  int multiplicity = 1;
  double residual = 0.0;  ///< |p(value)| / scale
  /// residual <= max(target_residual, evaluation noise floor at value).  The
  /// floor matters when |value| or the coefficient spread is large enough that
  /// Horner evaluation cannot resolve residuals down to target_residual.
  bool polished = true;
};

struct RootSet {
  std::vector<Root> roots;
  int total_multiplicity() const;
};

/// Root finding failed to converge; carries the partial result.
class SolverStall : public Error {
 public:
  SolverStall(const std::string& what, RootSet partial)
      : Error(what), partial_roots(std::move(partial)) {}
  RootSet partial_roots;
};

/// All complex roots of p with multiplicities.  Exact zero low-order
/// coefficients contribute a root at 0 with their count as multiplicity.
/// Clusters within a graduated radius (at least cluster_radius
/// = 1e-7*(1+|z|), widened by the per-root Newton error estimate so that
/// genuinely multiple roots merge) are reported as one root.
RootSet roots(const ComplexPolynomial& p, double target_residual = 1e-10);

/// Roots with |Im| <= im_tol * (1 + |root|), imaginary part dropped.
std::vector<double> real_roots(const RootSet& rs, double im_tol = 1e-7);

}  // namespace symnorm
