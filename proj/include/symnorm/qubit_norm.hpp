#pragma once
/**
 * @file qubit_norm.hpp
 * @brief Two-variable fast path: spectral norms via univariate root finding.
 *
 * A degree-d form in two variables, f = sum_k binom(d,k) s_k x1^(d-k) x2^k,
 * dehomogenizes to phi(z) = sum binom(d,k) s_k z^k.  Its complex spectral
 * norm is max{|s_d|, max |phi(z)|/(1+|z|^2)^(d/2) over roots z of zv-u},
 * and its real spectral norm (real s) is the same max over real roots of
 * zq-p, where p = phi'/d, q = phi - z phi'/d, and u, v re-homogenize p and q
 * through (p(z), q(z)).  The finitely many coefficient vectors for which
 * zv-u vanishes identically are catalogued exceptional classes with closed
 * forms or a perturbation route.
 */

#include <utility>
#include <vector>

#include "symnorm/norm_report.hpp"
#include "symnorm/sym_tensor.hpp"
#include "symnorm/unipoly.hpp"

namespace symnorm {

/// Coefficient vector s = (s_0,...,s_d) and the derived polynomials.
struct QubitCoeffs {
  int d = 0;
  std::vector<cdouble> s;  ///< length d+1
  ComplexPolynomial phi;   ///< sum binom(d,k) s_k z^k
  ComplexPolynomial p;     ///< sum binom(d-1,j) s_{j+1} z^j = phi'/d
  ComplexPolynomial q;     ///< sum binom(d-1,j) s_j z^j = phi - z phi'/d
  ComplexPolynomial u;     ///< sum binom(d-1,j) conj(s_{j+1}) p^j q^(d-1-j)
  ComplexPolynomial v;     ///< sum binom(d-1,j) conj(s_j)     p^j q^(d-1-j)
  double s_scale = 0.0;    ///< max |s_k|
  bool real = false;       ///< max |Im s_k| <= 1e-14 * s_scale
};

enum class ExceptionalTag {
  Generic,      ///< zv-u not identically zero: the root formula applies
  PureTop,      ///< s = (0,...,0,s_d): norm |s_d|
  Monomial,     ///< exactly one s_k != 0 with k in [1,d-1]: closed form
  TwoRootForm,  ///< phi = A (z+a)^p (z+b)^(d-p) with a b-bar = -1
  RealCircle    ///< d even, real s, phi = A (z^2+1)^(d/2): real norm |A|
};

/// Classification outcome; only the fields of the active tag are meaningful.
struct ExceptionalClass {
  ExceptionalTag tag = ExceptionalTag::Generic;
  int k = 0;          ///< Monomial: index of the nonzero s_k
  int p = 0;          ///< TwoRootForm: multiplicity of the root -a of phi
  double c = 0.0;     ///< TwoRootForm: |a| (a = e^{-i theta} c, b = -e^{-i theta}/c)
  double theta = 0.0; ///< TwoRootForm: -arg(a)
  cdouble A = 0.0;    ///< Monomial / TwoRootForm / RealCircle amplitude
};

/// Builds phi, p, q, u, v from s (low index = x1-heavy monomial) and
/// verifies the construction identities p = phi'/d and q = phi - z phi'/d to
/// 1e-10 relative.  Throws DegreeTooSmall for d < 3, InternalError if an
/// identity check fails.
QubitCoeffs build(const std::vector<cdouble>& s);

/// Convenience overload for Eigen coefficient vectors.
inline QubitCoeffs build(const VectorC& s) {
  return build(std::vector<cdouble>(s.data(), s.data() + s.size()));
}

/// s_k = f_{(d-k,k)} of a two-variable tensor (the multinomial weights of
/// the two conventions coincide: c((d-k,k)) = binom(d,k)).
QubitCoeffs build_from_tensor(const SymTensor& S);

/// Decides the exceptional class.  Precedence: PureTop, Monomial, RealCircle,
/// TwoRootForm, Generic.  RealCircle is tested before TwoRootForm because
/// phi = A(z^2+1)^(d/2) also matches the two-root pattern (a=i, b=-i).
/// Throws UnclassifiedExceptional when zv-u vanishes but phi matches no
/// catalogued form.
ExceptionalClass classify(const QubitCoeffs& qc);

/// Closed form |A| binom(d,k) (1-k/d)^((d-k)/2) (k/d)^(k/2) for
/// f = A binom(d,k) x1^(d-k) x2^k.  Throws InvalidIndex unless 1 <= k <= d-1.
double monomial_norm(cdouble A, int k, int d);

/// Complex spectral norm.  Generic: max over roots of zv-u (no antifix
/// filtering; every root certifies a lower bound and the maximizer is among
/// them).  PureTop/Monomial: closed form.  TwoRootForm/RealCircle: delegates
/// to exceptional_norm with delta = 1e-6.
NormReport complex_norm(const QubitCoeffs& qc);

/// Real spectral norm for real s: max{|s_d|, max over real roots of zq-p}.
/// RealCircle delegates to |A| without root solving.  Throws InternalError
/// when called with non-real coefficients.
NormReport real_norm(const QubitCoeffs& qc);

/// Perturbation route for TwoRootForm / RealCircle complex norms: rotate the
/// root pair onto the real axis (a unitary change of x2-phase), scale to
/// A = 1, add omega = delta/4 to s_0, verify the perturbed form is Generic,
/// and rescale the generic norm by |A|.  Relative error < delta.
/// Throws InternalError if delta is outside (0,1) or the perturbed form is
/// still exceptional, and the class check if qc is not TwoRootForm-shaped.
NormReport exceptional_norm(const QubitCoeffs& qc, double delta);

/// One point of the projective-root representation of a binary form.
struct MajoranaPoint {
  cdouble value;            ///< finite root of phi (unused at infinity)
  bool at_infinity = false;
  int multiplicity = 1;
};

/// Roots of phi with multiplicity, plus the point at infinity with
/// multiplicity d - deg(phi) when positive.  Total multiplicity is d.
/// Throws ZeroTensor when s = 0.
std::vector<MajoranaPoint> majorana_roots(const QubitCoeffs& qc);

}  // namespace symnorm
