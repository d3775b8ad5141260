#pragma once
/**
 * @file sym_tensor.hpp
 * @brief Symmetric tensors as homogeneous polynomials in coefficient form.
 *
 * A symmetric d-mode tensor S on C^n is stored through the coefficients f_j
 * of its associated homogeneous polynomial
 *
 *     f(x) = sum_{j in J(d,n)} c(j) f_j x^j,   c(j) = d!/(j_1!...j_n!),
 *
 * held densely over the ascending-lexicographic enumeration of J(d,n).  In
 * this convention the Hilbert-Schmidt norm is the weighted l2 norm
 * sqrt(sum c(j)|f_j|^2), and the gradient map F = (1/d) grad f coincides with
 * the contraction of S against d-1 copies of x.
 */

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "symnorm/multi_index.hpp"

namespace symnorm {

using cdouble = std::complex<double>;
using VectorC = Eigen::VectorXcd;
using MatrixC = Eigen::MatrixXcd;

class SymTensor {
 public:
  /// Zero tensor of shape (n, d).
  SymTensor(int n, int d);

  int n() const { return n_; }
  int d() const { return d_; }

  /// Dense f_j coefficients over enumerate_indices(d, n).
  const VectorC& fj() const { return fj_; }
  VectorC& fj_mutable() { return fj_; }

  /// The enumeration backing fj(), shared with index_rank().
  const std::vector<MultiIndex>& indices() const { return idx_; }

  /// f_j accessor by multi-index (validated).
  cdouble coeff(const MultiIndex& j) const;
  void set_coeff(const MultiIndex& j, cdouble fj);

  /// True when max |Im f_j| <= 1e-14 * max |f_j| at the last refresh;
  /// borderline inputs are treated as complex.
  bool is_real() const { return real_; }

  /// Recomputes the real flag after external mutation of fj_mutable().
  void refresh_real_flag();

 private:
  int n_, d_;
  VectorC fj_;
  std::vector<MultiIndex> idx_;
  bool real_ = true;
};

/// Builds a tensor from monomial coefficients a_j (f(x) = sum a_j x^j),
/// storing f_j = a_j / c(j).  Keys must sum to d.
SymTensor from_monomial_coefficients(int n, int d,
                                     const std::map<MultiIndex, cdouble>& a);

/// Builds a tensor directly from f_j coefficients.
SymTensor from_fj_coefficients(int n, int d,
                               const std::map<MultiIndex, cdouble>& fj);

/// f(x) = sum c(j) f_j x^j.
cdouble evaluate(const SymTensor& S, const VectorC& x);

/// F(x) = (1/d) grad f(x); satisfies the Euler identity sum x_i F_i = f(x).
VectorC grad_map_F(const SymTensor& S, const VectorC& x);

/// H(x) = conj(F(conj(F(x)))), homogeneous of degree (d-1)^2.
VectorC map_H(const SymTensor& S, const VectorC& x);

/// Hilbert-Schmidt norm sqrt(sum c(j)|f_j|^2).
double hs_norm(const SymTensor& S);

/// Hilbert-Schmidt inner product sum c(j) f_j conj(g_j).
cdouble hs_inner(const SymTensor& S, const SymTensor& T);

/// Tensor with conjugated coefficients (the polynomial of conj(S)).
SymTensor conjugate(const SymTensor& S);

/// alpha*S + beta*T for same-shape tensors.
SymTensor lin_comb(cdouble alpha, const SymTensor& S, cdouble beta,
                   const SymTensor& T);

/// For a tensor with exactly two nonzero coefficients a x^j + b x^k, returns
/// the modulus form |a| x^j + |b| x^k and flag=true: the complex spectral
/// norm is unchanged and equals the real spectral norm of the returned
/// tensor.  Any other tensor is returned unchanged with flag=false.
std::pair<SymTensor, bool> two_monomial_normalize(const SymTensor& S);

/// Clique quartic f_A = sum A_ij x_i^2 x_j^2 of a simple-graph adjacency
/// matrix; entries 1/3 at every index pattern {i,i,j,j}.  Its Hilbert-Schmidt
/// norm is sqrt(2e)/sqrt(3) with 2e = number of ones in A.
SymTensor graph_quartic(const Eigen::MatrixXi& adjacency);

}  // namespace symnorm
