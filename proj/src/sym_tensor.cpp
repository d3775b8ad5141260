#include "symnorm/sym_tensor.hpp"

#include <cmath>

#include "symnorm/errors.hpp"

namespace symnorm {

SymTensor::SymTensor(int n, int d) : n_(n), d_(d) {
  if (n < 1) throw DimensionMismatch("n must be >= 1");
  if (d < 2) throw DegreeMismatch("d must be >= 2");
  idx_ = enumerate_indices(d, n);
  fj_ = VectorC::Zero(static_cast<Eigen::Index>(idx_.size()));
}

cdouble SymTensor::coeff(const MultiIndex& j) const {
  validate_index(j, d_, n_);
  return fj_[index_rank(j)];
}

void SymTensor::set_coeff(const MultiIndex& j, cdouble fj) {
  validate_index(j, d_, n_);
  fj_[index_rank(j)] = fj;
  refresh_real_flag();
}

void SymTensor::refresh_real_flag() {
  double max_abs = 0.0, max_im = 0.0;
  for (Eigen::Index i = 0; i < fj_.size(); ++i) {
    max_abs = std::max(max_abs, std::abs(fj_[i]));
    max_im = std::max(max_im, std::abs(fj_[i].imag()));
  }
  real_ = (max_im <= 1e-14 * max_abs) || max_abs == 0.0;
}

SymTensor from_monomial_coefficients(int n, int d,
                                     const std::map<MultiIndex, cdouble>& a) {
  SymTensor S(n, d);
  for (const auto& [j, aj] : a) {
    validate_index(j, d, n);
    S.fj_mutable()[index_rank(j)] = aj / multinomial(j);
  }
  S.refresh_real_flag();
  return S;
}

SymTensor from_fj_coefficients(int n, int d,
                               const std::map<MultiIndex, cdouble>& fj) {
  SymTensor S(n, d);
  for (const auto& [j, v] : fj) {
    validate_index(j, d, n);
    S.fj_mutable()[index_rank(j)] = v;
  }
  S.refresh_real_flag();
  return S;
}

namespace {

cdouble monomial_power(const VectorC& x, const MultiIndex& j) {
  cdouble m = 1.0;
  for (size_t k = 0; k < j.size(); ++k)
    for (int t = 0; t < j[k]; ++t) m *= x[static_cast<Eigen::Index>(k)];
  return m;
}

}  // namespace

cdouble evaluate(const SymTensor& S, const VectorC& x) {
  if (x.size() != S.n()) throw DimensionMismatch("evaluate: x length != n");
  cdouble acc = 0.0;
  const auto& idx = S.indices();
  for (size_t r = 0; r < idx.size(); ++r) {
    cdouble fj = S.fj()[static_cast<Eigen::Index>(r)];
    if (fj == 0.0) continue;
    acc += multinomial(idx[r]) * fj * monomial_power(x, idx[r]);
  }
  return acc;
}

VectorC grad_map_F(const SymTensor& S, const VectorC& x) {
  if (x.size() != S.n()) throw DimensionMismatch("grad_map_F: x length != n");
  const int n = S.n(), d = S.d();
  VectorC F = VectorC::Zero(n);
  const auto& idx = S.indices();
  MultiIndex jm;
  for (size_t r = 0; r < idx.size(); ++r) {
    cdouble fj = S.fj()[static_cast<Eigen::Index>(r)];
    if (fj == 0.0) continue;
    const MultiIndex& j = idx[r];
    cdouble base = multinomial(j) * fj / static_cast<double>(d);
    for (int i = 0; i < n; ++i) {
      if (j[i] == 0) continue;
      jm = j;
      jm[i] -= 1;
      F[i] += base * static_cast<double>(j[i]) * monomial_power(x, jm);
    }
  }
  return F;
}

VectorC map_H(const SymTensor& S, const VectorC& x) {
  VectorC y = grad_map_F(S, x);
  return grad_map_F(S, y.conjugate()).conjugate();
}

double hs_norm(const SymTensor& S) {
  double acc = 0.0;
  const auto& idx = S.indices();
  for (size_t r = 0; r < idx.size(); ++r)
    acc += multinomial(idx[r]) * std::norm(S.fj()[static_cast<Eigen::Index>(r)]);
  return std::sqrt(acc);
}

cdouble hs_inner(const SymTensor& S, const SymTensor& T) {
  if (S.n() != T.n() || S.d() != T.d())
    throw DimensionMismatch("hs_inner: shape mismatch");
  cdouble acc = 0.0;
  const auto& idx = S.indices();
  for (size_t r = 0; r < idx.size(); ++r)
    acc += multinomial(idx[r]) * S.fj()[static_cast<Eigen::Index>(r)] *
           std::conj(T.fj()[static_cast<Eigen::Index>(r)]);
  return acc;
}

SymTensor conjugate(const SymTensor& S) {
  SymTensor T(S.n(), S.d());
  T.fj_mutable() = S.fj().conjugate();
  T.refresh_real_flag();
  return T;
}

SymTensor lin_comb(cdouble alpha, const SymTensor& S, cdouble beta,
                   const SymTensor& T) {
  if (S.n() != T.n() || S.d() != T.d())
    throw DimensionMismatch("lin_comb: shape mismatch");
  SymTensor R(S.n(), S.d());
  R.fj_mutable() = alpha * S.fj() + beta * T.fj();
  R.refresh_real_flag();
  return R;
}

std::pair<SymTensor, bool> two_monomial_normalize(const SymTensor& S) {
  std::vector<Eigen::Index> nz;
  for (Eigen::Index i = 0; i < S.fj().size(); ++i)
    if (S.fj()[i] != 0.0) nz.push_back(i);
  if (nz.size() != 2) return {S, false};
  SymTensor T(S.n(), S.d());
  for (Eigen::Index i : nz) T.fj_mutable()[i] = std::abs(S.fj()[i]);
  T.refresh_real_flag();
  return {T, true};
}

SymTensor graph_quartic(const Eigen::MatrixXi& adjacency) {
  const Eigen::Index n = adjacency.rows();
  if (adjacency.cols() != n) throw InvalidGraph("adjacency must be square");
  int ones = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjacency(i, i) != 0) throw InvalidGraph("nonzero diagonal");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (adjacency(i, j) != adjacency(j, i)) throw InvalidGraph("asymmetric adjacency");
      if (adjacency(i, j) != 0 && adjacency(i, j) != 1)
        throw InvalidGraph("entries must be 0/1");
      ones += adjacency(i, j) != 0;
    }
  }
  if (ones == 0) throw InvalidGraph("graph has no edges");
  SymTensor S(static_cast<int>(n), 4);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (adjacency(i, j) == 0) continue;
      MultiIndex m(static_cast<size_t>(n), 0);
      m[static_cast<size_t>(i)] = 2;
      m[static_cast<size_t>(j)] = 2;
      S.fj_mutable()[index_rank(m)] = 1.0 / 3.0;
    }
  S.refresh_real_flag();
  return S;
}

}  // namespace symnorm
