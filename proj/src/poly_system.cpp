#include "symnorm/poly_system.hpp"

#include <algorithm>
#include <cmath>

namespace symnorm {

namespace {

cdouble intpow(cdouble x, int e) {
  cdouble r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace

MPoly::MPoly(Eigen::MatrixXi exps, VectorC coefs)
    : exps_(std::move(exps)), coefs_(std::move(coefs)) {
  if (exps_.rows() != coefs_.size())
    throw DimensionMismatch("MPoly: exponent rows != coefficient count");
  if (exps_.size() > 0 && exps_.minCoeff() < 0)
    throw InvalidIndex("MPoly: negative exponent");
}

cdouble MPoly::eval(const VectorC& x) const {
  if (x.size() != nvars())
    throw DimensionMismatch("MPoly::eval: wrong point length");
  cdouble acc = 0.0;
  for (int t = 0; t < terms(); ++t) {
    cdouble m = coefs_[t];
    for (int k = 0; k < nvars(); ++k) {
      const int e = exps_(t, k);
      if (e > 0) m *= intpow(x[k], e);
    }
    acc += m;
  }
  return acc;
}

VectorC MPoly::grad_eval(const VectorC& x) const {
  if (x.size() != nvars())
    throw DimensionMismatch("MPoly::grad_eval: wrong point length");
  VectorC g = VectorC::Zero(nvars());
  for (int t = 0; t < terms(); ++t) {
    for (int k = 0; k < nvars(); ++k) {
      const int ek = exps_(t, k);
      if (ek == 0) continue;
      cdouble m = coefs_[t] * static_cast<double>(ek);
      for (int l = 0; l < nvars(); ++l) {
        const int e = (l == k) ? exps_(t, l) - 1 : exps_(t, l);
        if (e > 0) m *= intpow(x[l], e);
      }
      g[k] += m;
    }
  }
  return g;
}

int MPoly::degree() const {
  int deg = 0;
  for (int t = 0; t < terms(); ++t) deg = std::max(deg, exps_.row(t).sum());
  return deg;
}

double MPoly::scale() const {
  double s = 0.0;
  for (int t = 0; t < terms(); ++t) s = std::max(s, std::abs(coefs_[t]));
  return s;
}

long long PolySystem::total_degree() const {
  long long D = 1;
  for (int d : degrees) D *= d;
  return D;
}

PolySystem make_system(std::vector<MPoly> equations) {
  std::vector<int> degs;
  degs.reserve(equations.size());
  for (const MPoly& p : equations) degs.push_back(p.degree());
  return make_system(std::move(equations), std::move(degs));
}

PolySystem make_system(std::vector<MPoly> equations,
                       std::vector<int> declared_degrees) {
  if (equations.empty())
    throw DimensionMismatch("make_system: empty system");
  if (equations.size() != declared_degrees.size())
    throw DimensionMismatch("make_system: degree list length mismatch");
  const int m = static_cast<int>(equations.size());
  if (m > 10) throw CapExceeded("make_system: more than 10 variables");
  long long D = 1;
  for (size_t i = 0; i < equations.size(); ++i) {
    if (equations[i].nvars() != m)
      throw DimensionMismatch("make_system: equation arity != system size");
    if (equations[i].terms() == 0)
      throw InternalError("make_system: identically zero equation");
    if (declared_degrees[i] < 1 ||
        declared_degrees[i] < equations[i].degree())
      throw InternalError(
          "make_system: declared degree below actual (or below 1)");
    D *= declared_degrees[i];
    if (D > 20000) throw CapExceeded("make_system: total degree above 20000");
  }
  PolySystem sys;
  sys.equations = std::move(equations);
  sys.degrees = std::move(declared_degrees);
  return sys;
}

double residual(const PolySystem& sys, const VectorC& x) {
  double r = 0.0;
  for (const MPoly& p : sys.equations)
    r = std::max(r, std::abs(p.eval(x)) / (1.0 + p.scale()));
  return r;
}

}  // namespace symnorm
