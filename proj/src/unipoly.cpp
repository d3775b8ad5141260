#include "symnorm/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace symnorm {

namespace {

void check_finite(const std::vector<cdouble>& c) {
  for (const cdouble& x : c)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw NumericOverflow("non-finite polynomial coefficient");
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<cdouble> coeffs)
    : c_(std::move(coeffs)) {
  check_finite(c_);
  while (!c_.empty() && c_.back() == cdouble(0.0)) c_.pop_back();
  scale_ = 0.0;
  for (const cdouble& x : c_) scale_ = std::max(scale_, std::abs(x));
}

int ComplexPolynomial::degree() const {
  return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1;
}

cdouble ComplexPolynomial::eval(cdouble z) const {
  cdouble acc = 0.0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

ComplexPolynomial add(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<cdouble> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial sub(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  std::vector<cdouble> c(std::max(a.coeffs().size(), b.coeffs().size()), 0.0);
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial mul(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return ComplexPolynomial();
  std::vector<cdouble> c(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == cdouble(0.0)) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial scalar_mul(cdouble s, const ComplexPolynomial& a) {
  std::vector<cdouble> c = a.coeffs();
  for (cdouble& x : c) x *= s;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial derivative(const ComplexPolynomial& a) {
  if (a.coeffs().size() <= 1) return ComplexPolynomial();
  std::vector<cdouble> c(a.coeffs().size() - 1);
  for (size_t k = 1; k < a.coeffs().size(); ++k)
    c[k - 1] = static_cast<double>(k) * a.coeffs()[k];
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial compose_power(const ComplexPolynomial& a, int k) {
  ComplexPolynomial r(std::vector<cdouble>{1.0});
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

ComplexPolynomial shift_up(const ComplexPolynomial& a) {
  if (a.is_zero()) return a;
  std::vector<cdouble> c(a.coeffs().size() + 1, 0.0);
  for (size_t k = 0; k < a.coeffs().size(); ++k) c[k + 1] = a.coeffs()[k];
  return ComplexPolynomial(std::move(c));
}

bool is_zero_poly(const ComplexPolynomial& p, double rel_eps,
                  double construction_scale) {
  return p.scale() <= rel_eps * construction_scale;
}

int RootSet::total_multiplicity() const {
  int m = 0;
  for (const Root& r : roots) m += r.multiplicity;
  return m;
}

namespace {

constexpr int kMaxAberthSweeps = 400;
constexpr int kNewtonPolishSteps = 20;

/// One simultaneous Aberth-Ehrlich sweep; returns the largest relative update.
double aberth_sweep(const ComplexPolynomial& p, const ComplexPolynomial& dp,
                    std::vector<cdouble>& z) {
  const size_t m = z.size();
  double worst = 0.0;
  for (size_t i = 0; i < m; ++i) {
    cdouble pv = p.eval(z[i]);
    if (pv == cdouble(0.0)) continue;
    cdouble dv = dp.eval(z[i]);
    cdouble newton = (dv == cdouble(0.0)) ? cdouble(0.0) : pv / dv;
    cdouble repel = 0.0;
    for (size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      cdouble diff = z[i] - z[j];
      if (diff == cdouble(0.0)) diff = cdouble(1e-30, 0.0);
      repel += 1.0 / diff;
    }
    cdouble denom = 1.0 - newton * repel;
    cdouble step = (denom == cdouble(0.0)) ? newton : newton / denom;
    z[i] -= step;
    worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
  }
  return worst;
}

/// An m-fold cluster mean is accurate only to ~eps^(1/m).  The (m-1)-th
/// derivative has a simple root at the same point, so a short Newton run on
/// it recovers the location to working precision.  The result is kept only
/// when it stays near the cluster (another derivative root must not hijack
/// the representative).
cdouble refine_multiple(const ComplexPolynomial& q, cdouble z0, int mult) {
  ComplexPolynomial der = q;
  for (int i = 1; i < mult; ++i) der = derivative(der);
  const ComplexPolynomial dd = derivative(der);
  cdouble z = z0;
  for (int it = 0; it < 30; ++it) {
    const cdouble pv = der.eval(z);
    const cdouble dv = dd.eval(z);
    if (dv == cdouble(0.0)) break;
    const cdouble step = pv / dv;
    if (std::abs(step) > 0.1 * (1.0 + std::abs(z))) break;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
  }
  return (std::abs(z - z0) <= 1e-2 * (1.0 + std::abs(z0))) ? z : z0;
}

/// First-order bound on the floating-point noise of Horner evaluation at z:
/// ~2(deg+1) * eps * sum_k |c_k||z|^k.  A residual below this floor is
/// indistinguishable from an exact root at working precision.
double eval_noise_floor(const ComplexPolynomial& p, cdouble z) {
  const double az = std::abs(z);
  double acc = 0.0;
  for (size_t k = p.coeffs().size(); k-- > 0;)
    acc = acc * az + std::abs(p.coeffs()[k]);
  return 2.0 * static_cast<double>(p.coeffs().size()) *
         std::numeric_limits<double>::epsilon() * acc;
}

}  // namespace

RootSet roots(const ComplexPolynomial& p, double target_residual) {
  if (p.degree() < 1)
    throw DegreeTooSmall("roots: degree must be >= 1");

  // Exact zero low-order coefficients are a root at 0 of that multiplicity.
  size_t low_zeros = 0;
  while (low_zeros < p.coeffs().size() && p.coeffs()[low_zeros] == cdouble(0.0))
    ++low_zeros;

  RootSet out;
  if (low_zeros > 0)
    out.roots.push_back({cdouble(0.0), static_cast<int>(low_zeros), 0.0, true});

  std::vector<cdouble> red(p.coeffs().begin() + static_cast<long>(low_zeros),
                           p.coeffs().end());
  ComplexPolynomial q{std::move(red)};
  const int m = q.degree();
  if (m < 1) return out;

  // Start circle: the tighter of the Cauchy root bound 1 + max|c_k/lead| and
  // the Fujiwara bound 2 max_k |c_{m-k}/lead|^(1/k) (with the constant term
  // halved).  Both enclose every root; Fujiwara stays moderate when the
  // leading coefficient is far below the others, where the Cauchy circle is
  // too wide for the sweeps to contract in time.  Golden-ratio-perturbed
  // angles.
  const cdouble lead = q.coeffs().back();
  double cauchy = 0.0;
  double fujiwara = 0.0;
  for (size_t k = 0; k + 1 < q.coeffs().size(); ++k) {
    const double ratio = std::abs(q.coeffs()[k] / lead);
    cauchy = std::max(cauchy, ratio);
    const size_t root_exp = q.coeffs().size() - 1 - k;
    const double term = (k == 0) ? 0.5 * ratio : ratio;
    if (term > 0.0)
      fujiwara = std::max(
          fujiwara, std::pow(term, 1.0 / static_cast<double>(root_exp)));
  }
  const double radius = std::min(cauchy + 1.0, 2.0 * fujiwara);
  constexpr double kGolden = 0.61803398874989484820;
  std::vector<cdouble> z(static_cast<size_t>(m));
  for (int k = 0; k < m; ++k) {
    double frac = std::fmod((k + 1) * kGolden, 1.0);
    double theta = 2.0 * M_PI * (k + frac) / m;
    z[static_cast<size_t>(k)] = radius * cdouble(std::cos(theta), std::sin(theta));
  }

  ComplexPolynomial dq = derivative(q);
  bool converged = false;
  for (int sweep = 0; sweep < kMaxAberthSweeps; ++sweep) {
    double worst = aberth_sweep(q, dq, z);
    if (worst < 1e-14) {
      converged = true;
      break;
    }
  }

  // Newton polish (simple roots converge quadratically; multiple roots are
  // handled by clustering below).
  std::vector<double> err(z.size(), 0.0);
  for (size_t i = 0; i < z.size(); ++i) {
    for (int it = 0; it < kNewtonPolishSteps; ++it) {
      cdouble pv = q.eval(z[i]);
      cdouble dv = dq.eval(z[i]);
      if (dv == cdouble(0.0)) break;
      cdouble step = pv / dv;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z[i]))) break;
      z[i] -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z[i]))) break;
    }
    cdouble pv = q.eval(z[i]);
    cdouble dv = dq.eval(z[i]);
    // Position uncertainty |p|/|p'| with |p| floored at the evaluation noise:
    // near a multiple root the computed p underflows to exact zero while the
    // true uncertainty (~noise/|p'|, with |p'| itself tiny) stays wide, and
    // the clustering below must see that width to merge the cluster.
    err[i] = (dv == cdouble(0.0))
                 ? 0.0
                 : std::max(std::abs(pv), eval_noise_floor(q, z[i])) /
                       std::abs(dv);
  }

  // Graduated clustering: at least the pinned radius 1e-7*(1+|z|), widened by
  // the Newton error estimates so multiple-root clusters (whose attainable
  // accuracy is ~eps^(1/multiplicity)) still merge.
  std::vector<bool> used(z.size(), false);
  std::vector<Root> found;
  for (size_t i = 0; i < z.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> cluster{i};
    used[i] = true;
    for (size_t j = i + 1; j < z.size(); ++j) {
      if (used[j]) continue;
      double rad = std::max(1e-7 * (1.0 + std::abs(z[i])), 3.0 * (err[i] + err[j]));
      if (std::abs(z[i] - z[j]) <= rad) {
        cluster.push_back(j);
        used[j] = true;
      }
    }
    cdouble mean = 0.0;
    for (size_t c : cluster) mean += z[c];
    mean /= static_cast<double>(cluster.size());
    if (cluster.size() > 1)
      mean = refine_multiple(q, mean, static_cast<int>(cluster.size()));
    double resid = std::abs(q.eval(mean)) / q.scale();
    const double floor_rel = eval_noise_floor(q, mean) / q.scale();
    found.push_back({mean, static_cast<int>(cluster.size()), resid,
                     resid <= std::max(target_residual, floor_rel)});
  }
  for (Root& r : found) out.roots.push_back(r);

  if (!converged) {
    bool all_ok = true;
    for (const Root& r : out.roots)
      if (!r.polished) all_ok = false;
    if (!all_ok)
      throw SolverStall("Aberth iteration did not converge", out);
  }
  return out;
}

std::vector<double> real_roots(const RootSet& rs, double im_tol) {
  std::vector<double> out;
  for (const Root& r : rs.roots)
    if (std::abs(r.value.imag()) <= im_tol * (1.0 + std::abs(r.value)))
      out.push_back(r.value.real());
  return out;
}

}  // namespace symnorm
