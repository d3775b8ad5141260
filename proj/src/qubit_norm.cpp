#include "symnorm/qubit_norm.hpp"

#include <algorithm>
#include <cmath>

#include "symnorm/banach_oracle.hpp"
#include "symnorm/errors.hpp"
#include "symnorm/multi_index.hpp"

namespace symnorm {

namespace {

/// The two-variable tensor with f_{(d-k,k)} = s_k.
SymTensor tensor_from_s(const std::vector<cdouble>& s) {
  const int d = static_cast<int>(s.size()) - 1;
  std::map<MultiIndex, cdouble> fj;
  for (int k = 0; k <= d; ++k) fj[{d - k, k}] = s[static_cast<size_t>(k)];
  return from_fj_coefficients(2, d, fj);
}

/// |phi(z)| / (1+|z|^2)^(d/2), overflow-safe for large |z| by evaluating the
/// reversed polynomial at 1/z.
double sphere_value(const ComplexPolynomial& phi, cdouble z, int d) {
  const double az = std::abs(z);
  if (!std::isfinite(az)) return 0.0;
  if (az <= 1.0) {
    double pv = std::abs(phi.eval(z));
    return pv == 0.0 ? 0.0 : pv * std::exp(-0.5 * d * std::log1p(az * az));
  }
  std::vector<cdouble> rc(phi.coeffs().rbegin(), phi.coeffs().rend());
  ComplexPolynomial rev{std::move(rc)};
  double pv = std::abs(rev.eval(1.0 / z));
  if (pv == 0.0) return 0.0;
  const int dp = phi.degree();
  return pv * std::exp((dp - d) * std::log(az) - 0.5 * d * std::log1p(1.0 / (az * az)));
}

VectorC unit_witness(cdouble z) {
  VectorC w(2);
  const double az = std::abs(z);
  if (az > 1e8) {  // projectively close to (0,1)
    w << cdouble(1.0 / z) / std::sqrt(1.0 + 1.0 / (az * az)),
        1.0 / std::sqrt(1.0 + 1.0 / (az * az));
    return w;
  }
  const double nn = std::sqrt(1.0 + az * az);
  w << 1.0 / nn, z / nn;
  return w;
}

double zqp_construction_scale(const QubitCoeffs& qc) {
  return std::max(1.0, qc.s_scale * std::pow(2.0, qc.d));
}

double zvu_construction_scale(const QubitCoeffs& qc) {
  return std::pow(qc.s_scale, qc.d) * std::pow(4.0, qc.d);
}

}  // namespace

QubitCoeffs build(const std::vector<cdouble>& s) {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 3) throw DegreeTooSmall("build: need d >= 3 (got length-" +
                                  std::to_string(s.size()) + " vector)");
  QubitCoeffs qc;
  qc.d = d;
  qc.s = s;

  std::vector<cdouble> phic(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    phic[static_cast<size_t>(j)] = binomial(d, j) * s[static_cast<size_t>(j)];
  qc.phi = ComplexPolynomial(std::move(phic));

  std::vector<cdouble> pc(static_cast<size_t>(d)), qcf(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    pc[static_cast<size_t>(j)] = binomial(d - 1, j) * s[static_cast<size_t>(j) + 1];
    qcf[static_cast<size_t>(j)] = binomial(d - 1, j) * s[static_cast<size_t>(j)];
  }
  qc.p = ComplexPolynomial(std::move(pc));
  qc.q = ComplexPolynomial(std::move(qcf));

  // Construction identities: p = phi'/d and q = phi - z phi'/d.
  const ComplexPolynomial dphi = derivative(qc.phi);
  const double tol = 1e-10 * std::max(1.0, qc.phi.scale());
  if (sub(qc.p, scalar_mul(1.0 / d, dphi)).scale() > tol ||
      sub(qc.q, sub(qc.phi, scalar_mul(1.0 / d, shift_up(dphi)))).scale() > tol)
    throw InternalError("build: p/q construction identities violated");

  // u and v re-homogenize p and q through the point (p(z), q(z)).
  std::vector<ComplexPolynomial> ppow(static_cast<size_t>(d)),
      qpow(static_cast<size_t>(d));
  ppow[0] = ComplexPolynomial({cdouble(1.0)});
  qpow[0] = ComplexPolynomial({cdouble(1.0)});
  for (int j = 1; j < d; ++j) {
    ppow[static_cast<size_t>(j)] = mul(ppow[static_cast<size_t>(j) - 1], qc.p);
    qpow[static_cast<size_t>(j)] = mul(qpow[static_cast<size_t>(j) - 1], qc.q);
  }
  ComplexPolynomial u, v;
  for (int j = 0; j < d; ++j) {
    ComplexPolynomial term =
        mul(ppow[static_cast<size_t>(j)], qpow[static_cast<size_t>(d - 1 - j)]);
    const double w = binomial(d - 1, j);
    u = add(u, scalar_mul(w * std::conj(s[static_cast<size_t>(j) + 1]), term));
    v = add(v, scalar_mul(w * std::conj(s[static_cast<size_t>(j)]), term));
  }
  qc.u = std::move(u);
  qc.v = std::move(v);

  qc.s_scale = 0.0;
  double max_im = 0.0;
  for (const cdouble& x : s) {
    qc.s_scale = std::max(qc.s_scale, std::abs(x));
    max_im = std::max(max_im, std::abs(x.imag()));
  }
  qc.real = max_im <= 1e-14 * qc.s_scale;
  return qc;
}

QubitCoeffs build_from_tensor(const SymTensor& S) {
  if (S.n() != 2)
    throw DimensionMismatch("build_from_tensor: tensor is not two-variable");
  const int d = S.d();
  std::vector<cdouble> s(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) s[static_cast<size_t>(k)] = S.coeff({d - k, k});
  return build(s);
}

ExceptionalClass classify(const QubitCoeffs& qc) {
  const int d = qc.d;
  ExceptionalClass cls;
  if (qc.s_scale == 0.0) {  // zero form: trivially (0,...,0,s_d) with s_d = 0
    cls.tag = ExceptionalTag::PureTop;
    cls.A = 0.0;
    return cls;
  }
  const double nz_thresh = 1e-14 * qc.s_scale;
  std::vector<int> nz;
  for (int k = 0; k <= d; ++k)
    if (std::abs(qc.s[static_cast<size_t>(k)]) > nz_thresh) nz.push_back(k);
  if (nz.size() == 1 && nz[0] == d) {
    cls.tag = ExceptionalTag::PureTop;
    cls.A = qc.s.back();
    return cls;
  }
  if (nz.size() == 1 && nz[0] >= 1 && nz[0] <= d - 1) {
    cls.tag = ExceptionalTag::Monomial;
    cls.k = nz[0];
    cls.A = qc.s[static_cast<size_t>(nz[0])];
    return cls;
  }
  // nz == {0} (a pure x1^d form) has zv-u = conj(s_0) s_0^(d-1) z, which is
  // not the zero polynomial: the generic path handles it (root 0 -> |s_0|).

  // Real circle comes before the two-root test: phi = A(z^2+1)^(d/2) also
  // matches the two-root pattern (a = i, b = -i) but owns the closed real
  // form, so it must win the classification.
  if (qc.real) {
    const ComplexPolynomial zqp = sub(shift_up(qc.q), qc.p);
    if (is_zero_poly(zqp, 1e-9, zqp_construction_scale(qc))) {
      if (d % 2 != 0)
        throw UnclassifiedExceptional(
            "classify: zq-p vanished for odd degree (no catalogued form)");
      const cdouble A = qc.s.back();
      const ComplexPolynomial circle =
          compose_power(ComplexPolynomial({cdouble(1.0), cdouble(0.0), cdouble(1.0)}),
                        d / 2);
      if (sub(qc.phi, scalar_mul(A, circle)).scale() >
          1e-6 * std::max(1.0, qc.phi.scale()))
        throw UnclassifiedExceptional(
            "classify: zq-p vanished but phi is not A(z^2+1)^(d/2)");
      cls.tag = ExceptionalTag::RealCircle;
      cls.A = A;
      return cls;
    }
  }

  const double zvu_scale = zvu_construction_scale(qc);
  // A non-finite scale (enormous d or coefficients) cannot support a reliable
  // zero test; such inputs are treated as generic.
  if (std::isfinite(zvu_scale)) {
    const ComplexPolynomial zvu = sub(shift_up(qc.v), qc.u);
    if (is_zero_poly(zvu, 1e-9, std::max(1.0, zvu_scale))) {
      if (std::abs(qc.s.back()) <= nz_thresh)
        throw UnclassifiedExceptional(
            "classify: zv-u vanished with vanishing top coefficient");
      RootSet rs = roots(qc.phi);
      if (rs.roots.size() != 2)
        throw UnclassifiedExceptional(
            "classify: zv-u vanished but phi does not factor into two "
            "distinct roots");
      const cdouble a = -rs.roots[0].value;
      const cdouble b = -rs.roots[1].value;
      if (std::abs(a * std::conj(b) + 1.0) > 1e-6)
        throw UnclassifiedExceptional(
            "classify: zv-u vanished but the root pair fails a*conj(b) = -1");
      cls.tag = ExceptionalTag::TwoRootForm;
      cls.p = rs.roots[0].multiplicity;
      cls.c = std::abs(a);
      cls.theta = -std::arg(a);
      cls.A = qc.s.back();
      return cls;
    }
  }
  cls.tag = ExceptionalTag::Generic;
  return cls;
}

double monomial_norm(cdouble A, int k, int d) {
  if (k < 1 || k > d - 1)
    throw InvalidIndex("monomial_norm: k must lie in [1, d-1]");
  const double t = static_cast<double>(k) / d;
  // Log form: binom(d,k)(1-t)^((d-k)/2) t^(k/2) overflows pointwise for
  // large d while the product stays bounded.
  const double lg = std::lgamma(d + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(d - k + 1.0) +
                    0.5 * (d - k) * std::log1p(-t) + 0.5 * k * std::log(t);
  return std::abs(A) * std::exp(lg);
}

NormReport complex_norm(const QubitCoeffs& qc) {
  const int d = qc.d;
  NormReport rep;
  rep.field = Field::Complex;
  if (qc.s_scale == 0.0) {
    rep.method = "closed-form";
    rep.witness = VectorC(2);
    rep.witness << 1.0, 0.0;
    return rep;
  }
  const ExceptionalClass cls = classify(qc);
  switch (cls.tag) {
    case ExceptionalTag::PureTop: {
      rep.value = std::abs(qc.s.back());
      rep.method = "closed-form";
      rep.witness = VectorC(2);
      rep.witness << 0.0, 1.0;
      return rep;
    }
    case ExceptionalTag::Monomial: {
      rep.value = monomial_norm(cls.A, cls.k, d);
      rep.method = "closed-form";
      rep.witness = VectorC(2);
      rep.witness << std::sqrt(1.0 - static_cast<double>(cls.k) / d),
          std::sqrt(static_cast<double>(cls.k) / d);
      const SymTensor S = tensor_from_s(qc.s);
      rep.witness_residual =
          std::abs(std::abs(evaluate(S, rep.witness)) - rep.value);
      return rep;
    }
    case ExceptionalTag::TwoRootForm:
    case ExceptionalTag::RealCircle:
      return exceptional_norm(qc, 1e-6);
    case ExceptionalTag::Generic:
      break;
  }

  const ComplexPolynomial zvu = sub(shift_up(qc.v), qc.u);
  const RootSet rs = roots(zvu);  // SolverStall propagates

  double best = std::abs(qc.s.back());
  VectorC witness(2);
  witness << 0.0, 1.0;
  const Root* winner = nullptr;
  for (const Root& r : rs.roots) {
    const double val = sphere_value(qc.phi, r.value, d);
    if (val > best) {
      best = val;
      witness = unit_witness(r.value);
      winner = &r;
    }
  }
  rep.value = best;
  rep.witness = witness;
  rep.method = "univariate";
  rep.witness_residual = winner ? winner->residual : 0.0;

  int n_real = 0, zero_mult = 0, max_mult = 1, antifix_fail = 0, q_zero = 0;
  for (const Root& r : rs.roots) {
    const cdouble z = r.value;
    const double az = std::abs(z);
    if (std::abs(z.imag()) <= 1e-7 * (1.0 + az)) ++n_real;
    if (az <= 1e-9) zero_mult = r.multiplicity;
    max_mult = std::max(max_mult, r.multiplicity);
    const double qv = std::abs(qc.q.eval(z));
    const double q_scale =
        qc.s_scale * std::pow(2.0, d - 1) * std::pow(1.0 + az, d - 1);
    if (qv <= 1e-6 * q_scale) ++q_zero;
    const double af = std::abs(std::conj(z) * qc.q.eval(z) - qc.p.eval(z));
    if (af > 1e-6 * std::max(1.0, q_scale * (1.0 + az))) ++antifix_fail;
  }
  double winner_af = 0.0;
  if (winner) {
    const cdouble z = winner->value;
    winner_af = std::abs(std::conj(z) * qc.q.eval(z) - qc.p.eval(z));
  }
  rep.diagnostics = {{"zvu_degree", static_cast<double>(zvu.degree())},
                     {"roots_distinct", static_cast<double>(rs.roots.size())},
                     {"roots_real", static_cast<double>(n_real)},
                     {"zero_root_multiplicity", static_cast<double>(zero_mult)},
                     {"max_multiplicity", static_cast<double>(max_mult)},
                     {"antifix_fail", static_cast<double>(antifix_fail)},
                     {"q_zero_roots", static_cast<double>(q_zero)},
                     {"winner_antifix_residual", winner_af}};
  return rep;
}

NormReport real_norm(const QubitCoeffs& qc) {
  if (!qc.real)
    throw InternalError("real_norm: coefficients are not real");
  const int d = qc.d;
  NormReport rep;
  rep.field = Field::Real;
  if (qc.s_scale == 0.0) {
    rep.method = "closed-form";
    rep.witness = VectorC(2);
    rep.witness << 1.0, 0.0;
    return rep;
  }
  const ExceptionalClass cls = classify(qc);
  if (cls.tag == ExceptionalTag::RealCircle) {
    rep.value = std::abs(cls.A);
    rep.method = "closed-form";
    rep.witness = VectorC(2);
    rep.witness << 1.0, 0.0;  // |phi|/(1+z^2)^(d/2) = |A| on the whole axis
    return rep;
  }
  const ComplexPolynomial zqp = sub(shift_up(qc.q), qc.p);
  if (is_zero_poly(zqp, 1e-9, zqp_construction_scale(qc)))
    throw UnclassifiedExceptional(
        "real_norm: zq-p vanished outside the catalogued circle form");
  const RootSet rs = roots(zqp);  // SolverStall propagates
  const std::vector<double> rr = real_roots(rs, 1e-7);

  double best = std::abs(qc.s.back());
  VectorC witness(2);
  witness << 0.0, 1.0;
  for (const double t : rr) {
    const double val = sphere_value(qc.phi, t, d);
    if (val > best) {
      best = val;
      const double nn = std::sqrt(1.0 + t * t);
      witness << 1.0 / nn, t / nn;
    }
  }
  rep.value = best;
  rep.witness = witness;
  rep.method = "univariate";
  rep.diagnostics = {{"zqp_degree", static_cast<double>(zqp.degree())},
                     {"roots_distinct", static_cast<double>(rs.roots.size())},
                     {"real_root_count", static_cast<double>(rr.size())}};
  return rep;
}

NormReport exceptional_norm(const QubitCoeffs& qc, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw InternalError("exceptional_norm: delta must lie in (0,1)");
  const int d = qc.d;
  const ExceptionalClass cls = classify(qc);
  if (cls.tag != ExceptionalTag::TwoRootForm &&
      cls.tag != ExceptionalTag::RealCircle)
    throw InternalError(
        "exceptional_norm: form is not a two-root exceptional shape");

  // Rotate the root pair onto the real axis: with a = -r0 and
  // beta = e^{i arg(a)}, phi(beta w) has real roots -|a| and 1/|a|.  The
  // substitution is the unitary x2 -> beta x2, which preserves the norm.
  const RootSet rs = roots(qc.phi);
  const cdouble a = -rs.roots[0].value;
  const cdouble beta = std::polar(1.0, std::arg(a));

  std::vector<cdouble> sh(static_cast<size_t>(d) + 1);
  cdouble bp = 1.0;
  for (int j = 0; j <= d; ++j) {
    sh[static_cast<size_t>(j)] = qc.s[static_cast<size_t>(j)] * bp;
    bp *= beta;
  }
  const cdouble top = sh.back();  // |top| = |s_d| > 0 for these classes
  const double amplitude = std::abs(top);
  for (cdouble& x : sh) x /= top;
  const double omega = delta / 4.0;
  sh[0] += omega;  // phi(z) + omega changes only the constant coefficient

  const QubitCoeffs perturbed = build(sh);
  if (classify(perturbed).tag != ExceptionalTag::Generic)
    throw InternalError("exceptional_norm: perturbed form is still exceptional");
  const NormReport inner = complex_norm(perturbed);

  VectorC w = inner.witness;
  w[1] *= beta;  // back-map to the original coordinates

  // Polish on the original form: the reported value is the exact evaluation
  // at the refined witness, an unconditional lower bound that lands on the
  // maximizer (the perturbed witness starts omega-close to it).
  const SymTensor S = tensor_from_s(qc.s);
  const OracleResult polish = ascend_from(S, w, 500, Field::Complex);

  NormReport rep;
  rep.field = Field::Complex;
  rep.value = polish.lower_bound;
  rep.witness = polish.witness;
  rep.method = "perturbation";
  rep.witness_residual =
      std::abs(std::abs(evaluate(S, polish.witness)) - rep.value);
  rep.diagnostics = {{"delta", delta},
                     {"omega", omega},
                     {"perturbed_estimate", amplitude * inner.value}};
  return rep;
}

std::vector<MajoranaPoint> majorana_roots(const QubitCoeffs& qc) {
  if (qc.s_scale == 0.0) throw ZeroTensor("majorana_roots: zero tensor");
  const int d = qc.d;
  const int dp = qc.phi.degree();
  std::vector<MajoranaPoint> out;
  if (dp >= 1) {
    const RootSet rs = roots(qc.phi);
    for (const Root& r : rs.roots)
      out.push_back({r.value, false, r.multiplicity});
  }
  if (dp < d) out.push_back({cdouble(0.0), true, d - dp});
  return out;
}

}  // namespace symnorm
