#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "symnorm/banach_oracle.hpp"
#include "symnorm/errors.hpp"
#include "symnorm/qubit_norm.hpp"
#include "symnorm/sym_tensor.hpp"

using namespace symnorm;

namespace {

SymTensor dicke(int d, int n, const MultiIndex& j) {
  std::map<MultiIndex, cdouble> m{{j, 1.0}};
  SymTensor S = from_fj_coefficients(n, d, m);
  // scale to sqrt(c(j)) x^j, i.e. a unit state
  S.fj_mutable() /= hs_norm(S);
  S.refresh_real_flag();
  return S;
}

SymTensor random_tensor(int n, int d, std::mt19937_64& rng, bool real = false) {
  std::normal_distribution<double> g;
  SymTensor S(n, d);
  for (Eigen::Index r = 0; r < S.fj().size(); ++r)
    S.fj_mutable()[r] = cdouble(g(rng), real ? 0.0 : g(rng));
  S.refresh_real_flag();
  return S;
}

}  // namespace

TEST_CASE("ascent recovers a known norm") {
  SymTensor S = dicke(4, 2, {2, 2});
  OracleResult r = ascend(S);
  CHECK(r.lower_bound ==
        doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-9));
  CHECK(r.converged_fraction >= 0.9);
  CHECK(r.starts == 16 * 2 * 4);
}

TEST_CASE("witness is a unit anti-eigenvector") {
  SymTensor S = dicke(3, 3, {1, 1, 1});
  OracleResult r = ascend(S);
  CHECK(r.lower_bound == doctest::Approx(std::sqrt(2.0) / 3.0).epsilon(1e-9));
  CHECK(std::abs(r.witness.norm() - 1.0) < 1e-12);
  // At a converged maximizer F(w) = f(w) conj(w) (the anti-eigenvector
  // identity with eigenvalue f(w) real positive after phase alignment).
  const cdouble f = evaluate(S, r.witness);
  CHECK(f.imag() < 1e-9);
  CHECK(f.real() > 0.0);
  const VectorC gap = grad_map_F(S, r.witness) - f * r.witness.conjugate();
  CHECK(gap.norm() < 1e-8);
}

TEST_CASE("every reported bound is genuinely attained by its witness") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2, d = 3 + trial % 3;
    SymTensor S = random_tensor(n, d, rng);
    OracleResult r = ascend(S, /*num_starts=*/32);
    CHECK(std::abs(std::abs(evaluate(S, r.witness)) - r.lower_bound) <
          1e-10 * (1.0 + r.lower_bound));
    CHECK(r.lower_bound <= hs_norm(S) + 1e-9);
  }
}

TEST_CASE("real-field ascent stays real and handles sign flips") {
  // (3/2) x1^2 x2 - (1/2) x2^3: real norm 1/2 at (sqrt(2/3), ...) etc.
  std::map<MultiIndex, cdouble> m{{{2, 1}, 1.5}, {{0, 3}, -0.5}};
  SymTensor S = from_monomial_coefficients(2, 3, m);
  OracleResult r = ascend(S, -1, 300, 0, Field::Real);
  CHECK(r.lower_bound == doctest::Approx(0.5).epsilon(1e-9));
  for (int i = 0; i < 2; ++i) CHECK(r.witness[i].imag() == 0.0);
  // Complex ascent on the same tensor reaches sqrt(2)/2.
  OracleResult c = ascend(S);
  CHECK(c.lower_bound == doctest::Approx(std::sqrt(0.5)).epsilon(1e-9));
}

TEST_CASE("determinism and start accounting") {
  std::mt19937_64 rng(97);
  SymTensor S = random_tensor(2, 5, rng);
  OracleResult a = ascend(S, 64, 300, /*seed=*/7);
  OracleResult b = ascend(S, 64, 300, /*seed=*/7);
  CHECK(a.lower_bound == b.lower_bound);
  CHECK((a.witness - b.witness).norm() == 0.0);
  CHECK(a.starts == 64);
}

TEST_CASE("ascend_from polishes a supplied start") {
  SymTensor S = dicke(4, 2, {2, 2});
  VectorC x0(2);
  x0 << 0.8, 0.6;
  OracleResult r = ascend_from(S, x0);
  CHECK(r.lower_bound == doctest::Approx(std::sqrt(6.0) / 4.0).epsilon(1e-9));
  VectorC bad(3);
  bad.setZero();
  CHECK_THROWS_AS(ascend_from(S, bad), DimensionMismatch);
}

TEST_CASE("zero tensor is rejected") {
  CHECK_THROWS_AS(ascend(SymTensor(2, 3)), ZeroTensor);
}

TEST_CASE("certification verdicts") {
  SymTensor S = dicke(4, 2, {2, 2});
  OracleResult oracle = ascend(S);
  const double truth = std::sqrt(6.0) / 4.0;

  NormReport ok;
  ok.value = truth;
  CHECK(certify(S, ok, oracle) == Verdict::PASS);

  // A missed fixed point (reported value too small) must GAP.
  NormReport low;
  low.value = truth - 1e-3;
  CHECK(certify(S, low, oracle) == Verdict::GAP);

  // A value above the Hilbert-Schmidt norm must GAP too.
  NormReport high;
  high.value = hs_norm(S) + 1e-3;
  CHECK(certify(S, high, oracle) == Verdict::GAP);

  // Tolerance edges: oracle may exceed the report by up to 1e-8.
  NormReport edge;
  edge.value = truth - 0.5e-8;
  CHECK(certify(S, edge, oracle) == Verdict::PASS);
}
