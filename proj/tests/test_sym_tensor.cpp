#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <random>

#include "symnorm/errors.hpp"
#include "symnorm/sym_tensor.hpp"

using namespace symnorm;

namespace {

SymTensor random_tensor(int n, int d, std::mt19937_64& rng, bool real = false) {
  std::normal_distribution<double> g;
  SymTensor S(n, d);
  for (Eigen::Index r = 0; r < S.fj().size(); ++r) {
    S.fj_mutable()[r] = cdouble(g(rng), real ? 0.0 : g(rng));
  }
  S.refresh_real_flag();
  return S;
}

VectorC random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  VectorC x(n);
  for (int i = 0; i < n; ++i) x[i] = cdouble(g(rng), g(rng));
  return x;
}

SymTensor power_sum(int n, int d) {  // sum_i x_i^d
  std::map<MultiIndex, cdouble> a;
  for (int i = 0; i < n; ++i) {
    MultiIndex j(n, 0);
    j[i] = d;
    a[j] = 1.0;
  }
  return from_monomial_coefficients(n, d, a);
}

}  // namespace

TEST_CASE("monomial-coefficient construction stores f_j = a_j / c(j)") {
  // 3/2 x1^2 x2 - 1/2 x2^3
  std::map<MultiIndex, cdouble> a{{{2, 1}, 1.5}, {{0, 3}, -0.5}};
  SymTensor S = from_monomial_coefficients(2, 3, a);
  CHECK(S.coeff({2, 1}) == cdouble(0.5));
  CHECK(S.coeff({0, 3}) == cdouble(-0.5));
  CHECK(S.coeff({3, 0}) == cdouble(0.0));
  CHECK(S.is_real());

  SymTensor Z = from_monomial_coefficients(2, 3, {});
  CHECK(hs_norm(Z) == 0.0);

  std::map<MultiIndex, cdouble> q{{{3, 0, 0}, 1.0},
                                  {{0, 3, 0}, 1.0},
                                  {{0, 0, 3}, 1.0},
                                  {{1, 1, 1}, 2.5}};
  SymTensor Q = from_monomial_coefficients(3, 3, q);
  CHECK(std::abs(Q.coeff({1, 1, 1}) - cdouble(2.5 / 6.0)) < 1e-15);
}

TEST_CASE("construction error taxonomy") {
  CHECK_THROWS_AS(
      from_monomial_coefficients(2, 3, {{MultiIndex{2, 1, 0}, cdouble(1.0)}}),
      InvalidIndex);
  CHECK_THROWS_AS(
      from_monomial_coefficients(2, 3, {{MultiIndex{-1, 4}, cdouble(1.0)}}),
      InvalidIndex);
  CHECK_THROWS_AS(
      from_monomial_coefficients(2, 3, {{MultiIndex{2, 2}, cdouble(1.0)}}),
      DegreeMismatch);
}

TEST_CASE("evaluate") {
  std::map<MultiIndex, cdouble> a{{{2, 1}, 1.5}, {{0, 3}, -0.5}};
  SymTensor S = from_monomial_coefficients(2, 3, a);
  VectorC x(2);
  x << 0.0, 1.0;
  CHECK(std::abs(evaluate(S, x) - cdouble(-0.5)) < 1e-15);
  x << 0.0, 0.0;
  CHECK(evaluate(S, x) == cdouble(0.0));

  SymTensor P = power_sum(2, 4);
  x << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  CHECK(std::abs(evaluate(P, x) - cdouble(0.5)) < 1e-14);

  VectorC bad(3);
  bad.setZero();
  CHECK_THROWS_AS(evaluate(S, bad), DimensionMismatch);
}

TEST_CASE("gradient map F") {
  SymTensor P = power_sum(3, 4);
  VectorC x(3);
  x << cdouble(0.3, 0.1), cdouble(-1.2, 0.4), cdouble(0.9, 0.0);
  VectorC F = grad_map_F(P, x);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(F[i] - std::pow(x[i], 3)) < 1e-13);
  }
  x.setZero();
  CHECK(grad_map_F(P, x).norm() == 0.0);

  // 0.3104 x1^3 - 1.4598 x1^2 x2 - 0.6558 x1 x2^2 + 0.2235 x2^3 at (1, 0):
  // F = (1/3) grad = (0.3104, -0.4866).
  std::map<MultiIndex, cdouble> a{{{3, 0}, 0.3104},
                                  {{2, 1}, -1.4598},
                                  {{1, 2}, -0.6558},
                                  {{0, 3}, 0.2235}};
  SymTensor E1 = from_monomial_coefficients(2, 3, a);
  VectorC e(2);
  e << 1.0, 0.0;
  VectorC Fe = grad_map_F(E1, e);
  CHECK(std::abs(Fe[0] - cdouble(0.3104)) < 1e-12);
  CHECK(std::abs(Fe[1] - cdouble(-0.4866)) < 1e-12);
}

TEST_CASE("composed map H") {
  SymTensor P = power_sum(2, 3);
  VectorC x(2);
  x << cdouble(0.4, -0.7), cdouble(1.1, 0.2);
  VectorC H = map_H(P, x);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(H[i] - std::pow(x[i], 4)) < 1e-12);  // (d-1)^2 = 4
  }
  x.setZero();
  CHECK(map_H(P, x).norm() == 0.0);

  // Real tensor at real argument: H = F(F(x)).
  std::mt19937_64 rng(3);
  SymTensor R = random_tensor(2, 4, rng, /*real=*/true);
  VectorC xr(2);
  xr << 0.7, -0.35;
  VectorC lhs = map_H(R, xr);
  VectorC rhs = grad_map_F(R, grad_map_F(R, xr));
  CHECK((lhs - rhs).norm() < 1e-12 * (1.0 + rhs.norm()));
}

TEST_CASE("Hilbert-Schmidt norm and inner product") {
  // sqrt(3) x1^2 x2 has f_(2,1) = 1/sqrt(3), c = 3.
  std::map<MultiIndex, cdouble> a{{{2, 1}, std::sqrt(3.0)}};
  CHECK(std::abs(hs_norm(from_monomial_coefficients(2, 3, a)) - 1.0) < 1e-14);
  CHECK(hs_norm(SymTensor(2, 3)) == 0.0);

  // Dicke basis element sqrt(c(j)) x^j has unit norm.
  std::map<MultiIndex, cdouble> dicke{{{2, 2}, 1.0 / std::sqrt(6.0)}};
  CHECK(std::abs(hs_norm(from_fj_coefficients(2, 4, dicke)) - 1.0) < 1e-14);

  SymTensor A(2, 3), B(3, 3);
  CHECK_THROWS_AS(hs_inner(A, B), DimensionMismatch);
}

TEST_CASE("inner product is the full-entry tensor contraction") {
  std::mt19937_64 rng(11);
  SymTensor S = random_tensor(2, 3, rng);
  SymTensor T = random_tensor(2, 3, rng);
  // Entry at (i1,i2,i3) is f_j for the count pattern j; sum over all 2^3.
  cdouble full = 0.0;
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int i3 = 0; i3 < 2; ++i3) {
        MultiIndex j(2, 0);
        ++j[i1];
        ++j[i2];
        ++j[i3];
        full += S.coeff(j) * std::conj(T.coeff(j));
      }
  CHECK(std::abs(full - hs_inner(S, T)) < 1e-12 * (1.0 + std::abs(full)));
}

TEST_CASE("Euler identity on 1000 random tensors") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick_n(2, 3), pick_d(3, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = pick_n(rng), d = pick_d(rng);
    SymTensor S = random_tensor(n, d, rng);
    VectorC x = random_vec(n, rng);
    const cdouble f = evaluate(S, x);
    const cdouble euler = x.transpose() * grad_map_F(S, x);
    CHECK(std::abs(euler - f) <= 1e-12 * (1.0 + std::abs(f)));
  }
}

TEST_CASE("homogeneity of f, F, H") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + (trial % 2), d = 3 + (trial % 3);
    SymTensor S = random_tensor(n, d, rng);
    VectorC x = random_vec(n, rng);
    const cdouble t(0.7, 0.4);
    const cdouble f = evaluate(S, x);
    CHECK(std::abs(evaluate(S, (t * x).eval()) - std::pow(t, d) * f) <=
          1e-12 * (1.0 + std::abs(f)) * std::abs(std::pow(t, d)));
    VectorC F = grad_map_F(S, x);
    CHECK((grad_map_F(S, (t * x).eval()) - std::pow(t, d - 1) * F).norm() <=
          1e-12 * (1.0 + F.norm()) * std::abs(std::pow(t, d - 1)));
    VectorC H = map_H(S, x);
    const cdouble th = std::pow(t, (d - 1) * (d - 1));
    CHECK((map_H(S, (t * x).eval()) - th * H).norm() <=
          1e-11 * (1.0 + H.norm()) * std::abs(th));
  }
}

TEST_CASE("gradient matches central finite differences") {
  std::mt19937_64 rng(23);
  SymTensor S = random_tensor(3, 4, rng);
  VectorC x = random_vec(3, rng);
  x /= x.norm();
  VectorC F = grad_map_F(S, x);
  const double h = 1e-6;
  for (int i = 0; i < 3; ++i) {
    for (int part = 0; part < 2; ++part) {  // real and imaginary directions
      VectorC xp = x, xm = x;
      const cdouble dir = part == 0 ? cdouble(1, 0) : cdouble(0, 1);
      xp[i] += h * dir;
      xm[i] -= h * dir;
      const cdouble diff =
          (evaluate(S, xp) - evaluate(S, xm)) / (2.0 * h * dir);
      CHECK(std::abs(diff / static_cast<double>(S.d()) - F[i]) < 1e-6);
    }
  }
}

TEST_CASE("gradient bound |F(z)| <= hs * |z|^(d-1)") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    SymTensor S = random_tensor(2 + trial % 2, 3 + trial % 2, rng);
    VectorC z = random_vec(S.n(), rng);
    CHECK(grad_map_F(S, z).norm() <=
          hs_norm(S) * std::pow(z.norm(), S.d() - 1) * (1.0 + 1e-12));
  }
}

TEST_CASE("two_monomial_normalize") {
  std::map<MultiIndex, cdouble> a{{{3, 0}, -2.0}, {{0, 3}, cdouble(0, 1)}};
  auto [g, flag] = two_monomial_normalize(from_monomial_coefficients(2, 3, a));
  CHECK(flag);
  CHECK(std::abs(g.coeff({3, 0}) - cdouble(2.0)) < 1e-15);
  CHECK(std::abs(g.coeff({0, 3}) - cdouble(1.0)) < 1e-15);
  CHECK(g.is_real());

  std::mt19937_64 rng(31);
  SymTensor three = random_tensor(2, 3, rng);
  auto [same, flag3] = two_monomial_normalize(three);
  CHECK_FALSE(flag3);
  CHECK((same.fj() - three.fj()).norm() == 0.0);

  // Already-nonnegative pair is unchanged in value.
  std::map<MultiIndex, cdouble> ex4{{{4, 0}, 1.0 / std::sqrt(3.0)},
                                    {{1, 3}, std::sqrt(8.0 / 3.0)}};
  SymTensor E = from_monomial_coefficients(2, 4, ex4);
  auto [g4, flag4] = two_monomial_normalize(E);
  CHECK(flag4);
  CHECK((g4.fj() - E.fj()).norm() < 1e-15);
}

TEST_CASE("graph quartic construction") {
  Eigen::MatrixXi k3 = Eigen::MatrixXi::Ones(3, 3);
  k3.diagonal().setZero();
  SymTensor f3 = graph_quartic(k3);
  CHECK(std::abs(hs_norm(f3) - std::sqrt(2.0)) < 1e-14);

  Eigen::MatrixXi edge = Eigen::MatrixXi::Zero(2, 2);
  edge(0, 1) = edge(1, 0) = 1;
  CHECK(std::abs(hs_norm(graph_quartic(edge)) - std::sqrt(2.0 / 3.0)) < 1e-14);

  CHECK_THROWS_AS(graph_quartic(Eigen::MatrixXi::Zero(3, 3)), InvalidGraph);
  Eigen::MatrixXi asym = Eigen::MatrixXi::Zero(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(graph_quartic(asym), InvalidGraph);
  Eigen::MatrixXi diag = Eigen::MatrixXi::Zero(2, 2);
  diag(0, 0) = 1;
  CHECK_THROWS_AS(graph_quartic(diag), InvalidGraph);
}

TEST_CASE("real flag uses the 1e-14 relative threshold") {
  SymTensor S(2, 3);
  S.fj_mutable()[0] = 1.0;
  S.fj_mutable()[1] = cdouble(0.5, 1e-16);
  S.refresh_real_flag();
  CHECK(S.is_real());
  S.fj_mutable()[1] = cdouble(0.5, 1e-12);
  S.refresh_real_flag();
  CHECK_FALSE(S.is_real());  // borderline treated as complex
}
