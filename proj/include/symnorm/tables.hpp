#pragma once
/**
 * @file tables.hpp
 * @brief Reference tensor families and their result tables.
 *
 * Five families are reproduced as CSV tables:
 *   table1..table3 (and the extras fe7, fe8): two-variable mixtures
 *     f_e = sqrt(1-|e|^2) f + e h with e = t*omega over the grids
 *     t in {1/5, 1/4, 1/3, 1/2} and omega in {1, -1, i, w, -w},
 *     w = 1/2 + sqrt(3)/2 i, where f is a fixed unit form of degree
 *     4..8 and h the matching unit middle monomial.
 *   table4: qutrit cubics f_{a,b} = a(x1^3+x2^3+x3^3) + b x1 x2 x3 with
 *     fixed-point counts and both norms.
 *   table5: four-variable cubics f_{a,b} = a x1^2 x4 + 2b x1 x2 x3,
 *     |a|^2 + 2|b|^2 = 3.
 */

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "symnorm/homotopy.hpp"
#include "symnorm/qubit_norm.hpp"
#include "symnorm/sym_tensor.hpp"

namespace symnorm {

/// Base pair (f, h) of the mixture family, as length d+1 coefficient
/// vectors s with s_k = f_{(d-k,k)}.  example in {4,...,8}.
std::pair<VectorC, VectorC> fe_base(int example);

/// s-vector of f_e = sqrt(1-|e|^2) f + e h, e = t*omega.
VectorC fe_coeffs(int example, double t, cdouble omega);

struct FeTable {
  std::vector<double> ts;
  std::vector<cdouble> omegas;
  std::vector<std::string> omega_labels;
  Eigen::MatrixXd values;  ///< rows follow omegas, columns follow ts
};

/// Complex norms of the mixture family (univariate route).
FeTable fe_table(int example);

/// a (x1^3 + x2^3 + x3^3) + b x1 x2 x3 as monomial coefficients.
SymTensor qutrit_tensor(cdouble a, cdouble b);

/// a x1^2 x4 + 2 b x1 x2 x3 as monomial coefficients.
SymTensor ququadrit_tensor(cdouble a, cdouble b);

struct QutritRow {
  cdouble a, b;
  int real_points = 0;     ///< distinct real H fixed points, origin included
  int complex_points = 0;  ///< distinct non-real H fixed points
  std::optional<double> real_norm;  ///< absent for complex tensors
  double complex_norm = 0.0;
};

std::vector<QutritRow> qutrit_table(const SolveOptions& opts = {});

struct QuquadritRow {
  cdouble a, b;
  double complex_norm = 0.0;
};

std::vector<QuquadritRow> ququadrit_table(const SolveOptions& opts = {});

/// Renders a named table (table1..table5, fe7, fe8) as CSV with a header
/// row, comma separators, LF line endings, 4-decimal values.
std::string render_table_csv(const std::string& name,
                             const SolveOptions& opts = {});

/// All valid table names in presentation order.
std::vector<std::string> table_names();

}  // namespace symnorm
