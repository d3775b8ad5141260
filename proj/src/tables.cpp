#include "symnorm/tables.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "symnorm/errors.hpp"
#include "symnorm/fixed_point.hpp"
#include "symnorm/report.hpp"

namespace symnorm {

namespace {

const double kSqrt3 = std::sqrt(3.0);

std::vector<double> fe_t_grid() { return {0.2, 0.25, 1.0 / 3.0, 0.5}; }

std::vector<cdouble> fe_omega_grid() {
  return {cdouble(1, 0), cdouble(-1, 0), cdouble(0, 1),
          cdouble(0.5, kSqrt3 / 2), cdouble(-0.5, kSqrt3 / 2)};
}

std::vector<std::string> fe_omega_labels() {
  return {"1", "-1", "i", "w", "-w"};
}

std::string complex_label(cdouble z) {
  if (z.imag() == 0.0) return format_fixed4(z.real());
  std::string s = format_fixed4(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += format_fixed4(std::abs(z.imag()));
  s += "i";
  return s;
}

}  // namespace

std::pair<VectorC, VectorC> fe_base(int example) {
  auto unit_h = [](int d, int k) {
    VectorC h = VectorC::Zero(d + 1);
    h[k] = 1.0 / std::sqrt(binomial(d, k));
    return h;
  };
  switch (example) {
    case 4: {
      VectorC f = VectorC::Zero(5);
      f[0] = 1.0 / kSqrt3;
      f[3] = std::sqrt(8.0) / (4.0 * kSqrt3);
      return {f, unit_h(4, 2)};
    }
    case 5: {
      const double A = 1.53154;
      const double r = 1.0 / std::sqrt(1.0 + A * A);
      VectorC f = VectorC::Zero(6);
      f[0] = r;
      f[4] = A * r / std::sqrt(5.0);
      return {f, unit_h(5, 2)};
    }
    case 6: {
      VectorC f = VectorC::Zero(7);
      f[1] = kSqrt3 / 6.0;
      f[5] = kSqrt3 / 6.0;
      return {f, unit_h(6, 3)};
    }
    case 7: {
      VectorC f = VectorC::Zero(8);
      f[1] = 1.0 / std::sqrt(14.0);
      f[6] = 1.0 / std::sqrt(14.0);
      return {f, unit_h(7, 3)};
    }
    case 8: {
      VectorC f = VectorC::Zero(9);
      f[1] = 0.168 * std::sqrt(2.0);
      f[6] = 0.3705 * std::sqrt(7.0) / 7.0;
      return {f, unit_h(8, 4)};
    }
    default:
      throw InvalidIndex("fe_base: example must be in 4..8");
  }
}

VectorC fe_coeffs(int example, double t, cdouble omega) {
  auto [f, h] = fe_base(example);
  const cdouble e = t * omega;
  return std::sqrt(1.0 - std::norm(e)) * f + e * h;
}

FeTable fe_table(int example) {
  FeTable table;
  table.ts = fe_t_grid();
  table.omegas = fe_omega_grid();
  table.omega_labels = fe_omega_labels();
  table.values.resize(static_cast<Eigen::Index>(table.omegas.size()),
                      static_cast<Eigen::Index>(table.ts.size()));
  for (std::size_t r = 0; r < table.omegas.size(); ++r) {
    for (std::size_t c = 0; c < table.ts.size(); ++c) {
      QubitCoeffs qc = build(fe_coeffs(example, table.ts[c], table.omegas[r]));
      table.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          complex_norm(qc).value;
    }
  }
  return table;
}

SymTensor qutrit_tensor(cdouble a, cdouble b) {
  std::map<MultiIndex, cdouble> mono;
  mono[{3, 0, 0}] = a;
  mono[{0, 3, 0}] = a;
  mono[{0, 0, 3}] = a;
  mono[{1, 1, 1}] = b;
  return from_monomial_coefficients(3, 3, mono);
}

SymTensor ququadrit_tensor(cdouble a, cdouble b) {
  std::map<MultiIndex, cdouble> mono;
  mono[{2, 0, 0, 1}] = a;
  mono[{1, 1, 1, 0}] = 2.0 * b;
  return from_monomial_coefficients(4, 3, mono);
}

std::vector<QutritRow> qutrit_table(const SolveOptions& opts) {
  const double s32 = std::sqrt(1.5);
  std::vector<std::pair<cdouble, cdouble>> params = {
      {cdouble(1.0 / 3.0, 0), cdouble(2, 0)},
      {cdouble(0.5, 0), cdouble(s32, 0)},
      {cdouble(1.0 / 3.0, 0), cdouble(-2, 0)},
      {cdouble(0.5, 0), cdouble(-s32, 0)},
      {cdouble(0, 0), cdouble(std::sqrt(6.0), 0)},
      {cdouble(1.0 / kSqrt3, 0), cdouble(0, 0)},
      {cdouble(1.0 / 6.0, kSqrt3 / 6.0), cdouble(std::sqrt(2.0), -std::sqrt(2.0))},
      {cdouble(0.25, kSqrt3 / 4.0),
       cdouble(std::sqrt(6.0) / 4.0, 3.0 * std::sqrt(2.0) / 4.0)},
  };
  std::vector<QutritRow> rows;
  for (const auto& [a, b] : params) {
    QutritRow row;
    row.a = a;
    row.b = b;
    SymTensor S = qutrit_tensor(a, b);
    NormReport cn = complex_spectral_norm(S, opts);
    row.complex_norm = cn.value;
    row.real_points = static_cast<int>(cn.diagnostic("real_points").value_or(0));
    row.complex_points =
        static_cast<int>(cn.diagnostic("complex_points").value_or(0));
    if (S.is_real()) row.real_norm = real_spectral_norm(S, opts).value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<QuquadritRow> ququadrit_table(const SolveOptions& opts) {
  const double s2 = std::sqrt(2.0);
  std::vector<std::pair<cdouble, cdouble>> params = {
      {cdouble(1, 0), cdouble(1, 0)},
      {cdouble(s2 / 2, 0), cdouble(std::sqrt(5.0) / 2, 0)},
      {cdouble(std::sqrt(5.0) / 2, 0), cdouble(std::sqrt(7.0 / 8.0), 0)},
      {cdouble(s2 / 2, s2 / 2), cdouble(0.5, kSqrt3 / 2)},
      {s2 / 2 * cdouble(0.5, -kSqrt3 / 2),
       std::sqrt(5.0) / 2 * cdouble(kSqrt3 / 4, std::sqrt(13.0) / 4)},
      {std::sqrt(6.0) / 2 * cdouble(s2 / 2, s2 / 2),
       kSqrt3 / 2 * cdouble(kSqrt3 / 2, 0.5)},
  };
  std::vector<QuquadritRow> rows;
  for (const auto& [a, b] : params) {
    QuquadritRow row;
    row.a = a;
    row.b = b;
    row.complex_norm = complex_spectral_norm(ququadrit_tensor(a, b), opts).value;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> table_names() {
  return {"table1", "table2", "table3", "table4", "table5", "fe7", "fe8"};
}

std::string render_table_csv(const std::string& name,
                             const SolveOptions& opts) {
  std::ostringstream os;
  auto fe_csv = [&os](int example) {
    FeTable t = fe_table(example);
    os << "omega";
    for (double tv : t.ts) os << ",t=" << format_fixed4(tv);
    os << "\n";
    for (std::size_t r = 0; r < t.omegas.size(); ++r) {
      os << t.omega_labels[r];
      for (Eigen::Index c = 0; c < t.values.cols(); ++c) {
        os << "," << format_fixed4(t.values(static_cast<Eigen::Index>(r), c));
      }
      os << "\n";
    }
  };
  if (name == "table1") {
    fe_csv(4);
  } else if (name == "table2") {
    fe_csv(5);
  } else if (name == "table3") {
    fe_csv(6);
  } else if (name == "fe7") {
    fe_csv(7);
  } else if (name == "fe8") {
    fe_csv(8);
  } else if (name == "table4") {
    os << "a,b,real_points,complex_points,real_norm,complex_norm\n";
    for (const QutritRow& row : qutrit_table(opts)) {
      os << complex_label(row.a) << "," << complex_label(row.b) << ","
         << row.real_points << "," << row.complex_points << ","
         << (row.real_norm ? format_fixed4(*row.real_norm) : std::string("-"))
         << "," << format_fixed4(row.complex_norm) << "\n";
    }
  } else if (name == "table5") {
    os << "a,b,complex_norm\n";
    for (const QuquadritRow& row : ququadrit_table(opts)) {
      os << complex_label(row.a) << "," << complex_label(row.b) << ","
         << format_fixed4(row.complex_norm) << "\n";
    }
  } else {
    throw UsageError("unknown table: " + name);
  }
  return os.str();
}

}  // namespace symnorm
