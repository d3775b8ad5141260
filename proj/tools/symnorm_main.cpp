/**
 * symnorm: spectral norms of symmetric tensors, entanglement measures,
 * Dicke closed forms, clique quartics, point-configuration roots, and the
 * reproduction tables.  One subcommand per task; --json switches every
 * report to a single machine-readable JSON object.
 *
 * Exit codes: 0 success, 2 parse/usage error, 3 solver hard failure
 * (partial report emitted), 4 certification gap.
 */

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "symnorm/banach_oracle.hpp"
#include "symnorm/entanglement.hpp"
#include "symnorm/errors.hpp"
#include "symnorm/fixed_point.hpp"
#include "symnorm/qubit_norm.hpp"
#include "symnorm/report.hpp"
#include "symnorm/tables.hpp"
#include "symnorm/tensor_file.hpp"

namespace {

using namespace symnorm;

struct CommonOpts {
  std::string field = "complex";
  std::string method = "auto";
  double tol = 1e-10;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = all cores
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_method = true) {
  cmd->add_option("--field", opts.field, "Optimize over complex or real field")
      ->check(CLI::IsMember({"complex", "real"}));
  if (with_method) {
    cmd->add_option("--method", opts.method,
                    "auto (n=2 univariate, n>=3 homotopy), univariate, homotopy")
        ->check(CLI::IsMember({"auto", "univariate", "homotopy"}));
  }
  cmd->add_option("--tol", opts.tol, "Path-tracking residual tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts.seed, "Seed for homotopy gamma and oracle");
  cmd->add_option("--threads", opts.threads,
                  "Tracker threads (0 = all cores; SYMNORM_THREADS overrides)");
  cmd->add_flag("--json", opts.json, "Emit the report as one JSON object");
}

int resolve_threads(int requested) {
  if (const char* env = std::getenv("SYMNORM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

SolveOptions solve_options(const CommonOpts& opts) {
  SolveOptions so;
  so.tol = opts.tol;
  so.seed = opts.seed;
  so.threads = resolve_threads(opts.threads);
  return so;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const Report& rep, bool json) {
  std::cout << (json ? report_json(rep) : report_human(rep));
}

/// Routes a norm computation: univariate (n = 2) or fixed-point homotopy.
NormReport compute_norm(const SymTensor& S, Field field,
                        const std::string& method, const SolveOptions& so) {
  const bool univariate =
      method == "univariate" || (method == "auto" && S.n() == 2);
  if (univariate) {
    if (S.n() != 2) {
      throw UsageError("--method univariate requires a two-variable tensor");
    }
    QubitCoeffs qc = build_from_tensor(S);
    return field == Field::Real ? real_norm(qc) : complex_norm(qc);
  }
  return field == Field::Real ? real_spectral_norm(S, so)
                              : complex_spectral_norm(S, so);
}

/// Shared by `norm` and `entangle`: solve, certify against the ascent
/// oracle, assemble the report.  Hard solver failures print a partial
/// report and return 3; a certification gap returns 4.
int run_norm_like(const std::string& path, const CommonOpts& opts,
                  bool want_entangle) {
  const auto t0 = std::chrono::steady_clock::now();
  ParsedTensor pt = parse_tensor_file(path);
  const SymTensor& S = pt.tensor;
  const Field field = opts.field == "real" ? Field::Real : Field::Complex;
  if (field == Field::Real && !S.is_real()) {
    throw UsageError("--field real requires a real tensor");
  }
  if (S.d() < 3) {
    throw UsageError("norm routes require degree d >= 3 (got d = " +
                     std::to_string(S.d()) +
                     "); d = 2 is the matrix two-norm case");
  }
  const double hs = hs_norm(S);

  Report rep;
  rep.digest = tensor_digest_hex(S);
  rep.field = opts.field;
  if (hs == 0.0) {
    rep.method = "closed-form";
    rep.has_value = true;
    rep.value = 0.0;
    rep.certification = "PASS";
    rep.oracle_lower = 0.0;
    if (want_entangle) rep.warning = "zero tensor is not a state";
    rep.wall_time_s = elapsed_s(t0);
    emit(rep, opts.json);
    return 0;
  }

  try {
    NormReport nr = compute_norm(S, field, opts.method, solve_options(opts));
    OracleResult orc = ascend(S, -1, 300, opts.seed, field);
    const Verdict verdict = certify(S, nr, orc);

    rep = report_from_norm(nr);
    rep.digest = tensor_digest_hex(S);
    rep.certification = verdict == Verdict::PASS ? "PASS" : "GAP";
    rep.oracle_lower = orc.lower_bound;
    rep.diagnostics.emplace_back("oracle_starts",
                                 static_cast<double>(orc.starts));
    rep.diagnostics.emplace_back("oracle_converged_fraction",
                                 orc.converged_fraction);
    if (want_entangle) {
      EntanglementReport ent = measures(nr.value, hs);
      rep.eta = ent.eta;
      rep.geo_distance = ent.geo_distance;
      if (!ent.geo_valid) rep.warning = ent.warning;
    }
    rep.wall_time_s = elapsed_s(t0);
    emit(rep, opts.json);
    return verdict == Verdict::PASS ? 0 : 4;
  } catch (const UsageError&) {
    throw;  // argument problems keep exit code 2
  } catch (const Error& e) {
    rep.method = opts.method;
    rep.has_value = false;
    rep.error = e.what();
    rep.wall_time_s = elapsed_s(t0);
    emit(rep, opts.json);
    return 3;
  }
}

int run_dicke(int d, int n, const std::vector<int>& j_opt, bool json) {
  const auto t0 = std::chrono::steady_clock::now();
  MultiIndex j;
  double value = 0.0;
  if (!j_opt.empty()) {
    if (static_cast<int>(j_opt.size()) != n) {
      throw UsageError("--j must list exactly n entries");
    }
    j = MultiIndex(j_opt.begin(), j_opt.end());
    int sum = 0;
    for (int e : j) sum += e;
    if (sum != d) throw UsageError("--j entries must sum to d");
    value = dicke_norm(j);
  } else {
    std::tie(j, value) = most_entangled_dicke(d, n);
  }

  Report rep;
  rep.field = "complex";
  rep.method = "closed-form";
  rep.has_value = true;
  rep.value = value;
  rep.eta = -2.0 * std::log2(value);
  // The maximizer of |f| for a Dicke element is x_k = sqrt(j_k / d).
  rep.witness = VectorC(n);
  for (int k = 0; k < n; ++k) {
    rep.witness[k] = std::sqrt(static_cast<double>(j[k]) / d);
  }
  const auto [lo, hi] = eta_sym_bounds(d, n);
  rep.diagnostics.emplace_back("eta_sym_lower", lo);
  rep.diagnostics.emplace_back("eta_sym_upper", hi);
  for (int k = 0; k < n; ++k) {
    rep.diagnostics.emplace_back("j" + std::to_string(k),
                                 static_cast<double>(j[k]));
  }
  rep.wall_time_s = elapsed_s(t0);
  emit(rep, json);
  return 0;
}

Eigen::MatrixXi parse_edge_list(std::istream& in) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i)) continue;  // blank line
    if (!(ls >> j)) throw ParseError("edge line needs two vertex numbers");
    std::string rest;
    if (ls >> rest) throw ParseError("edge line has trailing content");
    if (i < 1 || j < 1) throw ParseError("vertices are 1-indexed");
    if (i == j) throw ParseError("self-loops are not allowed");
    edges.emplace_back(i, j);
    max_vertex = std::max({max_vertex, i, j});
  }
  if (edges.empty()) throw ParseError("edge list is empty");
  Eigen::MatrixXi adj = Eigen::MatrixXi::Zero(max_vertex, max_vertex);
  for (auto [i, j] : edges) {
    adj(i - 1, j - 1) = 1;
    adj(j - 1, i - 1) = 1;
  }
  return adj;
}

int run_graph(const std::string& path, const CommonOpts& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  Eigen::MatrixXi adj;
  if (path == "-") {
    adj = parse_edge_list(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    adj = parse_edge_list(in);
  }
  SymTensor S = graph_quartic(adj);

  Report rep;
  rep.digest = tensor_digest_hex(S);
  rep.field = "real";
  try {
    // The quartic has nonnegative coefficients, so |f(z)| <= f(|z|) on the
    // sphere: the complex and real spectral norms agree and the cheaper
    // real route (F-system, (d-1)^n paths) is exact.
    SolveOptions so = solve_options(opts);
    NormReport nr = S.n() == 2 ? real_norm(build_from_tensor(S))
                               : real_spectral_norm(S, so);
    OracleResult orc = ascend(S, -1, 300, opts.seed, Field::Real);
    const Verdict verdict = certify(S, nr, orc);

    rep = report_from_norm(nr);
    rep.digest = tensor_digest_hex(S);
    rep.certification = verdict == Verdict::PASS ? "PASS" : "GAP";
    rep.oracle_lower = orc.lower_bound;
    rep.diagnostics.emplace_back("vertices", static_cast<double>(adj.rows()));
    rep.diagnostics.emplace_back("edges", adj.sum() / 2.0);
    rep.diagnostics.emplace_back(
        "clique_number", std::round(1.0 / (1.0 - nr.value)));
    rep.wall_time_s = elapsed_s(t0);
    emit(rep, opts.json);
    return verdict == Verdict::PASS ? 0 : 4;
  } catch (const Error& e) {
    rep.has_value = false;
    rep.error = e.what();
    rep.wall_time_s = elapsed_s(t0);
    emit(rep, opts.json);
    return 3;
  }
}

int run_majorana(const std::string& path, bool json) {
  ParsedTensor pt = parse_tensor_file(path);
  if (pt.tensor.n() != 2) {
    throw UsageError("majorana requires a two-variable tensor");
  }
  QubitCoeffs qc = build_from_tensor(pt.tensor);
  std::vector<MajoranaPoint> pts;
  try {
    pts = majorana_roots(qc);
  } catch (const ZeroTensor& e) {
    throw UsageError(e.what());
  }
  if (json) {
    std::ostringstream os;
    os << "{\n  \"digest\": \"" << tensor_digest_hex(pt.tensor)
       << "\",\n  \"points\": [";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      os << (i ? "," : "") << "\n    {\"at_infinity\": "
         << (pts[i].at_infinity ? "true" : "false")
         << ", \"re\": " << format_double17(pts[i].value.real())
         << ", \"im\": " << format_double17(pts[i].value.imag())
         << ", \"multiplicity\": " << pts[i].multiplicity << "}";
    }
    os << "\n  ]\n}\n";
    std::cout << os.str();
  } else {
    std::cout << "point configuration (" << pts.size() << " distinct):\n";
    for (const auto& p : pts) {
      if (p.at_infinity) {
        std::cout << "  infinity";
      } else {
        std::cout << "  " << format_fixed4(p.value.real())
                  << (p.value.imag() < 0 ? " - " : " + ")
                  << format_fixed4(std::abs(p.value.imag())) << "i";
      }
      std::cout << "  (multiplicity " << p.multiplicity << ")\n";
    }
  }
  return 0;
}

int run_selfcheck(const CommonOpts& opts) {
  int failures = 0;
  auto check = [&failures](const std::string& name, double got,
                           double expect, double tol) {
    const bool ok = std::abs(got - expect) <= tol;
    if (!ok) ++failures;
    std::cout << "selfcheck " << name << ": " << (ok ? "PASS" : "FAIL")
              << " (got " << format_fixed4(got) << ", expect "
              << format_fixed4(expect) << ")\n";
  };

  check("dicke-(2,1)", dicke_norm({2, 1}), 2.0 / 3.0, 1e-12);

  VectorC s = VectorC::Zero(5);
  s[2] = 1.0 / std::sqrt(6.0);  // the balanced degree-4 Dicke element
  check("univariate-S(4,2)", complex_norm(build(s)).value,
        std::sqrt(6.0) / 4.0, 1e-9);

  SolveOptions so = solve_options(opts);
  SymTensor qutrit = qutrit_tensor(0.0, std::sqrt(6.0));
  check("homotopy-S(3,3)", complex_spectral_norm(qutrit, so).value,
        std::sqrt(2.0) / 3.0, 1e-7);

  OracleResult orc = ascend(qutrit, -1, 300, opts.seed, Field::Complex);
  check("oracle-S(3,3)", orc.lower_bound, std::sqrt(2.0) / 3.0, 1e-7);

  return failures == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symnorm: complex and real spectral norms of symmetric tensors"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file;
  std::string table_name;
  int dicke_d = 0, dicke_n = 0;
  std::vector<int> dicke_j;

  CLI::App* c_norm = app.add_subcommand("norm", "Spectral norm of a tensor");
  c_norm->add_option("file", file, "Tensor JSON file")->required();
  add_common(c_norm, opts);

  CLI::App* c_ent =
      app.add_subcommand("entangle", "Norm plus entanglement measures");
  c_ent->add_option("file", file, "Tensor JSON file")->required();
  add_common(c_ent, opts);

  CLI::App* c_dicke =
      app.add_subcommand("dicke", "Dicke basis norms and bounds");
  c_dicke->add_option("d", dicke_d, "Degree")->required();
  c_dicke->add_option("n", dicke_n, "Variables")->required();
  c_dicke->add_option("--j", dicke_j, "Explicit basis index (n entries)");
  c_dicke->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* c_graph =
      app.add_subcommand("graph", "Clique quartic norm of an edge list");
  c_graph->add_option("file", file, "Edge list file (\"-\" for stdin)")
      ->required();
  add_common(c_graph, opts, /*with_method=*/false);

  CLI::App* c_maj =
      app.add_subcommand("majorana", "Point configuration of an n=2 tensor");
  c_maj->add_option("file", file, "Tensor JSON file")->required();
  c_maj->add_flag("--json", opts.json, "Emit JSON");

  CLI::App* c_table =
      app.add_subcommand("table", "Reproduce a result table as CSV");
  c_table->add_option("name", table_name, "table1..table5, fe7, fe8")
      ->required();
  add_common(c_table, opts, /*with_method=*/false);

  CLI::App* c_self = app.add_subcommand("selfcheck", "Quick internal checks");
  add_common(c_self, opts, /*with_method=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_norm->parsed()) return run_norm_like(file, opts, false);
    if (c_ent->parsed()) return run_norm_like(file, opts, true);
    if (c_dicke->parsed()) return run_dicke(dicke_d, dicke_n, dicke_j, opts.json);
    if (c_graph->parsed()) return run_graph(file, opts);
    if (c_maj->parsed()) return run_majorana(file, opts.json);
    if (c_table->parsed()) {
      std::cout << render_table_csv(table_name, solve_options(opts));
      return 0;
    }
    if (c_self->parsed()) return run_selfcheck(opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidIndex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidGraph& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegreeTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
