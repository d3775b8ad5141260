#include "symnorm/report.hpp"

#include <cfenv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace symnorm {

Report report_from_norm(const NormReport& nr) {
  Report rep;
  rep.field = field_name(nr.field);
  rep.method = nr.method;
  rep.has_value = true;
  rep.value = nr.value;
  rep.witness = nr.witness;
  rep.witness_residual = nr.witness_residual;
  rep.lower_bound_only = nr.lower_bound_only;
  rep.diagnostics = nr.diagnostics;
  return rep;
}

std::string report_json(const Report& rep) {
  nlohmann::json j;
  j["digest"] = rep.digest;
  j["field"] = rep.field;
  j["method"] = rep.method;
  if (rep.has_value) {
    j["value"] = rep.value;
    j["lower_bound_only"] = rep.lower_bound_only;
    nlohmann::json w = nlohmann::json::array();
    for (Eigen::Index k = 0; k < rep.witness.size(); ++k) {
      w.push_back({{"re", rep.witness[k].real()}, {"im", rep.witness[k].imag()}});
    }
    j["witness"] = w;
    j["witness_residual"] = rep.witness_residual;
  }
  if (rep.eta) j["eta"] = *rep.eta;
  if (rep.geo_distance && std::isfinite(*rep.geo_distance)) {
    j["geo_distance"] = *rep.geo_distance;
  }
  if (!rep.warning.empty()) j["warning"] = rep.warning;
  if (!rep.certification.empty()) j["certification"] = rep.certification;
  if (rep.oracle_lower) j["oracle_lower"] = *rep.oracle_lower;
  nlohmann::json diag = nlohmann::json::object();
  for (const auto& kv : rep.diagnostics) diag[kv.first] = kv.second;
  j["diagnostics"] = diag;
  j["wall_time_s"] = rep.wall_time_s;
  if (!rep.error.empty()) j["error"] = rep.error;
  return j.dump(2) + "\n";
}

std::string format_fixed4(double v) {
  // std::nearbyint under the default FE_TONEAREST mode rounds half to even,
  // matching the display convention of the reproduced tables.
  const double scaled = std::nearbyint(v * 1e4) / 1e4;
  char out[64];
  std::snprintf(out, sizeof(out), "%.4f", scaled);
  return out;
}

std::string report_human(const Report& rep) {
  std::ostringstream os;
  if (!rep.digest.empty()) os << "tensor   " << rep.digest << "\n";
  os << "field    " << rep.field << "\n";
  os << "method   " << rep.method << "\n";
  if (rep.has_value) {
    os << "value    " << format_fixed4(rep.value);
    if (rep.lower_bound_only) os << "  (lower bound only)";
    os << "\n";
    os << "witness  [";
    for (Eigen::Index k = 0; k < rep.witness.size(); ++k) {
      if (k) os << ", ";
      os << format_fixed4(rep.witness[k].real());
      const double im = rep.witness[k].imag();
      os << (im < 0 ? " - " : " + ") << format_fixed4(std::abs(im)) << "i";
    }
    os << "]\n";
  }
  if (rep.eta) os << "eta      " << format_fixed4(*rep.eta) << " bits\n";
  if (rep.geo_distance && std::isfinite(*rep.geo_distance)) {
    os << "distance " << format_fixed4(*rep.geo_distance) << "\n";
  }
  if (!rep.warning.empty()) os << "warning  " << rep.warning << "\n";
  if (!rep.certification.empty()) {
    os << "oracle   " << rep.certification;
    if (rep.oracle_lower) os << " (lower bound " << format_fixed4(*rep.oracle_lower) << ")";
    os << "\n";
  }
  if (!rep.error.empty()) os << "error    " << rep.error << "\n";
  for (const auto& kv : rep.diagnostics) {
    os << "  " << kv.first << " = " << kv.second << "\n";
  }
  char wall[64];
  std::snprintf(wall, sizeof(wall), "%.3f", rep.wall_time_s);
  os << "wall     " << wall << " s\n";
  return os.str();
}

}  // namespace symnorm
