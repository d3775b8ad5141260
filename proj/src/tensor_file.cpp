#include "symnorm/tensor_file.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symnorm/errors.hpp"

namespace symnorm {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCoefficientCount = 100000;

void require_keys(const json& obj, const std::set<std::string>& keys,
                  const char* where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (keys.find(it.key()) == keys.end()) {
      throw ParseError(std::string("unknown field \"") + it.key() + "\" in " +
                       where);
    }
  }
  for (const auto& k : keys) {
    if (!obj.contains(k)) {
      throw ParseError(std::string("missing field \"") + k + "\" in " + where);
    }
  }
}

int require_int(const json& v, const char* name) {
  if (!v.is_number_integer()) {
    throw ParseError(std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

double require_number(const json& v, const char* name) {
  if (!v.is_number()) {
    throw ParseError(std::string("field \"") + name + "\" must be a number");
  }
  return v.get<double>();
}

}  // namespace

ParsedTensor parse_tensor_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("top level must be a JSON object");
  require_keys(root, {"n", "d", "convention", "coeffs"}, "tensor file");

  const int n = require_int(root["n"], "n");
  const int d = require_int(root["d"], "d");
  if (n < 1 || d < 1) throw ParseError("n and d must be >= 1");
  if (index_count(d, n) > static_cast<double>(kMaxCoefficientCount)) {
    throw ParseError("tensor shape exceeds the supported size");
  }
  if (!root["convention"].is_string()) {
    throw ParseError("field \"convention\" must be a string");
  }
  const std::string convention = root["convention"].get<std::string>();
  if (convention != "monomial" && convention != "fj") {
    throw ParseError("convention must be \"monomial\" or \"fj\"");
  }
  if (!root["coeffs"].is_array()) {
    throw ParseError("field \"coeffs\" must be an array");
  }

  std::map<MultiIndex, cdouble> entries;
  for (const json& item : root["coeffs"]) {
    if (!item.is_object()) throw ParseError("coeffs entries must be objects");
    require_keys(item, {"j", "re", "im"}, "coefficient entry");
    if (!item["j"].is_array()) throw ParseError("\"j\" must be an array");
    MultiIndex j;
    for (const json& e : item["j"]) j.push_back(require_int(e, "j entry"));
    if (static_cast<int>(j.size()) != n) {
      throw ParseError("index length does not match n");
    }
    int sum = 0;
    for (int e : j) {
      if (e < 0) throw ParseError("negative index entry");
      sum += e;
    }
    if (sum != d) throw ParseError("index entries must sum to d");
    if (entries.count(j)) throw ParseError("duplicate index in coeffs");
    entries[j] = cdouble(require_number(item["re"], "re"),
                         require_number(item["im"], "im"));
  }

  try {
    SymTensor S = convention == "monomial"
                      ? from_monomial_coefficients(n, d, entries)
                      : from_fj_coefficients(n, d, entries);
    return {std::move(S), convention};
  } catch (const Error& e) {
    throw ParseError(std::string("invalid tensor data: ") + e.what());
  }
}

ParsedTensor parse_tensor_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tensor_json(buf.str());
}

std::string format_double17(double v) {
  char out[64];
  std::snprintf(out, sizeof(out), "%.17g", v);
  return out;
}

std::string write_tensor_json(const SymTensor& S,
                              const std::string& convention) {
  if (convention != "monomial" && convention != "fj") {
    throw ParseError("convention must be \"monomial\" or \"fj\"");
  }
  std::ostringstream os;
  os << "{\n  \"n\": " << S.n() << ",\n  \"d\": " << S.d()
     << ",\n  \"convention\": \"" << convention << "\",\n  \"coeffs\": [";
  bool first = true;
  const auto& idx = S.indices();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    cdouble v = S.fj()[static_cast<Eigen::Index>(r)];
    if (v == cdouble(0.0)) continue;
    if (convention == "monomial") v *= multinomial(idx[r]);
    os << (first ? "" : ",") << "\n    {\"j\": [";
    for (std::size_t k = 0; k < idx[r].size(); ++k) {
      os << (k ? ", " : "") << idx[r][k];
    }
    os << "], \"re\": " << format_double17(v.real())
       << ", \"im\": " << format_double17(v.imag()) << "}";
    first = false;
  }
  os << (first ? "" : "\n  ") << "]\n}\n";
  return os.str();
}

std::uint64_t tensor_digest(const SymTensor& S) {
  std::ostringstream os;
  os << "symnorm:" << S.n() << ":" << S.d();
  const auto& idx = S.indices();
  for (std::size_t r = 0; r < idx.size(); ++r) {
    cdouble v = S.fj()[static_cast<Eigen::Index>(r)];
    if (v == cdouble(0.0)) continue;
    os << ":" << r << "=" << format_double17(v.real()) << ","
       << format_double17(v.imag());
  }
  const std::string canon = os.str();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string tensor_digest_hex(const SymTensor& S) {
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx",
                static_cast<unsigned long long>(tensor_digest(S)));
  return out;
}

}  // namespace symnorm
