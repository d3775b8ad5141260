#pragma once
/**
 * @file tensor_file.hpp
 * @brief Tensor JSON files: strict parsing, 17-digit writing, digests.
 *
 * Format: a UTF-8 JSON object {"n", "d", "convention", "coeffs"} where
 * convention is "monomial" (entries are the a_j of f = sum a_j x^j) or "fj"
 * (entries are the f_j directly), and coeffs is a list of
 * {"j": [...], "re": ..., "im": ...}.  Unknown fields and duplicate indices
 * are rejected.  Writing uses 17 significant digits so parse/write
 * round-trips exactly modulo whitespace.
 */

#include <cstdint>
#include <string>

#include "symnorm/sym_tensor.hpp"

namespace symnorm {

struct ParsedTensor {
  SymTensor tensor;
  std::string convention;  ///< "monomial" or "fj", as found in the file
};

/// Parses tensor JSON text.  Throws ParseError on any malformation.
ParsedTensor parse_tensor_json(const std::string& text);

/// Reads and parses a tensor file.  Throws ParseError (also for I/O).
ParsedTensor parse_tensor_file(const std::string& path);

/// Serializes nonzero coefficients under the given convention.
std::string write_tensor_json(const SymTensor& S,
                              const std::string& convention = "fj");

/// FNV-1a 64 over the canonical fj serialization; stable content identity.
std::uint64_t tensor_digest(const SymTensor& S);

/// tensor_digest rendered as 16 lowercase hex digits.
std::string tensor_digest_hex(const SymTensor& S);

/// One double at 17 significant digits (round-trip exact).
std::string format_double17(double v);

}  // namespace symnorm
