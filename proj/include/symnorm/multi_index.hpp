#pragma once
/**
 * @file multi_index.hpp
 * @brief Multi-index set J(d,n), multinomial coefficients, and enumeration.
 *
 * A multi-index j = (j_1,...,j_n) of degree d has nonnegative entries summing
 * to d.  J(d,n) is enumerated in ascending lexicographic order, which is
 * deterministic and total; the position of an index in that enumeration is
 * its rank.  c(j) = d!/(j_1! ... j_n!) is the multinomial coefficient.
 */

#include <cstdint>
#include <vector>

namespace symnorm {

using MultiIndex = std::vector<int>;

/// Number of elements of J(d,n): binomial(n+d-1, n-1).  Exact in double for
/// every desk-scale case; use the log form for large arguments.
double index_count(int d, int n);

/// binomial(a, b) computed multiplicatively; exact while below 2^53.
double binomial(double a, int b);

/// log2 of binomial(a, b) via lgamma, safe for a ~ 10^3 and beyond.
double log2_binomial(double a, double b);

/// Multinomial coefficient c(j) = d!/(j_1!...j_n!) where d = sum(j).
double multinomial(const MultiIndex& j);

/// Ascending lexicographic enumeration of J(d,n).
std::vector<MultiIndex> enumerate_indices(int d, int n);

/// Rank of j within enumerate_indices(sum(j), j.size()).
/// Throws InvalidIndex for negative entries or empty j.
int index_rank(const MultiIndex& j);

/// Validates that j has length n, nonnegative entries (InvalidIndex
/// otherwise) and sums to d (DegreeMismatch otherwise).
void validate_index(const MultiIndex& j, int d, int n);

}  // namespace symnorm
