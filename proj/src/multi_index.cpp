#include "symnorm/multi_index.hpp"

#include <cmath>
#include <numeric>

#include "symnorm/errors.hpp"

namespace symnorm {

double binomial(double a, int b) {
  if (b < 0) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r *= (a - (b - i)) / i;
  return r;
}

double log2_binomial(double a, double b) {
  return (std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0)) /
         std::log(2.0);
}

double index_count(int d, int n) { return binomial(n + d - 1.0, n - 1); }

double multinomial(const MultiIndex& j) {
  int d = std::accumulate(j.begin(), j.end(), 0);
  double r = 1.0;
  int used = 0;
  for (int jk : j) {
    // c(j) = prod over entries of binomial(partial sum, j_k)
    used += jk;
    r *= binomial(used, jk);
  }
  (void)d;
  return r;
}

std::vector<MultiIndex> enumerate_indices(int d, int n) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  // Recursive lexicographic fill without recursion: odometer over prefixes.
  std::vector<int> rem(n + 1, 0);
  // simple recursive lambda
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (n >= 1) rec(rec, 0, d);
  return out;
}

int index_rank(const MultiIndex& j) {
  if (j.empty()) throw InvalidIndex("empty multi-index");
  int n = static_cast<int>(j.size());
  int d = 0;
  for (int jk : j) {
    if (jk < 0) throw InvalidIndex("negative multi-index entry");
    d += jk;
  }
  // Count indices that precede j in ascending lex order: for each prefix
  // position p, indices sharing j_1..j_{p-1} with a smaller p-th entry.
  int rank = 0;
  int left = d;
  for (int p = 0; p < n - 1; ++p) {
    int vars_after = n - p - 1;
    for (int v = 0; v < j[p]; ++v) {
      rank += static_cast<int>(binomial(left - v + vars_after - 1.0, vars_after - 1));
    }
    left -= j[p];
  }
  return rank;
}

void validate_index(const MultiIndex& j, int d, int n) {
  if (static_cast<int>(j.size()) != n) throw InvalidIndex("multi-index length != n");
  int s = 0;
  for (int jk : j) {
    if (jk < 0) throw InvalidIndex("negative multi-index entry");
    s += jk;
  }
  if (s != d) throw DegreeMismatch("multi-index degree != d");
}

}  // namespace symnorm
