#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lexshell/element_set.hpp"

namespace lexshell {

/// C(n, k) for 0 <= n, k <= 16, 0 outside that triangle.
constexpr std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Position of an r-subset of {1..n} in the reverse lexicographic order,
/// where A precedes B iff max(A ^ B) lies in B.  Sum of C(e_i - 1, i) over
/// the elements e_1 < e_2 < ... taken with 1-based index i.
inline int revlex_rank(ElementSet s) {
  int rank = 0;
  int i = 1;
  for (int e : s.elements()) {
    rank += static_cast<int>(binomial(e - 1, i));
    ++i;
  }
  return rank;
}

/// All r-subsets of {1..n} in revlex order.  Cached; threadsafe after the
/// first call per (n, r).
const std::vector<ElementSet>& subsets_revlex(int n, int r);

}  // namespace lexshell
