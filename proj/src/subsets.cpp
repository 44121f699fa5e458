#include "lexshell/subsets.hpp"

#include <array>

namespace lexshell {

namespace {

std::vector<ElementSet> build_revlex(int n, int r) {
  // Subsets avoiding n come first in revlex, then those containing n,
  // ordered by their remainder.
  std::vector<ElementSet> out;
  out.reserve(static_cast<std::size_t>(binomial(n, r)));
  if (r == 0) {
    out.push_back(ElementSet{});
    return out;
  }
  if (n <= 0 || r > n) return out;
  for (ElementSet s : build_revlex(n - 1, r)) out.push_back(s);
  for (ElementSet s : build_revlex(n - 1, r - 1)) out.push_back(s.with(n));
  return out;
}

using Tables =
    std::array<std::array<std::vector<ElementSet>, kMaxGroundSet + 1>,
               kMaxGroundSet + 1>;

Tables build_all() {
  Tables t;
  for (int n = 0; n <= kMaxGroundSet; ++n)
    for (int r = 0; r <= n; ++r) t[n][r] = build_revlex(n, r);
  return t;
}

}  // namespace

const std::vector<ElementSet>& subsets_revlex(int n, int r) {
  static const Tables tables = build_all();
  return tables[n][r];
}

}  // namespace lexshell
