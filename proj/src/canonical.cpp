#include "lexshell/canonical.hpp"

#include <vector>

#include "lexshell/subsets.hpp"

namespace lexshell {

namespace {

struct CanonicalSearch {
  int n;
  int r;
  std::vector<std::uint64_t> basis_map;  // 2^n bitmap of basis masks
  std::vector<int> image;                // new label -> original element
  std::vector<char> current;             // indicator bits along the path
  std::string best;
  bool have_best = false;

  bool is_basis_mask(std::uint32_t bits) const {
    return (basis_map[bits >> 6] >> (bits & 63)) & 1u;
  }

  // Assign the original element for new label k (1-based).  `pos` is the
  // number of indicator bits already fixed, `lt` means the current prefix
  // already beats the incumbent strictly.
  void assign(int k, int pos, bool lt, std::uint32_t used) {
    if (k > n) {
      // Ties with the incumbent are discarded; only strict improvements
      // (or the first completion) replace it.
      if (!have_best || lt) {
        best.assign(current.begin(), current.end());
        for (char& c : best) c += '0';
        have_best = true;
      }
      return;
    }
    const auto& fresh = subsets_revlex(k - 1, r - 1);
    for (int orig = 1; orig <= n; ++orig) {
      if ((used >> orig) & 1u) continue;
      image[k] = orig;
      // New indicator bits: subsets with maximum k, i.e. T + {k} for every
      // (r-1)-subset T of {1..k-1}, in revlex order of T.
      bool prune = false;
      bool child_lt = lt;
      int p = pos;
      for (ElementSet t : fresh) {
        std::uint32_t mapped = 1u << orig;
        for (std::uint32_t tb = t.bits(); tb; tb &= tb - 1) {
          mapped |= 1u << image[std::countr_zero(tb)];
        }
        char bit = is_basis_mask(mapped) ? 1 : 0;
        current[p] = bit;
        if (!child_lt && have_best) {
          char bbit = best[p] - '0';
          if (bit > bbit) {
            prune = true;
            break;
          }
          if (bit < bbit) child_lt = true;
        }
        ++p;
      }
      if (!prune) assign(k + 1, p, child_lt, used | (1u << orig));
    }
  }
};

}  // namespace

std::string canonical_form(const Matroid& m) {
  int n = m.ground_size();
  int r = m.rank();
  CanonicalSearch s;
  s.n = n;
  s.r = r;
  s.basis_map.assign((std::size_t{1} << n) / 64 + 1, 0);
  for (ElementSet b : m.bases()) {
    s.basis_map[b.bits() >> 6] |= std::uint64_t{1} << (b.bits() & 63);
  }
  s.image.assign(n + 1, 0);
  s.current.assign(static_cast<std::size_t>(binomial(n, r)), 0);
  if (r == 0) return "1";  // single empty basis, permutation-independent
  s.assign(1, 0, false, 0);
  return s.best;
}

}  // namespace lexshell
