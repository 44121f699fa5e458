#include "lexshell/shelling.hpp"

#include <algorithm>
#include <unordered_set>

#include "lexshell/subsets.hpp"

namespace lexshell {

namespace {

ElementSet remap(ElementSet s, const std::vector<int>& table) {
  ElementSet out;
  for (int e : s.elements()) out = out.with(table[e]);
  return out;
}

// Shelling under the vertex order "element e sits at position to_pos[e]".
// to_label inverts to_pos; both are 1-based on both sides.
ShellingRecord shell_with_positions(const Matroid& m,
                                    const std::vector<int>& to_pos,
                                    const std::vector<int>& to_label) {
  std::vector<ElementSet> ordered;
  ordered.reserve(m.bases().size());
  for (ElementSet b : m.bases()) ordered.push_back(remap(b, to_pos));
  std::sort(ordered.begin(), ordered.end(), lex_less);

  std::unordered_set<std::uint32_t> basis_bits;
  basis_bits.reserve(ordered.size() * 2);
  for (ElementSet b : ordered) basis_bits.insert(b.bits());

  ElementSet all = ElementSet::full(m.ground_size());
  ShellingRecord out;
  out.ordered_bases.reserve(ordered.size());
  out.restriction_sets.reserve(ordered.size());
  for (ElementSet b : ordered) {
    ElementSet r;
    for (int v : b.elements()) {
      ElementSet stub = b.without(v);
      for (int w : (all - b).elements()) {
        ElementSet other = stub.with(w);
        if (basis_bits.count(other.bits()) && lex_less(other, b)) {
          r = r.with(v);
          break;
        }
      }
    }
    out.ordered_bases.push_back(remap(b, to_label));
    out.restriction_sets.push_back(remap(r, to_label));
  }
  return out;
}

}  // namespace

ShellingRecord lex_shelling(const BasedMatroid& bm) {
  const Matroid& m = bm.matroid();
  int n = m.ground_size();
  std::vector<int> to_pos(n + 1, 0);
  std::vector<int> to_label(n + 1, 0);
  std::vector<int> pos0 = bm.shelling_positions();
  for (int e = 1; e <= n; ++e) {
    to_pos[e] = pos0[e] + 1;
    to_label[pos0[e] + 1] = e;
  }
  return shell_with_positions(m, to_pos, to_label);
}

ShellingRecord lex_shelling_natural(const Matroid& m) {
  std::vector<int> identity(m.ground_size() + 1);
  for (int e = 0; e <= m.ground_size(); ++e) identity[e] = e;
  return shell_with_positions(m, identity, identity);
}

HVector h_vector_from_shelling(const ShellingRecord& sr, int d) {
  HVector h(d + 1, 0);
  for (ElementSet r : sr.restriction_sets) ++h[r.size()];
  return h;
}

HVector h_vector_from_f(const HVector& f) {
  int d = static_cast<int>(f.size()) - 1;
  HVector h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    std::int64_t acc = 0;
    for (int j = 0; j <= k; ++j) {
      std::int64_t c = binomial(d - j, k - j);
      acc += ((k - j) % 2 == 0 ? c : -c) * f[j];
    }
    if (acc < 0) throw NegativeEntry(k, static_cast<int>(acc));
    h[k] = static_cast<int>(acc);
  }
  return h;
}

HVector h_vector(const Matroid& m) { return h_vector_from_f(m.f_vector()); }

}  // namespace lexshell
