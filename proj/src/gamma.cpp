#include "lexshell/gamma.hpp"

#include <algorithm>

namespace lexshell {

namespace {

void require_valid_input(const BasedMatroid& bm, ElementSet i_set) {
  if (!(i_set & bm.base()).empty() || !bm.matroid().is_independent(i_set)) {
    throw DependentInput(i_set);
  }
}

}  // namespace

Matroid gamma(const BasedMatroid& bm, ElementSet i_set) {
  require_valid_input(bm, i_set);
  int d = bm.rank();
  int gr = d - i_set.size();
  std::vector<ElementSet> gbases;
  for_each_subset(bm.base(), [&](ElementSet g) {
    if (g.size() == gr && bm.matroid().is_independent(g | i_set)) {
      gbases.push_back(g);
    }
  });
  std::sort(gbases.begin(), gbases.end());
  return Matroid::from_bases(bm.matroid().ground_size(), std::move(gbases));
}

HVector gamma_h(const IndependenceTable& ind, ElementSet base, int rank,
                ElementSet i_set) {
  int gr = rank - i_set.size();
  HVector f(gr + 1, 0);
  for_each_subset(base, [&](ElementSet g) {
    if (g.size() <= gr && ind(g | i_set)) ++f[g.size()];
  });
  return h_vector_from_f(f);
}

RestrictedHFamily restricted_h_family(const BasedMatroid& bm) {
  IndependenceTable ind(bm.matroid());
  RestrictedHFamily fam;
  ElementSet rest = bm.matroid().ground_set() - bm.base();
  for_each_subset(rest, [&](ElementSet i_set) {
    if (!ind(i_set)) return;
    fam.entries[bm.positions_of(i_set)] =
        gamma_h(ind, bm.base(), bm.rank(), i_set);
  });
  return fam;
}

int basis_count(const BasedMatroid& bm, ElementSet i_set) {
  require_valid_input(bm, i_set);
  IndependenceTable ind(bm.matroid());
  HVector h = gamma_h(ind, bm.base(), bm.rank(), i_set);
  int total = 0;
  for (int v : h) total += v;
  return total;
}

bool check_U_equals_V(const BasedMatroid& bm, ElementSet i_set) {
  require_valid_input(bm, i_set);

  ShellingRecord full = lex_shelling(bm);
  std::vector<ElementSet> u;
  for (std::size_t i = 0; i < full.ordered_bases.size(); ++i) {
    if ((full.ordered_bases[i] - bm.base()) == i_set) {
      u.push_back(full.restriction_sets[i] - i_set);
    }
  }

  ShellingRecord link = lex_shelling_natural(gamma(bm, i_set));
  std::vector<ElementSet> v = link.restriction_sets;

  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  return u == v;
}

bool check_decomposition(const BasedMatroid& bm) {
  int d = bm.rank();
  HVector lhs = h_vector_from_shelling(lex_shelling(bm), d);

  HVector rhs(d + 1, 0);
  for (const auto& [positions, h] : restricted_h_family(bm).entries) {
    int shift = positions.size();
    for (std::size_t j = 0; j < h.size(); ++j) rhs[shift + j] += h[j];
  }
  return lhs == rhs;
}

bool check_going_up(const BasedMatroid& bm) {
  int d = bm.rank();
  HVector hm = h_vector(bm.matroid());
  if (hm[d] == 0) throw GoingUpInapplicable();

  IndependenceTable ind(bm.matroid());
  ElementSet rest = bm.matroid().ground_set() - bm.base();
  bool ok = true;
  for_each_subset(rest, [&](ElementSet i_set) {
    if (!ok || !ind(i_set) || i_set.size() >= d) return;
    HVector hi = gamma_h(ind, bm.base(), d, i_set);
    if (hi[d - i_set.size()] != 0) return;
    bool found = false;
    for (int z : (rest - i_set).elements()) {
      if (ind(i_set.with(z))) {
        found = true;
        break;
      }
    }
    if (!found) ok = false;
  });
  return ok;
}

}  // namespace lexshell
