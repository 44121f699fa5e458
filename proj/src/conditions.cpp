#include "lexshell/conditions.hpp"

#include <algorithm>
#include <map>

#include "lexshell/shelling.hpp"

namespace lexshell {

std::string ConditionReport::to_string() const {
  auto line = [](const char* name, const ConditionCheck& c) {
    std::string s = std::string(name) + ": " + (c.pass ? "pass" : "FAIL");
    if (!c.pass) s += " (" + c.witness + ")";
    return s + "\n";
  };
  return line("condition 1 (variables)", variables) +
         line("condition 2 (supports)", supports) +
         line("condition 3 (counts)", counts) +
         line("condition 4 (restrictions)", restrictions) +
         line("purity", purity) + line("F-vector = h-vector", fvector);
}

ConditionReport check_conditions(const BasedMatroid& bm, const OrderIdeal& o,
                                 const RestrictedHFamily& family) {
  ConditionReport rep;
  const Matroid& m = bm.matroid();
  ElementSet rest = m.ground_set() - bm.base();

  for (Monomial mono : o) {
    if (!mono.support().subset_of(rest)) {
      rep.variables = {false, mono.to_string()};
      break;
    }
  }

  for (Monomial mono : o) {
    ElementSet s = mono.support();
    if (!(s & bm.base()).empty() || !m.is_independent(s)) {
      rep.supports = {false, mono.to_string()};
      break;
    }
  }

  {
    // Tally monomials by (support, degree) and compare against the family.
    std::map<ElementSet, std::map<int, int>> got;
    for (Monomial mono : o) {
      if (!mono.support().subset_of(rest)) continue;
      ++got[mono.support()][mono.degree()];
    }
    for (const auto& [positions, h] : family.entries) {
      ElementSet labels = bm.labels_of(positions);
      auto it = got.find(labels);
      int k = labels.size();
      for (int j = 0; j < static_cast<int>(h.size()); ++j) {
        int want = h[j];
        int have = 0;
        if (it != got.end()) {
          auto dit = it->second.find(k + j);
          if (dit != it->second.end()) have = dit->second;
        }
        if (want != have) {
          rep.counts = {false, "support " + labels.to_string() + " degree " +
                                   std::to_string(k + j) + ": " +
                                   std::to_string(have) + " monomials, " +
                                   "expected " + std::to_string(want)};
          break;
        }
      }
      if (rep.counts.pass && it != got.end()) {
        // No monomial may sit above the top degree h(Gamma_I) allows.
        int top = k + static_cast<int>(h.size()) - 1;
        if (it->second.rbegin()->first > top) {
          rep.counts = {false, "support " + labels.to_string() +
                                   " has a monomial of degree above " +
                                   std::to_string(top)};
        }
      }
      if (!rep.counts.pass) break;
    }
  }

  if (rep.supports.pass) {
    for (const auto& [positions, h] : family.entries) {
      (void)h;
      ElementSet labels = bm.labels_of(positions);
      Matroid restricted = m.restriction(bm.base() | labels);
      BasedMatroid sub =
          BasedMatroid::create(restricted, bm.base(), bm.order());
      OrderIdeal expect = construct(sub);
      OrderIdeal got = restrict_support(o, labels);
      if (!(expect == got)) {
        rep.restrictions = {false, "restriction to " + labels.to_string() +
                                       " differs from the construction on "
                                       "the restricted matroid"};
        break;
      }
    }
  }

  try {
    if (auto bad = find_purity_violation(o)) {
      rep.purity = {false, "maximal monomial " + bad->to_string() +
                               " has non-maximal degree"};
    }
  } catch (const NotAnIdeal& e) {
    rep.purity = {false, e.what()};
  }

  {
    HVector f = F_vector(o);
    HVector h = h_vector(m);
    if (!equal_padded(f, h)) {
      rep.fvector = {false, "F = " + hvector_to_string(f) + " vs h = " +
                                hvector_to_string(h)};
    }
  }

  return rep;
}

BasedMatroid relabel_based(const BasedMatroid& bm,
                           const std::vector<int>& relabel) {
  int n = bm.matroid().ground_size();
  if (static_cast<int>(relabel.size()) != n + 1) {
    throw NotAnIsomorphism("relabeling must map each of 1.." +
                           std::to_string(n));
  }
  ElementSet seen;
  for (int e = 1; e <= n; ++e) {
    int img = relabel[e];
    if (img < 1 || img > n || seen.contains(img)) {
      throw NotAnIsomorphism("relabeling is not a permutation of 1.." +
                             std::to_string(n));
    }
    seen = seen.with(img);
  }

  ElementSet new_base;
  for (int e : bm.base().elements()) new_base = new_base.with(relabel[e]);
  std::vector<int> new_order;
  new_order.reserve(bm.order().size());
  for (int e : bm.order()) new_order.push_back(relabel[e]);
  return BasedMatroid::create(bm.matroid().relabeled(relabel), new_base,
                              std::move(new_order));
}

bool check_naturality(const BasedMatroid& bm,
                      const std::vector<int>& relabel) {
  BasedMatroid moved = relabel_based(bm, relabel);
  OrderIdeal direct = construct(moved);

  std::vector<Monomial> mapped;
  for (Monomial mono : construct(bm)) mapped.push_back(mono.relabeled(relabel));
  return direct == OrderIdeal(std::move(mapped));
}

}  // namespace lexshell
