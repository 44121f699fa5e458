#include "lexshell/constructor.hpp"

#include <algorithm>

#include "lexshell/gamma.hpp"

namespace lexshell {

namespace {

// Number of bases of Gamma_x, with 0 for loops.
int singleton_basis_count(const IndependenceTable& ind, ElementSet base,
                          int rank, int x) {
  if (!ind(ElementSet::single(x))) return 0;
  int count = 0;
  for_each_subset(base, [&](ElementSet g) {
    if (g.size() == rank - 1 && ind(g.with(x))) ++count;
  });
  return count;
}

// Working state shared by the two constructions, in relabeled coordinates
// (base = {1..d}, the rest = {d+1..n} in algorithm order).
struct Builder {
  const IndependenceTable& ind;
  ElementSet base;
  int d;
  std::vector<int> bcount;  // bcount[x] = |bases of Gamma_x|
  std::vector<Monomial> out;

  HVector h_pair(int x, int y) const {
    return gamma_h(ind, base, d, ElementSet::of({x, y}));
  }
  HVector h_triple(int x, int y, int z) const {
    return gamma_h(ind, base, d, ElementSet::of({x, y, z}));
  }

  void add(Monomial m) { out.push_back(m); }
  // x_a^ea * x_b^eb * x_c^ec, unused slots zero.
  void add(int a, int ea, int b = 0, int eb = 0, int c = 0, int ec = 0) {
    Monomial m = Monomial::one().times(a, ea);
    if (b) m = m.times(b, eb);
    if (c) m = m.times(c, ec);
    out.push_back(m);
  }
};

ReorderedMatroid reorder(const BasedMatroid& bm) {
  if (bm.rank() != 3 && bm.rank() != 4) throw RankUnsupported(bm.rank());

  const Matroid& m = bm.matroid();
  int n = m.ground_size();
  int d = bm.rank();
  IndependenceTable ind(m);

  std::vector<int> rest = bm.order();
  std::vector<int> count(n + 1, 0);
  for (int x : rest) count[x] = singleton_basis_count(ind, bm.base(), d, x);
  std::stable_sort(rest.begin(), rest.end(),
                   [&](int a, int b) { return count[a] < count[b]; });

  std::vector<int> forward(n + 1, 0);  // old -> new
  std::vector<int> back(n + 1, 0);     // new -> old
  int next = 1;
  for (int e : bm.base().elements()) {
    forward[e] = next;
    back[next] = e;
    ++next;
  }
  for (int e : rest) {
    forward[e] = next;
    back[next] = e;
    ++next;
  }

  Matroid relabeled = m.relabeled(forward);
  std::vector<int> new_order(rest.size());
  for (std::size_t i = 0; i < rest.size(); ++i) {
    new_order[i] = d + 1 + static_cast<int>(i);
  }
  return ReorderedMatroid{
      BasedMatroid::create(std::move(relabeled), ElementSet::full(d),
                           std::move(new_order)),
      std::move(back)};
}

void build_rank3(Builder& b, const std::vector<ElementSet>& independents) {
  b.add(Monomial::one());
  for (ElementSet i_set : independents) {
    auto e = i_set.elements();
    switch (i_set.size()) {
      case 1: {
        int x = e[0];
        for (int t = 1; t <= b.bcount[x]; ++t) b.add(x, t);
        break;
      }
      case 2: {
        int x = e[0], y = e[1];
        HVector h = b.h_pair(x, y);
        if (h == HVector{1, 0}) {
          b.add(x, 1, y, 1);
        } else if (h == HVector{1, 1}) {
          b.add(x, 1, y, 1);
          if (b.bcount[x] == 1) {
            b.add(x, 1, y, 2);
          } else {
            b.add(x, 2, y, 1);
          }
        } else {  // (1,2)
          b.add(x, 1, y, 1);
          b.add(x, 1, y, 2);
          b.add(x, 2, y, 1);
        }
        break;
      }
      default:
        b.add(e[0], 1, e[1], 1, e[2], 1);
    }
  }
}

void build_rank4(Builder& b, const std::vector<ElementSet>& independents) {
  b.add(Monomial::one());
  for (ElementSet i_set : independents) {
    auto e = i_set.elements();
    switch (i_set.size()) {
      case 1: {
        int x = e[0];
        for (int t = 1; t <= b.bcount[x]; ++t) b.add(x, t);
        break;
      }
      case 2: {
        int x = e[0], y = e[1];
        HVector h = b.h_pair(x, y);
        b.add(x, 1, y, 1);
        if (h == HVector{1, 0, 0}) {
          // just xy
        } else if (h == HVector{1, 1, 0}) {
          if (b.bcount[x] == 1) {
            b.add(x, 1, y, 2);
          } else {
            b.add(x, 2, y, 1);
          }
        } else if (h == HVector{1, 1, 1}) {
          if (b.bcount[x] == 1) {
            b.add(x, 1, y, 2);
            b.add(x, 1, y, 3);
          } else {
            b.add(x, 2, y, 1);
            b.add(x, 3, y, 1);
          }
        } else if (h == HVector{1, 2, 0}) {
          b.add(x, 2, y, 1);
          b.add(x, 1, y, 2);
        } else if (h == HVector{1, 2, 1}) {
          b.add(x, 2, y, 1);
          b.add(x, 1, y, 2);
          b.add(x, 2, y, 2);
        } else if (h == HVector{1, 2, 2}) {
          b.add(x, 2, y, 1);
          b.add(x, 1, y, 2);
          if (b.bcount[x] < 3) {
            b.add(x, 2, y, 2);
            b.add(x, 1, y, 3);
          } else {
            b.add(x, 3, y, 1);
            b.add(x, 1, y, 3);
          }
        } else {  // (1,2,3)
          b.add(x, 2, y, 1);
          b.add(x, 1, y, 2);
          b.add(x, 3, y, 1);
          b.add(x, 2, y, 2);
          b.add(x, 1, y, 3);
        }
        break;
      }
      case 3: {
        int x = e[0], y = e[1], z = e[2];
        HVector h = b.h_triple(x, y, z);
        b.add(x, 1, y, 1, z, 1);
        if (h == HVector{1, 0}) {
          // just xyz
        } else if (h == HVector{1, 1}) {
          HVector hxy = b.h_pair(x, y);
          HVector hxz = b.h_pair(x, z);
          HVector hyz = b.h_pair(y, z);
          const HVector h100{1, 0, 0}, h110{1, 1, 0}, h111{1, 1, 1};
          if (hxy == h100) {
            b.add(x, 1, y, 1, z, 2);
          } else if (hxz == h100) {
            b.add(x, 1, y, 2, z, 1);
          } else if (hyz == h100) {
            b.add(x, 2, y, 1, z, 1);
          } else if (hxy == h110 || hxy == h111) {
            if (b.bcount[x] == 1) {
              b.add(x, 1, y, 2, z, 1);
            } else {
              b.add(x, 2, y, 1, z, 1);
            }
          } else if (hxz == h110) {
            if (b.bcount[x] == 1) {
              b.add(x, 1, y, 1, z, 2);
            } else {
              b.add(x, 2, y, 1, z, 1);
            }
          } else if (hyz == h110 || hyz == h111) {
            if (b.bcount[y] == 1) {
              b.add(x, 1, y, 1, z, 2);
            } else {
              b.add(x, 1, y, 2, z, 1);
            }
          } else {
            b.add(x, 2, y, 1, z, 1);
          }
        } else if (h == HVector{1, 2}) {
          HVector hxy = b.h_pair(x, y);
          HVector hxz = b.h_pair(x, z);
          HVector hyz = b.h_pair(y, z);
          const HVector h110{1, 1, 0}, h111{1, 1, 1}, h120{1, 2, 0};
          if (b.bcount[x] == 1) {
            b.add(x, 1, y, 2, z, 1);
            b.add(x, 1, y, 1, z, 2);
          } else if (b.bcount[y] == 1) {
            b.add(x, 2, y, 1, z, 1);
            b.add(x, 1, y, 1, z, 2);
          } else if (b.bcount[z] == 1) {
            b.add(x, 2, y, 1, z, 1);
            b.add(x, 1, y, 2, z, 1);
          } else if (hxy == h110 || hxy == h111) {
            if (b.bcount[x] > b.bcount[y]) {
              b.add(x, 1, y, 2, z, 1);
              b.add(x, 1, y, 1, z, 2);
            } else {
              b.add(x, 2, y, 1, z, 1);
              b.add(x, 1, y, 1, z, 2);
            }
          } else if (hxz == h110 || hxz == h111) {
            if (b.bcount[x] > b.bcount[z]) {
              b.add(x, 1, y, 2, z, 1);
              b.add(x, 1, y, 1, z, 2);
            } else {
              b.add(x, 2, y, 1, z, 1);
              b.add(x, 1, y, 2, z, 1);
            }
          } else if (hyz == h110 || hyz == h111) {
            if (b.bcount[y] > b.bcount[z]) {
              b.add(x, 2, y, 1, z, 1);
              b.add(x, 1, y, 1, z, 2);
            } else {
              b.add(x, 2, y, 1, z, 1);
              b.add(x, 1, y, 2, z, 1);
            }
          } else if (hxy == h120) {
            b.add(x, 2, y, 1, z, 1);
            b.add(x, 1, y, 2, z, 1);
          } else if (hxz == h120) {
            b.add(x, 2, y, 1, z, 1);
            b.add(x, 1, y, 1, z, 2);
          } else if (hyz == h120) {
            b.add(x, 1, y, 2, z, 1);
            b.add(x, 1, y, 1, z, 2);
          } else {
            b.add(x, 2, y, 1, z, 1);
            b.add(x, 1, y, 2, z, 1);
          }
        } else {  // (1,3)
          b.add(x, 2, y, 1, z, 1);
          b.add(x, 1, y, 2, z, 1);
          b.add(x, 1, y, 1, z, 2);
        }
        break;
      }
      default: {
        Monomial m = Monomial::one();
        for (int v : e) m = m.times(v, 1);
        b.add(m);
      }
    }
  }
}

OrderIdeal run_construction(const BasedMatroid& bm) {
  ReorderedMatroid re = reorder(bm);
  const Matroid& m = re.bm.matroid();
  int d = re.bm.rank();
  IndependenceTable ind(m);

  std::vector<int> bcount(m.ground_size() + 1, 0);
  for (int x : re.bm.order()) {
    bcount[x] = singleton_basis_count(ind, re.bm.base(), d, x);
  }

  // Independent sets disjoint from the base, grouped by size via a sort.
  std::vector<ElementSet> independents;
  for_each_subset(m.ground_set() - re.bm.base(), [&](ElementSet s) {
    if (!s.empty() && ind(s)) independents.push_back(s);
  });
  std::sort(independents.begin(), independents.end(),
            [](ElementSet a, ElementSet b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  Builder builder{ind, re.bm.base(), d, std::move(bcount), {}};
  if (d == 3) {
    build_rank3(builder, independents);
  } else {
    build_rank4(builder, independents);
  }

  std::vector<Monomial> relabeled;
  relabeled.reserve(builder.out.size());
  for (Monomial mono : builder.out) {
    relabeled.push_back(mono.relabeled(re.back_map));
  }
  return OrderIdeal(std::move(relabeled));
}

}  // namespace

ReorderedMatroid step0(const BasedMatroid& bm) { return reorder(bm); }

OrderIdeal construct_rank3(const BasedMatroid& bm) {
  if (bm.rank() != 3) throw RankUnsupported(bm.rank());
  return run_construction(bm);
}

OrderIdeal construct_rank4(const BasedMatroid& bm) {
  if (bm.rank() != 4) throw RankUnsupported(bm.rank());
  return run_construction(bm);
}

OrderIdeal construct(const BasedMatroid& bm) {
  if (bm.rank() == 3) return construct_rank3(bm);
  if (bm.rank() == 4) return construct_rank4(bm);
  throw RankUnsupported(bm.rank());
}

}  // namespace lexshell
