#include "lexshell/extension.hpp"

#include <algorithm>
#include <unordered_map>

namespace lexshell {

ElementSet closure(const IndependenceTable& ind, int n, ElementSet a) {
  int r = ind.rank_of(a);
  ElementSet cl = a;
  for (int e = 1; e <= n; ++e) {
    if (a.contains(e)) continue;
    if (ind.rank_of(a.with(e)) == r) cl = cl.with(e);
  }
  return cl;
}

std::vector<ElementSet> flats(const Matroid& m) {
  int n = m.ground_size();
  IndependenceTable ind(m);
  std::vector<ElementSet> out;
  std::vector<char> seen(std::size_t{1} << n, 0);
  for_each_subset(m.ground_set(), [&](ElementSet a) {
    ElementSet cl = closure(ind, n, a);
    if (!seen[cl.bits()]) {
      seen[cl.bits()] = 1;
      out.push_back(cl);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Enumerates modular cuts by deciding flats in order of decreasing rank.
// Deciding "in" requires every strict superset to be in (upward closure);
// deciding "out" is barred when two in-flats form a modular pair meeting
// exactly here.  Supersets and intersecting pairs are decided earlier, so
// one pass needs no backtracking beyond the binary choice itself.
struct CutSearch {
  int count = 0;                              // number of flats
  std::vector<ElementSet> flat;               // sorted by decreasing rank
  std::vector<std::vector<int>> supersets;    // strict, as indices
  std::vector<std::vector<std::pair<int, int>>> meets;
  // meets[f] = modular pairs (i, j) of strict supersets with
  // flat[i] & flat[j] == flat[f]
  std::vector<char> state;
  std::vector<std::vector<int>>* cuts;

  void run(int idx) {
    if (idx == count) {
      std::vector<int> in;
      for (int i = 0; i < count; ++i) {
        if (state[i]) in.push_back(i);
      }
      cuts->push_back(std::move(in));
      return;
    }
    bool can_in = true;
    for (int sup : supersets[idx]) {
      if (!state[sup]) {
        can_in = false;
        break;
      }
    }
    bool can_out = true;
    for (auto [i, j] : meets[idx]) {
      if (state[i] && state[j]) {
        can_out = false;
        break;
      }
    }
    if (can_in) {
      state[idx] = 1;
      run(idx + 1);
    }
    if (can_out) {
      state[idx] = 0;
      run(idx + 1);
    }
  }
};

}  // namespace

std::vector<Matroid> extend_by_element(const Matroid& m) {
  int n = m.ground_size();
  if (n + 1 > kMaxGroundSet) {
    throw ElementOutOfRange("cannot extend past " +
                            std::to_string(kMaxGroundSet) + " elements");
  }
  IndependenceTable ind(m);

  CutSearch search;
  search.flat = flats(m);
  std::stable_sort(search.flat.begin(), search.flat.end(),
                   [&](ElementSet a, ElementSet b) {
                     return ind.rank_of(a) > ind.rank_of(b);
                   });
  search.count = static_cast<int>(search.flat.size());
  std::unordered_map<std::uint32_t, int> index;
  for (int i = 0; i < search.count; ++i) index[search.flat[i].bits()] = i;

  search.supersets.resize(search.count);
  search.meets.resize(search.count);
  std::vector<int> rank_of_flat(search.count);
  for (int i = 0; i < search.count; ++i) {
    rank_of_flat[i] = ind.rank_of(search.flat[i]);
  }
  for (int i = 0; i < search.count; ++i) {
    for (int j = 0; j < search.count; ++j) {
      if (i != j && search.flat[i].subset_of(search.flat[j])) {
        search.supersets[i].push_back(j);
      }
    }
  }
  for (int i = 0; i < search.count; ++i) {
    for (int j = i + 1; j < search.count; ++j) {
      ElementSet fi = search.flat[i], fj = search.flat[j];
      if (fi.subset_of(fj) || fj.subset_of(fi)) continue;
      ElementSet meet = fi & fj;
      int join_rank = ind.rank_of(fi | fj);
      if (rank_of_flat[i] + rank_of_flat[j] !=
          join_rank + ind.rank_of(meet)) {
        continue;  // not a modular pair
      }
      auto it = index.find(meet.bits());
      // The meet of two flats is a flat, so it is always present.
      search.meets[it->second].push_back({i, j});
    }
  }

  std::vector<std::vector<int>> cuts;
  search.state.assign(search.count, 0);
  search.cuts = &cuts;
  search.run(0);

  // Independent sets of size rank-1 whose closure decides whether the new
  // element completes them to a basis.
  int r = m.rank();
  std::vector<std::pair<ElementSet, int>> frontiers;  // (set, flat index)
  for_each_subset(m.ground_set(), [&](ElementSet s) {
    if (s.size() == r - 1 && ind(s)) {
      frontiers.push_back({s, index.at(closure(ind, n, s).bits())});
    }
  });

  std::vector<Matroid> out;
  out.reserve(cuts.size());
  int e = n + 1;
  for (const auto& cut : cuts) {
    if (cut.empty()) continue;  // empty cut adds a coloop, raising the rank
    std::vector<char> in_cut(search.count, 0);
    for (int i : cut) in_cut[i] = 1;
    std::vector<ElementSet> bases = m.bases();
    for (auto [s, flat_idx] : frontiers) {
      if (!in_cut[flat_idx]) bases.push_back(s.with(e));
    }
    out.push_back(Matroid::from_bases(n + 1, std::move(bases)));
  }
  return out;
}

}  // namespace lexshell
