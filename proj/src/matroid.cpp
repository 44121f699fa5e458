#include "lexshell/matroid.hpp"

#include <algorithm>

namespace lexshell {

std::string hvector_to_string(const HVector& h) {
  std::string s = "(";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h[i]);
  }
  return s + ")";
}

bool equal_padded(const HVector& a, const HVector& b) {
  std::size_t m = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    int av = i < a.size() ? a[i] : 0;
    int bv = i < b.size() ? b[i] : 0;
    if (av != bv) return false;
  }
  return true;
}

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases) {
  if (n < 1 || n > kMaxGroundSet) {
    throw ElementOutOfRange("ground-set size " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxGroundSet));
  }
  if (bases.empty()) throw EmptyBases();
  ElementSet ground = ElementSet::full(n);
  for (ElementSet b : bases) {
    if (!b.subset_of(ground)) {
      throw ElementOutOfRange("basis " + b.to_string() +
                              " not inside {1.." + std::to_string(n) + "}");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  int rank = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != rank) throw MixedCardinality();
  }
  // Exchange axiom, checked for every ordered pair and every departing
  // element.
  for (ElementSet b1 : bases) {
    for (ElementSet b2 : bases) {
      if (b1 == b2) continue;
      for (int x : (b1 - b2).elements()) {
        ElementSet stub = b1.without(x);
        bool ok = false;
        for (int y : (b2 - b1).elements()) {
          if (std::binary_search(bases.begin(), bases.end(), stub.with(y))) {
            ok = true;
            break;
          }
        }
        if (!ok) throw ExchangeViolation(b1, b2, x);
      }
    }
  }
  return Matroid(n, rank, std::move(bases));
}

bool Matroid::is_basis(ElementSet s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::is_independent(ElementSet s) const {
  for (ElementSet b : bases_) {
    if (s.subset_of(b)) return true;
  }
  return false;
}

int Matroid::rank_of(ElementSet a) const {
  ElementSet acc;
  for (int e : a.elements()) {
    if (is_independent(acc.with(e))) acc = acc.with(e);
  }
  return acc.size();
}

Matroid Matroid::restriction(ElementSet a) const {
  int r = rank_of(a);
  std::vector<ElementSet> rbases;
  for_each_subset(a, [&](ElementSet s) {
    if (s.size() == r && is_independent(s)) rbases.push_back(s);
  });
  std::sort(rbases.begin(), rbases.end());
  return Matroid(n_, r, std::move(rbases));
}

ElementSet Matroid::loops() const {
  ElementSet seen;
  for (ElementSet b : bases_) seen = seen | b;
  return ground_set() - seen;
}

ElementSet Matroid::coloops() const {
  ElementSet common = ground_set();
  for (ElementSet b : bases_) common = common & b;
  return common;
}

Matroid Matroid::dual() const {
  std::vector<ElementSet> dbases;
  dbases.reserve(bases_.size());
  ElementSet ground = ground_set();
  for (ElementSet b : bases_) dbases.push_back(ground - b);
  std::sort(dbases.begin(), dbases.end());
  return Matroid(n_, n_ - rank_, std::move(dbases));
}

Matroid Matroid::relabeled(const std::vector<int>& map) const {
  std::vector<ElementSet> mapped;
  mapped.reserve(bases_.size());
  for (ElementSet b : bases_) {
    ElementSet nb;
    for (int e : b.elements()) nb = nb.with(map[e]);
    mapped.push_back(nb);
  }
  std::sort(mapped.begin(), mapped.end());
  return Matroid(n_, rank_, std::move(mapped));
}

HVector Matroid::f_vector() const {
  HVector f(rank_ + 1, 0);
  // Walk down from the bases with a visited bitmap; every independent set
  // is reached exactly once.
  std::vector<std::uint64_t> seen((std::size_t{1} << n_) / 64 + 1, 0);
  std::vector<ElementSet> stack(bases_);
  for (ElementSet b : bases_) {
    seen[b.bits() >> 6] |= std::uint64_t{1} << (b.bits() & 63);
  }
  while (!stack.empty()) {
    ElementSet s = stack.back();
    stack.pop_back();
    ++f[s.size()];
    for (int e : s.elements()) {
      ElementSet t = s.without(e);
      auto& word = seen[t.bits() >> 6];
      std::uint64_t bit = std::uint64_t{1} << (t.bits() & 63);
      if (!(word & bit)) {
        word |= bit;
        stack.push_back(t);
      }
    }
  }
  return f;
}

IndependenceTable::IndependenceTable(const Matroid& m)
    : words_((std::size_t{1} << m.ground_size()) / 64 + 1, 0) {
  std::vector<ElementSet> stack;
  auto mark = [&](ElementSet s) {
    auto& word = words_[s.bits() >> 6];
    std::uint64_t bit = std::uint64_t{1} << (s.bits() & 63);
    if (word & bit) return false;
    word |= bit;
    return true;
  };
  for (ElementSet b : m.bases()) {
    if (mark(b)) stack.push_back(b);
  }
  while (!stack.empty()) {
    ElementSet s = stack.back();
    stack.pop_back();
    for (int e : s.elements()) {
      ElementSet t = s.without(e);
      if (mark(t)) stack.push_back(t);
    }
  }
}

int IndependenceTable::rank_of(ElementSet a) const {
  ElementSet acc;
  for (int e : a.elements()) {
    if ((*this)(acc.with(e))) acc = acc.with(e);
  }
  return acc.size();
}

}  // namespace lexshell
