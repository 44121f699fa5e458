#include "lexshell/enumeration.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "lexshell/canonical.hpp"
#include "lexshell/extension.hpp"
#include "lexshell/subsets.hpp"

namespace lexshell {

std::string signature_bytes(const RestrictedHFamily& fam) {
  std::string out;
  out.reserve(fam.entries.size() * 8);
  for (const auto& [key, h] : fam.entries) {
    out.push_back(static_cast<char>(key.bits() & 0xFF));
    out.push_back(static_cast<char>((key.bits() >> 8) & 0xFF));
    out.push_back(static_cast<char>(h.size()));
    for (int v : h) out.push_back(static_cast<char>(v));
  }
  return out;
}

namespace {

// Exchange data over the revlex indicator space: for the ordered subset
// pair (i, j) and each departing element x of S_i - S_j, a bitmask of the
// indices realizing (S_i - x) + y with y in S_j - S_i.
struct ExchangeMasks {
  int count = 0;
  std::vector<std::vector<std::uint32_t>> per_pair;  // [i*count+j]

  ExchangeMasks(int n, int r) {
    const auto& subs = subsets_revlex(n, r);
    count = static_cast<int>(subs.size());
    std::unordered_map<std::uint32_t, int> index;
    for (int i = 0; i < count; ++i) index[subs[i].bits()] = i;
    per_pair.resize(static_cast<std::size_t>(count) * count);
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        if (i == j) continue;
        auto& masks = per_pair[static_cast<std::size_t>(i) * count + j];
        for (int x : (subs[i] - subs[j]).elements()) {
          std::uint32_t mask = 0;
          for (int y : (subs[j] - subs[i]).elements()) {
            mask |= std::uint32_t{1}
                    << index.at(subs[i].without(x).with(y).bits());
          }
          masks.push_back(mask);
        }
      }
    }
  }
};

// Depth-first search over inclusion of the k-th subset.  A branch dies as
// soon as some chosen pair has a departing element none of whose exchange
// partners can still be chosen.
struct IndicatorSearch {
  const ExchangeMasks& ex;
  std::uint32_t full;
  std::vector<std::uint32_t> chosen_sets;  // indices, for the leaf check
  std::vector<std::uint32_t>* leaves;

  bool feasible_include(int k, std::uint32_t chosen,
                        std::uint32_t future) const {
    std::uint32_t alive = chosen | (std::uint32_t{1} << k) | future;
    for (std::uint32_t c = chosen; c; c &= c - 1) {
      int i = std::countr_zero(c);
      for (std::uint32_t m :
           ex.per_pair[static_cast<std::size_t>(i) * ex.count + k]) {
        if (!(m & alive)) return false;
      }
      for (std::uint32_t m :
           ex.per_pair[static_cast<std::size_t>(k) * ex.count + i]) {
        if (!(m & alive)) return false;
      }
    }
    return true;
  }

  bool exchange_holds(std::uint32_t chosen) const {
    for (std::uint32_t a = chosen; a; a &= a - 1) {
      int i = std::countr_zero(a);
      for (std::uint32_t b = chosen; b; b &= b - 1) {
        int j = std::countr_zero(b);
        if (i == j) continue;
        for (std::uint32_t m :
             ex.per_pair[static_cast<std::size_t>(i) * ex.count + j]) {
          if (!(m & chosen)) return false;
        }
      }
    }
    return true;
  }

  void run(int k, std::uint32_t chosen) {
    if (k == ex.count) {
      if (chosen && exchange_holds(chosen)) leaves->push_back(chosen);
      return;
    }
    std::uint32_t future = full & ~((std::uint32_t{2} << k) - 1);
    if (feasible_include(k, chosen, future)) {
      run(k + 1, chosen | (std::uint32_t{1} << k));
    }
    run(k + 1, chosen);
  }
};

std::vector<Matroid> dedup_by_canonical(
    std::vector<std::vector<Matroid>> batches) {
  std::unordered_map<std::string, Matroid> seen;
  std::vector<std::string> order;
  for (auto& batch : batches) {
    for (auto& m : batch) {
      std::string key = canonical_form(m);
      if (seen.emplace(key, std::move(m)).second) {
        order.push_back(std::move(key));
      }
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<Matroid> out;
  out.reserve(order.size());
  for (const std::string& key : order) out.push_back(seen.at(key));
  return out;
}

}  // namespace

std::vector<Matroid> brute_force_enumerate(int n, int r, int jobs) {
  if (binomial(n, r) > 20) throw TooLarge(n, r);
  const auto& subs = subsets_revlex(n, r);
  int count = static_cast<int>(subs.size());
  ExchangeMasks ex(n, r);
  std::uint32_t full = count == 32 ? ~std::uint32_t{0}
                                   : (std::uint32_t{1} << count) - 1;

  // Fan out over the inclusion pattern of the first few subsets; each task
  // replays its prefix with the same pruning, then searches the rest.
  int prefix_len = std::min(count, jobs > 1 ? 6 : 0);
  std::size_t tasks = std::size_t{1} << prefix_len;
  std::vector<std::vector<std::uint32_t>> leaves(tasks);
  parallel_for(tasks, jobs, [&](std::size_t prefix) {
    IndicatorSearch search{ex, full, {}, &leaves[prefix]};
    std::uint32_t chosen = 0;
    for (int k = 0; k < prefix_len; ++k) {
      std::uint32_t future = full & ~((std::uint32_t{2} << k) - 1);
      if ((prefix >> k) & 1) {
        if (!search.feasible_include(k, chosen, future)) return;
        chosen |= std::uint32_t{1} << k;
      }
    }
    search.run(prefix_len, chosen);
  });

  std::vector<std::vector<Matroid>> batches(tasks);
  parallel_for(tasks, jobs, [&](std::size_t t) {
    for (std::uint32_t mask : leaves[t]) {
      std::vector<ElementSet> bases;
      for (std::uint32_t m = mask; m; m &= m - 1) {
        bases.push_back(subs[std::countr_zero(m)]);
      }
      batches[t].push_back(Matroid::from_bases(n, std::move(bases)));
    }
  });
  return dedup_by_canonical(std::move(batches));
}

std::vector<Matroid> enumerate_layer(int r, int n, int jobs) {
  if (n < r || r < 0) return {};
  if (binomial(n, r) <= 20) return brute_force_enumerate(n, r, jobs);
  std::vector<Matroid> prev = enumerate_layer(r, n - 1, jobs);
  std::vector<std::vector<Matroid>> batches(prev.size());
  parallel_for(prev.size(), jobs, [&](std::size_t i) {
    batches[i] = extend_by_element(prev[i]);
  });
  return dedup_by_canonical(std::move(batches));
}

Corpus enumerate_up_to(int rank, int max_n, int jobs) {
  if (rank != 3 && rank != 4) throw RankUnsupported(rank);
  if (max_n > 2 * rank || max_n < rank) {
    throw MatroidError("max_n must lie between the rank and twice the rank");
  }
  Corpus corpus;
  corpus.rank = rank;
  corpus.max_n = max_n;
  corpus.classes_by_n.assign(max_n + 1, 0);
  for (int n = rank; n <= max_n; ++n) {
    std::vector<Matroid> layer = enumerate_layer(rank, n, jobs);
    corpus.classes_by_n[n] = layer.size();
    for (auto& m : layer) corpus.matroids.push_back(std::move(m));
  }
  return corpus;
}

namespace {

constexpr std::size_t kCollisionSampleCap = 200;

struct BasedCandidate {
  std::string bytes;
  ElementSet base;
  std::vector<int> order;
  RestrictedHFamily family;
};

// Every (basis, order) pair of one matroid, deduplicated within the
// matroid, in deterministic order.
std::vector<BasedCandidate> candidates_for(const Matroid& m) {
  IndependenceTable ind(m);
  int d = m.rank();
  std::vector<BasedCandidate> out;
  std::map<std::string, bool> seen_here;
  for (ElementSet base : m.bases()) {
    // Family keyed by raw labels, fixed for the basis; orders only permute
    // the key sets.
    std::vector<std::pair<ElementSet, HVector>> label_family;
    ElementSet rest = m.ground_set() - base;
    for_each_subset(rest, [&](ElementSet i_set) {
      if (ind(i_set)) {
        label_family.push_back({i_set, gamma_h(ind, base, d, i_set)});
      }
    });

    std::vector<int> order = rest.elements();
    std::sort(order.begin(), order.end());
    do {
      std::vector<int> pos(m.ground_size() + 1, 0);
      for (std::size_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = static_cast<int>(i) + 1;
      }
      RestrictedHFamily fam;
      for (const auto& [labels, h] : label_family) {
        ElementSet key;
        for (int e : labels.elements()) key = key.with(pos[e]);
        fam.entries[key] = h;
      }
      std::string bytes = signature_bytes(fam);
      if (seen_here.emplace(bytes, true).second) {
        out.push_back({std::move(bytes), base, order, std::move(fam)});
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

}  // namespace

void based_matroids(Corpus& corpus, int jobs) {
  std::vector<std::vector<BasedCandidate>> per_matroid(
      corpus.matroids.size());
  parallel_for(corpus.matroids.size(), jobs, [&](std::size_t i) {
    per_matroid[i] = candidates_for(corpus.matroids[i]);
  });

  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < per_matroid.size(); ++i) {
    for (auto& cand : per_matroid[i]) {
      auto [it, fresh] = index.emplace(cand.bytes, corpus.based.size());
      if (fresh) {
        corpus.based.push_back({corpus.matroids[i], cand.base,
                                std::move(cand.order),
                                std::move(cand.family)});
      } else if (corpus.collision_samples.size() < kCollisionSampleCap) {
        corpus.collision_samples.push_back(
            {corpus.based[it->second],
             BasedRecord{corpus.matroids[i], cand.base, std::move(cand.order),
                         std::move(cand.family)}});
      }
    }
  }
}

}  // namespace lexshell
