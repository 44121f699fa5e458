#include "lexshell/verifier.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <unordered_set>

#include "lexshell/conditions.hpp"
#include "lexshell/constructor.hpp"
#include "lexshell/revlex_db.hpp"
#include "lexshell/shelling.hpp"

namespace lexshell {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const BasedRecord& rec) {
  RevlexRecord rl = serialize_revlex(rec.matroid);
  std::string s = std::to_string(rl.n) + " " + std::to_string(rl.r) + " " +
                  rl.indicator + " base=" + rec.base.to_string() + " order=(";
  for (std::size_t i = 0; i < rec.order.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(rec.order[i]);
  }
  return s + ")";
}

int family_sum(const RestrictedHFamily& fam, ElementSet key) {
  int total = 0;
  auto it = fam.entries.find(key);
  if (it != fam.entries.end()) {
    for (int v : it->second) total += v;
  }
  return total;
}

// Deterministic parallel reduction: results land in per-record slots and
// are folded into the named tallies in record order.
struct RecordOutcome {
  // status: -1 not applicable, 0 failed, 1 passed
  std::vector<std::array<int, 2>> entries;  // (check id, status)
  std::vector<std::string> witnesses;       // parallel, empty when passing

  void add(int check, bool ok, const std::string& witness) {
    entries.push_back({check, ok ? 1 : 0});
    witnesses.push_back(ok ? std::string() : witness);
  }
  void skip(int check) {
    entries.push_back({check, -1});
    witnesses.emplace_back();
  }
};

void fold(std::vector<CheckStats>& checks,
          const std::vector<RecordOutcome>& outcomes) {
  for (const auto& outcome : outcomes) {
    for (std::size_t k = 0; k < outcome.entries.size(); ++k) {
      auto [check, status] = outcome.entries[k];
      if (status < 0) continue;
      checks[check].count(status == 1, outcome.witnesses[k]);
    }
  }
}

}  // namespace

std::string VerificationReport::summary() const {
  std::string s = "corpus: " + corpus_id + "\n";
  s += "classes: " + std::to_string(matroid_classes) + "\n";
  s += "signatures: " + std::to_string(based_signatures) + "\n";
  for (const auto& c : checks) {
    std::string line = c.name;
    line.resize(std::max<std::size_t>(line.size(), 44), ' ');
    line += c.failed ? "FAIL" : "pass";
    line += "  (" + std::to_string(c.checked) + " checked, " +
            std::to_string(c.failed) + " failed)";
    s += line + "\n";
    for (const auto& w : c.witnesses) s += "    witness: " + w + "\n";
  }
  s += "elapsed: " + std::to_string(seconds) + "s\n";
  return s;
}

void VerificationReport::absorb(const VerificationReport& other) {
  for (const auto& c : other.checks) {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const CheckStats& mine) {
                             return mine.name == c.name;
                           });
    if (it == checks.end()) {
      checks.push_back(c);
    } else {
      it->checked += c.checked;
      it->failed += c.failed;
      for (const auto& w : c.witnesses) {
        if (it->witnesses.size() < CheckStats::kWitnessCap) {
          it->witnesses.push_back(w);
        }
      }
    }
  }
  seconds += other.seconds;
}

VerificationReport verify_structure(const Corpus& corpus, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.corpus_id =
      "rank-" + std::to_string(corpus.rank) + " structural identities";
  rep.matroid_classes = corpus.matroids.size();
  rep.based_signatures = corpus.based.size();

  enum {
    kCone,
    kDecomposition,
    kLinkSets,
    kGoingUp,
    kOnto,
    kTail,
    kChecks
  };
  rep.checks.resize(kChecks);
  rep.checks[kCone].name = "top-h-entry-zero-iff-cone";
  rep.checks[kDecomposition].name = "h-decomposes-over-restricted-links";
  rep.checks[kLinkSets].name = "restriction-sets-match-link-shelling";
  rep.checks[kGoingUp].name = "going-up-extension";
  rep.checks[kOnto].name = "independent-sets-are-restriction-sets";
  rep.checks[kTail].name = "basis-tail-inside-restriction-set";

  for (const Matroid& m : corpus.matroids) {
    HVector h = h_vector(m);
    bool ok = (h[m.rank()] == 0) == m.is_cone();
    RevlexRecord rl = serialize_revlex(m);
    rep.checks[kCone].count(
        ok, std::to_string(rl.n) + " " + std::to_string(rl.r) + " " +
                rl.indicator);
  }

  std::vector<RecordOutcome> outcomes(corpus.based.size());
  parallel_for(corpus.based.size(), jobs, [&](std::size_t i) {
    const BasedRecord& rec = corpus.based[i];
    RecordOutcome& out = outcomes[i];
    BasedMatroid bm = rec.based();
    int d = bm.rank();

    out.add(kDecomposition, check_decomposition(bm), describe(rec));

    // One full shelling serves every independent set of this record.
    ShellingRecord full = lex_shelling(bm);
    std::unordered_set<std::uint32_t> rsets;
    for (ElementSet r : full.restriction_sets) rsets.insert(r.bits());

    bool tails_ok = true;
    for (std::size_t k = 0; k < full.ordered_bases.size(); ++k) {
      if (!(full.ordered_bases[k] - bm.base())
               .subset_of(full.restriction_sets[k])) {
        tails_ok = false;
        break;
      }
    }
    out.add(kTail, tails_ok, describe(rec));

    bool onto_ok = true;
    bool links_ok = true;
    std::string bad_i;
    for (const auto& [positions, hvec] : rec.family.entries) {
      (void)hvec;
      ElementSet i_set = bm.labels_of(positions);
      if (!rsets.count(i_set.bits())) {
        onto_ok = false;
        bad_i = i_set.to_string();
      }
      std::vector<ElementSet> u;
      for (std::size_t k = 0; k < full.ordered_bases.size(); ++k) {
        if ((full.ordered_bases[k] - bm.base()) == i_set) {
          u.push_back(full.restriction_sets[k] - i_set);
        }
      }
      ShellingRecord link = lex_shelling_natural(gamma(bm, i_set));
      std::vector<ElementSet> v = link.restriction_sets;
      std::sort(u.begin(), u.end());
      std::sort(v.begin(), v.end());
      if (u != v) {
        links_ok = false;
        bad_i = i_set.to_string();
      }
    }
    out.add(kOnto, onto_ok, describe(rec) + " I=" + bad_i);
    out.add(kLinkSets, links_ok, describe(rec) + " I=" + bad_i);

    if (h_vector(bm.matroid())[d] != 0) {
      out.add(kGoingUp, check_going_up(bm), describe(rec));
    } else {
      out.skip(kGoingUp);
    }
  });
  fold(rep.checks, outcomes);
  rep.seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_lemma_rank3(const Corpus& corpus, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.corpus_id = "rank-3 pair inequalities";
  rep.matroid_classes = corpus.matroids.size();
  rep.based_signatures = corpus.based.size();

  enum { kExtension, kH11, kH12, kChecks };
  rep.checks.resize(kChecks);
  rep.checks[kExtension].name = "pair-h-(1,0)-extends-when-not-cone";
  rep.checks[kH11].name = "pair-h-(1,1)-basis-count-cases";
  rep.checks[kH12].name = "pair-h-(1,2)-basis-counts-at-least-2";

  std::vector<RecordOutcome> outcomes(corpus.based.size());
  parallel_for(corpus.based.size(), jobs, [&](std::size_t i) {
    const BasedRecord& rec = corpus.based[i];
    RecordOutcome& out = outcomes[i];
    bool cone = h_vector(rec.matroid)[rec.matroid.rank()] == 0;
    for (const auto& [key, h] : rec.family.entries) {
      if (key.size() != 2) continue;
      auto pos = key.elements();
      int bx = family_sum(rec.family, ElementSet::single(pos[0]));
      int by = family_sum(rec.family, ElementSet::single(pos[1]));
      std::string witness = describe(rec) + " I positions " + key.to_string();
      if (h == HVector{1, 0}) {
        // The extension clause only binds off cones: on a cone the pair
        // monomial xy is allowed to stay maximal at degree two.
        if (cone) continue;
        bool found = false;
        for (const auto& [other, oh] : rec.family.entries) {
          (void)oh;
          if (other.size() == 3 && key.subset_of(other)) {
            found = true;
            break;
          }
        }
        out.add(kExtension, found, witness);
      } else if (h == HVector{1, 1}) {
        bool ok = (bx == 1 && by >= 2) || (by == 1 && bx >= 2) ||
                  (bx == 2 && by == 3) || (bx == 3 && by >= 2);
        out.add(kH11, ok, witness);
      } else if (h == HVector{1, 2}) {
        out.add(kH12, bx >= 2 && by >= 2, witness);
      }
    }
  });
  fold(rep.checks, outcomes);
  rep.seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_lemma_rank4_edges(const Corpus& corpus, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.corpus_id = "rank-4 pair inequalities (n <= 7)";

  enum { k110, k111, k120, k121, k122, k123, kChecks };
  rep.checks.resize(kChecks);
  rep.checks[k110].name = "edge-h-(1,1,0)";
  rep.checks[k111].name = "edge-h-(1,1,1)";
  rep.checks[k120].name = "edge-h-(1,2,0)";
  rep.checks[k121].name = "edge-h-(1,2,1)";
  rep.checks[k122].name = "edge-h-(1,2,2)";
  rep.checks[k123].name = "edge-h-(1,2,3)";

  std::vector<RecordOutcome> outcomes(corpus.based.size());
  parallel_for(corpus.based.size(), jobs, [&](std::size_t i) {
    const BasedRecord& rec = corpus.based[i];
    if (rec.matroid.ground_size() > 7) return;
    RecordOutcome& out = outcomes[i];
    for (const auto& [key, h] : rec.family.entries) {
      if (key.size() != 2) continue;
      auto pos = key.elements();
      int bx = family_sum(rec.family, ElementSet::single(pos[0]));
      int by = family_sum(rec.family, ElementSet::single(pos[1]));
      int lo = std::min(bx, by), hi = std::max(bx, by);
      std::string witness = describe(rec) + " I positions " + key.to_string();
      if (h == HVector{1, 1, 0}) {
        out.add(k110, bx != 1 || by >= 2, witness);
      } else if (h == HVector{1, 1, 1}) {
        out.add(k111, (lo == 1 && hi >= 3) || lo >= 3, witness);
      } else if (h == HVector{1, 2, 0}) {
        out.add(k120, lo >= 2, witness);
      } else if (h == HVector{1, 2, 1}) {
        bool ok = (bx == 2 || bx == 4) && (by == 2 || by == 4);
        out.add(k121, ok, witness);
      } else if (h == HVector{1, 2, 2}) {
        out.add(k122, lo >= 2 && hi >= 3, witness);
      } else if (h == HVector{1, 2, 3}) {
        out.add(k123, lo >= 3, witness);
      }
    }
  });
  fold(rep.checks, outcomes);
  for (const auto& rec : corpus.based) {
    if (rec.matroid.ground_size() <= 7) ++rep.based_signatures;
  }
  rep.matroid_classes = corpus.matroids.size();
  rep.seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_lemma_rank4_faces(const Corpus& corpus, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.corpus_id = "rank-4 triple inequalities (n <= 7)";

  enum { k11, k12, k13, kChecks };
  rep.checks.resize(kChecks);
  rep.checks[k11].name = "face-h-(1,1)-max-count-at-least-2";
  rep.checks[k12].name = "face-h-(1,2)-at-most-one-count-1";
  rep.checks[k13].name = "face-h-(1,3)-min-count-at-least-2";

  std::vector<RecordOutcome> outcomes(corpus.based.size());
  parallel_for(corpus.based.size(), jobs, [&](std::size_t i) {
    const BasedRecord& rec = corpus.based[i];
    if (rec.matroid.ground_size() > 7) return;
    RecordOutcome& out = outcomes[i];
    for (const auto& [key, h] : rec.family.entries) {
      if (key.size() != 3) continue;
      auto pos = key.elements();
      int b1 = family_sum(rec.family, ElementSet::single(pos[0]));
      int b2 = family_sum(rec.family, ElementSet::single(pos[1]));
      int b3 = family_sum(rec.family, ElementSet::single(pos[2]));
      int ones = (b1 == 1) + (b2 == 1) + (b3 == 1);
      std::string witness = describe(rec) + " I positions " + key.to_string();
      if (h == HVector{1, 1}) {
        out.add(k11, std::max({b1, b2, b3}) >= 2, witness);
      } else if (h == HVector{1, 2}) {
        out.add(k12, ones <= 1, witness);
      } else if (h == HVector{1, 3}) {
        out.add(k13, std::min({b1, b2, b3}) >= 2, witness);
      }
    }
  });
  fold(rep.checks, outcomes);
  for (const auto& rec : corpus.based) {
    if (rec.matroid.ground_size() <= 7) ++rep.based_signatures;
  }
  rep.matroid_classes = corpus.matroids.size();
  rep.seconds = seconds_since(start);
  return rep;
}

VerificationReport run_full_verification(int rank, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.corpus_id = "rank-" + std::to_string(rank) + " full verification";

  enum {
    kIdeal,
    kPure,
    kCond1,
    kCond2,
    kCond3,
    kCond4,
    kFH,
    kUnion,
    kCollision,
    kChecks
  };
  rep.checks.resize(kChecks);
  rep.checks[kIdeal].name = "output-is-order-ideal";
  rep.checks[kPure].name = "output-is-pure";
  rep.checks[kCond1].name = "condition-1-variables";
  rep.checks[kCond2].name = "condition-2-supports";
  rep.checks[kCond3].name = "condition-3-degree-counts";
  rep.checks[kCond4].name = "condition-4-restrictions";
  rep.checks[kFH].name = "F-vector-equals-h-vector";
  rep.checks[kUnion].name = "union-over-restrictions";
  rep.checks[kCollision].name = "equal-signatures-equal-outputs";

  if (rank != 3 && rank != 4) {
    CheckStats unsupported;
    unsupported.name = "rank-supported";
    unsupported.count(false, "RankUnsupported: rank " + std::to_string(rank));
    rep.checks.push_back(std::move(unsupported));
    rep.seconds = seconds_since(start);
    return rep;
  }

  Corpus corpus = enumerate_up_to(rank, 2 * rank, jobs);
  based_matroids(corpus, jobs);
  rep.matroid_classes = corpus.matroids.size();
  rep.based_signatures = corpus.based.size();

  std::vector<RecordOutcome> outcomes(corpus.based.size());
  parallel_for(corpus.based.size(), jobs, [&](std::size_t i) {
    const BasedRecord& rec = corpus.based[i];
    RecordOutcome& out = outcomes[i];
    BasedMatroid bm = rec.based();
    OrderIdeal ideal = construct(bm);
    std::string prefix = describe(rec);

    auto bad = find_ideal_violation(ideal);
    out.add(kIdeal, !bad,
            prefix + (bad ? " monomial " + bad->to_string() : ""));
    if (!bad) {
      auto impure = find_purity_violation(ideal);
      out.add(kPure, !impure,
              prefix + (impure ? " monomial " + impure->to_string() : ""));
    } else {
      out.skip(kPure);
    }

    ConditionReport conditions = check_conditions(bm, ideal, rec.family);
    out.add(kCond1, conditions.variables.pass,
            prefix + " " + conditions.variables.witness);
    out.add(kCond2, conditions.supports.pass,
            prefix + " " + conditions.supports.witness);
    out.add(kCond3, conditions.counts.pass,
            prefix + " " + conditions.counts.witness);
    out.add(kCond4, conditions.restrictions.pass,
            prefix + " " + conditions.restrictions.witness);
    out.add(kFH, conditions.fvector.pass,
            prefix + " " + conditions.fvector.witness);

    // Union decomposition: the ideal is exactly the union of the ideals of
    // the restrictions to base + I.
    std::vector<Monomial> pieces;
    for (const auto& [positions, hvec] : rec.family.entries) {
      (void)hvec;
      ElementSet i_set = bm.labels_of(positions);
      Matroid restricted = bm.matroid().restriction(bm.base() | i_set);
      BasedMatroid sub =
          BasedMatroid::create(restricted, bm.base(), bm.order());
      for (Monomial m : construct(sub)) pieces.push_back(m);
    }
    out.add(kUnion, OrderIdeal(std::move(pieces)) == ideal, prefix);
  });
  fold(rep.checks, outcomes);

  for (const auto& [first, second] : corpus.collision_samples) {
    BasedMatroid bm1 = first.based();
    BasedMatroid bm2 = second.based();
    std::vector<int> pos1(bm1.matroid().ground_size() + 1, 0);
    std::vector<int> pos2(bm2.matroid().ground_size() + 1, 0);
    for (std::size_t k = 0; k < first.order.size(); ++k) {
      pos1[first.order[k]] = static_cast<int>(k) + 1;
    }
    for (std::size_t k = 0; k < second.order.size(); ++k) {
      pos2[second.order[k]] = static_cast<int>(k) + 1;
    }
    std::vector<Monomial> a, b;
    for (Monomial m : construct(bm1)) a.push_back(m.relabeled(pos1));
    for (Monomial m : construct(bm2)) b.push_back(m.relabeled(pos2));
    rep.checks[kCollision].count(
        OrderIdeal(std::move(a)) == OrderIdeal(std::move(b)),
        describe(first) + " vs " + describe(second));
  }

  rep.seconds = seconds_since(start);
  return rep;
}

}  // namespace lexshell
