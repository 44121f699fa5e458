#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lexshell/enumeration.hpp"

namespace lexshell {

/// One named check aggregated over a corpus.  Witnesses carry enough to
/// replay the failing instance by hand (matroid bases, base, order, and
/// the offending set or monomial); only the first few are kept.
struct CheckStats {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> witnesses;

  static constexpr std::size_t kWitnessCap = 10;

  void count(bool ok, const std::string& witness) {
    ++checked;
    if (!ok) {
      ++failed;
      if (witnesses.size() < kWitnessCap) witnesses.push_back(witness);
    }
  }
};

struct VerificationReport {
  std::string corpus_id;
  std::uint64_t matroid_classes = 0;
  std::uint64_t based_signatures = 0;
  std::vector<CheckStats> checks;
  double seconds = 0;

  bool clean() const {
    for (const auto& c : checks) {
      if (c.failed) return false;
    }
    return true;
  }

  /// Human-readable block: one line per check plus the corpus counts.
  std::string summary() const;

  /// Merge check tallies by name, in first-seen order.
  void absorb(const VerificationReport& other);
};

/// Structural identities over every based matroid of the corpus: the
/// h-decomposition over restricted links, equality of the two restriction
/// set computations (full shelling vs link shelling), h_d = 0 exactly for
/// cones, the going-up extension property, and the two basic restriction
/// set facts of lexicographic shellings.
VerificationReport verify_structure(const Corpus& corpus, int jobs = 1);

/// Rank-3 pair inequalities relating h(Gamma_{x,y}) to the two singleton
/// basis counts.  The extension clause for h = (1,0) is vacuous on cones:
/// there the pair monomial may legitimately stay maximal at degree two, so
/// the witness z is only required when h_3 != 0 (see README notes).
VerificationReport verify_lemma_rank3(const Corpus& corpus, int jobs = 1);

/// Rank-4 pair inequalities, on the sub-corpus with at most 7 elements.
VerificationReport verify_lemma_rank4_edges(const Corpus& corpus,
                                            int jobs = 1);

/// Rank-4 triple inequalities, on the sub-corpus with at most 7 elements.
VerificationReport verify_lemma_rank4_faces(const Corpus& corpus,
                                            int jobs = 1);

/// The whole pipeline for one rank: build the corpus, deduplicate based
/// matroids by signature, run the construction on every signature, and
/// check ideal-ness, purity, the four conditions, F = h, and the union
/// decomposition over restrictions.  Never throws on check failures; they
/// land in the report.
VerificationReport run_full_verification(int rank, int jobs = default_jobs());

}  // namespace lexshell
