#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexshell/based.hpp"
#include "lexshell/gamma.hpp"
#include "lexshell/parallel.hpp"

namespace lexshell {

struct TooLarge : MatroidError {
  TooLarge(int n, int r)
      : MatroidError("C(" + std::to_string(n) + "," + std::to_string(r) +
                     ") > 20: indicator space too large for brute force") {}
};

/// Compact byte encoding of a RestrictedHFamily, usable as a hash or map
/// key.  Families are keyed by order positions, so two based matroids get
/// the same bytes exactly when their construction inputs agree.
std::string signature_bytes(const RestrictedHFamily& fam);

/// A deduplicated based matroid together with its family.
struct BasedRecord {
  Matroid matroid;
  ElementSet base;
  std::vector<int> order;
  RestrictedHFamily family;

  BasedMatroid based() const {
    return BasedMatroid::create(matroid, base, order);
  }
};

/// The verification corpus for one rank: all isomorphism classes up to
/// max_n elements, plus one based matroid per distinct restricted-h
/// signature.
struct Corpus {
  int rank = 0;
  int max_n = 0;
  std::vector<Matroid> matroids;            // sorted by (n, canonical form)
  std::vector<std::size_t> classes_by_n;    // classes_by_n[n] = class count
  std::vector<BasedRecord> based;           // one per signature
  // First few signature collisions seen during deduplication, kept so the
  // determinism of the construction across representatives can be spot
  // checked.
  std::vector<std::pair<BasedRecord, BasedRecord>> collision_samples;

  std::size_t classes_on(int n) const {
    return n < static_cast<int>(classes_by_n.size()) ? classes_by_n[n] : 0;
  }
};

/// All rank-r matroids on ground set {1..n} up to isomorphism, found by
/// depth-first search over revlex basis indicators with exchange pruning.
/// Guarded by C(n,r) <= 20; throws TooLarge beyond that.
std::vector<Matroid> brute_force_enumerate(int n, int r, int jobs = 1);

/// Isomorphism classes of rank-r matroids on exactly n elements, brute
/// forced when C(n,r) <= 20 and otherwise built by single-element
/// extensions of the (n-1)-element layer.  No rank restriction; the public
/// corpus builder below narrows to ranks 3 and 4.
std::vector<Matroid> enumerate_layer(int r, int n, int jobs = 1);

/// Corpus of all rank-`rank` classes on rank <= n <= max_n elements.
/// Requires rank in {3,4} and max_n <= 2*rank.
Corpus enumerate_up_to(int rank, int max_n, int jobs = 1);

/// Fills corpus.based: for every matroid, every basis, and every order of
/// the complement, keep the first based matroid carrying each distinct
/// restricted-h signature.
void based_matroids(Corpus& corpus, int jobs = 1);

}  // namespace lexshell
