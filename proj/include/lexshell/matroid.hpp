#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lexshell/element_set.hpp"

namespace lexshell {

struct MatroidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyBases : MatroidError {
  EmptyBases() : MatroidError("matroid needs at least one basis") {}
};

struct MixedCardinality : MatroidError {
  MixedCardinality() : MatroidError("bases of unequal cardinality") {}
};

struct ElementOutOfRange : MatroidError {
  explicit ElementOutOfRange(const std::string& what) : MatroidError(what) {}
};

/// Exchange axiom failure, with the concrete triple that has no valid swap:
/// no y in b2 - b1 makes (b1 - {x}) + {y} a basis.
struct ExchangeViolation : MatroidError {
  ExchangeViolation(ElementSet b1_, ElementSet b2_, int x_)
      : MatroidError("exchange axiom fails for " + b1_.to_string() + ", " +
                     b2_.to_string() + ", element " + std::to_string(x_)),
        b1(b1_),
        b2(b2_),
        x(x_) {}
  ElementSet b1, b2;
  int x;
};

/// HVector doubles as f-vector and F-vector storage: a plain sequence of
/// nonnegative counts indexed by degree.
using HVector = std::vector<int>;

std::string hvector_to_string(const HVector& h);

/// True iff a and b agree after zero-padding the shorter one.  F-vectors of
/// cones are shorter than the h-vector they must match.
bool equal_padded(const HVector& a, const HVector& b);

/// A matroid on ground set {1..n} given by its set of bases.  Immutable
/// after construction; all member functions are const and safe to call
/// concurrently.
class Matroid {
 public:
  /// Validates the basis axioms (nonempty, equicardinal, exchange) and
  /// returns the matroid with its basis list deduplicated and sorted in the
  /// canonical order (ascending bit encoding).
  static Matroid from_bases(int n, std::vector<ElementSet> bases);

  int ground_size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground_set() const { return ElementSet::full(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_basis(ElementSet s) const;

  /// True iff s is contained in some basis.
  bool is_independent(ElementSet s) const;

  /// Size of the largest independent subset of a (matroid greedy).
  int rank_of(ElementSet a) const;

  /// Matroid of the independent sets contained in a.  Element labels and
  /// the ground-set width n are kept; elements outside a simply appear in
  /// no basis (they become loops of the restriction).
  Matroid restriction(ElementSet a) const;

  ElementSet loops() const;    // elements in no basis
  ElementSet coloops() const;  // elements in every basis
  bool is_cone() const { return !coloops().empty(); }

  /// Matroid whose bases are the complements of this one's bases.
  Matroid dual() const;

  /// Matroid with every element e renamed to map[e]; map must be a
  /// permutation of {1..n}.  The axioms are label-invariant, so no
  /// revalidation happens.
  Matroid relabeled(const std::vector<int>& map) const;

  /// (f_0, ..., f_d) with f_j the number of independent sets of size j.
  HVector f_vector() const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid(int n, int rank, std::vector<ElementSet> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_ = 0;
  int rank_ = 0;
  std::vector<ElementSet> bases_;  // sorted ascending by bits, unique
};

/// O(1) independence lookups backed by a 2^n bitmap.  Build once per
/// matroid before entering a hot loop.
class IndependenceTable {
 public:
  explicit IndependenceTable(const Matroid& m);

  bool operator()(ElementSet s) const {
    return (words_[s.bits() >> 6] >> (s.bits() & 63)) & 1u;
  }

  int rank_of(ElementSet a) const;

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace lexshell
