#pragma once

#include <map>

#include "lexshell/based.hpp"
#include "lexshell/shelling.hpp"

namespace lexshell {

struct DependentInput : MatroidError {
  explicit DependentInput(ElementSet i_set)
      : MatroidError(i_set.to_string() +
                     " must be independent and disjoint from the base") {}
};

struct GoingUpInapplicable : MatroidError {
  GoingUpInapplicable()
      : MatroidError("h_d = 0: the matroid is a cone") {}
};

/// h(Gamma_I) for every independent I disjoint from the base, keyed by the
/// positions of I's elements under the based order.  This map is the
/// signature that identifies a based matroid for deduplication: it
/// determines the constructed order ideal up to position relabeling.
struct RestrictedHFamily {
  std::map<ElementSet, HVector> entries;

  bool operator==(const RestrictedHFamily&) const = default;
};

/// The matroid on bm's base whose independent sets are the G with
/// G + i_set independent.  Labels are kept (elements outside the base are
/// loops of the result).  Requires i_set independent and disjoint from the
/// base; throws DependentInput otherwise.
Matroid gamma(const BasedMatroid& bm, ElementSet i_set);

/// h(Gamma_I) straight from independence counts, without materializing the
/// matroid.  `base` and `rank` describe the ambient based matroid.
HVector gamma_h(const IndependenceTable& ind, ElementSet base, int rank,
                ElementSet i_set);

RestrictedHFamily restricted_h_family(const BasedMatroid& bm);

/// Number of bases of Gamma_I; equals the sum of the entries of its
/// h-vector.
int basis_count(const BasedMatroid& bm, ElementSet i_set);

/// Restriction sets of the full shelling at the bases through I, minus I,
/// compared against the restriction sets of Gamma_I's own shelling.
bool check_U_equals_V(const BasedMatroid& bm, ElementSet i_set);

/// h(Delta, x) = sum over independent I disjoint from the base of
/// x^|I| h(Gamma_I, x).  The left side comes from the shelling tally, the
/// right side from the f-to-h transform, so the two h-vector routes cross
/// check each other here.
bool check_decomposition(const BasedMatroid& bm);

/// For every independent I disjoint from the base with the top entry of
/// h(Gamma_I) zero, some z outside base and I keeps I + {z} independent.
/// Only applies when h_d != 0; throws GoingUpInapplicable otherwise.
bool check_going_up(const BasedMatroid& bm);

}  // namespace lexshell
