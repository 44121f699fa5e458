#pragma once

#include <string>

#include "lexshell/matroid.hpp"

namespace lexshell {

/// Isomorphism invariant: the lexicographically least revlex basis
/// indicator over all relabelings of the ground set.  For fixed n and rank,
/// two matroids are isomorphic iff their canonical forms are equal.
///
/// The search assigns new labels 1..n one at a time.  Once labels 1..k are
/// placed, the first C(k, r) indicator bits are fixed, so branches that are
/// already worse than the incumbent are cut without completing the
/// permutation.
std::string canonical_form(const Matroid& m);

}  // namespace lexshell
