#pragma once

#include <vector>

#include "lexshell/matroid.hpp"

namespace lexshell {

/// cl(a) = {e : adding e does not raise the rank of a}.
ElementSet closure(const IndependenceTable& ind, int n, ElementSet a);

/// Every flat of m (closed sets of all ranks, the ground set included),
/// sorted ascending by bit encoding.
std::vector<ElementSet> flats(const Matroid& m);

/// All rank-preserving single-element extensions of m by the new element
/// n+1, one per nonempty modular cut of the lattice of flats.  The loop
/// extension (full cut) and the free extension (cut = {E}) always appear.
/// Outputs are validated.
std::vector<Matroid> extend_by_element(const Matroid& m);

}  // namespace lexshell
