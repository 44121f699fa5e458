#pragma once

#include <vector>

#include "lexshell/based.hpp"

namespace lexshell {

struct NegativeEntry : MatroidError {
  explicit NegativeEntry(int index, int value)
      : MatroidError("h_" + std::to_string(index) + " = " +
                     std::to_string(value) +
                     " < 0; input is not the f-vector of a matroid") {}
};

/// Bases in shelling order together with their restriction sets.
/// restriction_sets[i] is the unique minimal subset of ordered_bases[i]
/// contained in no earlier basis; it is empty for i = 0.
struct ShellingRecord {
  std::vector<ElementSet> ordered_bases;
  std::vector<ElementSet> restriction_sets;
};

/// Lexicographic shelling of bm's matroid under the vertex order "base
/// elements ascending, then bm.order".  The distinguished base comes first.
///
/// R(B) is computed from the exchange characterization: v belongs to R(B)
/// iff B - {v} extends to a lexicographically earlier basis.
ShellingRecord lex_shelling(const BasedMatroid& bm);

/// Lexicographic shelling under plain ascending label order.
ShellingRecord lex_shelling_natural(const Matroid& m);

/// h_i = number of restriction sets of cardinality i, padded to length d+1.
HVector h_vector_from_shelling(const ShellingRecord& sr, int d);

/// Inverse binomial transform: h_k = sum_j (-1)^(k-j) C(d-j, k-j) f_j.
/// Throws NegativeEntry if some coefficient comes out negative.
HVector h_vector_from_f(const HVector& f);

/// h-vector of a matroid via its f-vector.
HVector h_vector(const Matroid& m);

}  // namespace lexshell
