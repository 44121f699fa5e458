#pragma once

#include "lexshell/based.hpp"
#include "lexshell/order_ideal.hpp"

namespace lexshell {

struct RankUnsupported : MatroidError {
  explicit RankUnsupported(int rank)
      : MatroidError("no construction for rank " + std::to_string(rank) +
                     "; only ranks 3 and 4 are supported") {}
};

/// Result of the pre-pass that every construction starts with: the based
/// matroid relabeled so the base is {1..d} and the remaining elements are
/// {d+1..n}, sorted by ascending singleton basis count with ties kept in
/// the original based order.  back_map[new_label] = original label.
struct ReorderedMatroid {
  BasedMatroid bm;
  std::vector<int> back_map;
};

/// The reordering pre-pass.  Loops sort first (their basis count is zero);
/// they never reach any later step.
ReorderedMatroid step0(const BasedMatroid& bm);

/// Pure order ideal attached to a rank-3 based matroid.  Monomials use the
/// original element labels as variable indices.
OrderIdeal construct_rank3(const BasedMatroid& bm);

/// Pure order ideal attached to a rank-4 based matroid.
OrderIdeal construct_rank4(const BasedMatroid& bm);

/// Rank dispatch; throws RankUnsupported outside ranks 3 and 4.
OrderIdeal construct(const BasedMatroid& bm);

}  // namespace lexshell
