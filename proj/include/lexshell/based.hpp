#pragma once

#include <vector>

#include "lexshell/matroid.hpp"

namespace lexshell {

struct BasedMatroidError : MatroidError {
  using MatroidError::MatroidError;
};

/// A matroid with a distinguished basis and a total order on the remaining
/// elements.  The order is the sequence `order`; its i-th entry is the
/// element at position i+1.
class BasedMatroid {
 public:
  /// Validates that base is a basis and order enumerates E - base exactly.
  static BasedMatroid create(Matroid m, ElementSet base,
                             std::vector<int> order);

  /// Order defaults to ascending labels of E - base.
  static BasedMatroid with_default_order(Matroid m, ElementSet base);

  const Matroid& matroid() const { return matroid_; }
  ElementSet base() const { return base_; }
  const std::vector<int>& order() const { return order_; }
  int rank() const { return matroid_.rank(); }

  /// 1-based position of a non-base element in the order.
  int position_of(int e) const;

  /// Translate a set of non-base element labels into the set of their
  /// order positions, and back.
  ElementSet positions_of(ElementSet labels) const;
  ElementSet labels_of(ElementSet positions) const;

  /// Vertex order used by the lexicographic shelling: base elements first
  /// in ascending label order, then the order sequence.  Returns a table
  /// mapping element label -> shelling position (0-based).
  std::vector<int> shelling_positions() const;

 private:
  BasedMatroid(Matroid m, ElementSet base, std::vector<int> order)
      : matroid_(std::move(m)), base_(base), order_(std::move(order)) {}

  Matroid matroid_;
  ElementSet base_;
  std::vector<int> order_;
};

}  // namespace lexshell
