#include "lexshell/based.hpp"

#include <algorithm>

namespace lexshell {

BasedMatroid BasedMatroid::create(Matroid m, ElementSet base,
                                  std::vector<int> order) {
  if (!m.is_basis(base)) {
    throw BasedMatroidError("distinguished base " + base.to_string() +
                            " is not a basis");
  }
  ElementSet rest = m.ground_set() - base;
  ElementSet seen;
  for (int e : order) {
    if (e < 1 || e > m.ground_size() || !rest.contains(e) || seen.contains(e)) {
      throw BasedMatroidError("order must list each element of E - base once");
    }
    seen = seen.with(e);
  }
  if (seen != rest) {
    throw BasedMatroidError("order must list each element of E - base once");
  }
  return BasedMatroid(std::move(m), base, std::move(order));
}

BasedMatroid BasedMatroid::with_default_order(Matroid m, ElementSet base) {
  std::vector<int> order = (m.ground_set() - base).elements();
  return create(std::move(m), base, std::move(order));
}

int BasedMatroid::position_of(int e) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] == e) return static_cast<int>(i) + 1;
  }
  return 0;
}

ElementSet BasedMatroid::positions_of(ElementSet labels) const {
  ElementSet out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (labels.contains(order_[i])) out = out.with(static_cast<int>(i) + 1);
  }
  return out;
}

ElementSet BasedMatroid::labels_of(ElementSet positions) const {
  ElementSet out;
  for (int p : positions.elements()) {
    out = out.with(order_[p - 1]);
  }
  return out;
}

std::vector<int> BasedMatroid::shelling_positions() const {
  std::vector<int> pos(matroid_.ground_size() + 1, -1);
  int next = 0;
  for (int e : base_.elements()) pos[e] = next++;
  for (int e : order_) pos[e] = next++;
  return pos;
}

}  // namespace lexshell
