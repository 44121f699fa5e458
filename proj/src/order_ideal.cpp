#include "lexshell/order_ideal.hpp"

#include <algorithm>

namespace lexshell {

OrderIdeal::OrderIdeal(std::vector<Monomial> monomials)
    : monomials_(std::move(monomials)) {
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()),
                   monomials_.end());
}

bool OrderIdeal::contains(Monomial m) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

std::optional<Monomial> find_ideal_violation(const OrderIdeal& o) {
  if (o.size() == 0) return Monomial::one();  // an ideal is nonempty
  for (Monomial m : o) {
    for (int v : m.support().elements()) {
      if (!o.contains(m.divided_by_var(v))) return m;
    }
  }
  return std::nullopt;
}

std::optional<Monomial> find_purity_violation(const OrderIdeal& o) {
  if (auto bad = find_ideal_violation(o)) throw NotAnIdeal(*bad);
  int top = 0;
  for (Monomial m : o) top = std::max(top, m.degree());
  for (Monomial m : o) {
    if (m.degree() == top) continue;
    bool maximal = true;
    for (Monomial other : o) {
      if (other != m && m.divides(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) return m;
  }
  return std::nullopt;
}

bool is_pure(const OrderIdeal& o) { return !find_purity_violation(o); }

HVector F_vector(const OrderIdeal& o) {
  int top = 0;
  for (Monomial m : o) top = std::max(top, m.degree());
  HVector f(top + 1, 0);
  for (Monomial m : o) ++f[m.degree()];
  return f;
}

OrderIdeal restrict_support(const OrderIdeal& o, ElementSet vars) {
  std::vector<Monomial> kept;
  for (Monomial m : o) {
    if (m.support().subset_of(vars)) kept.push_back(m);
  }
  return OrderIdeal(std::move(kept));
}

}  // namespace lexshell
