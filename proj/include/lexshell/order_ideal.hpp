#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lexshell/matroid.hpp"
#include "lexshell/monomial.hpp"

namespace lexshell {

struct NotAnIdeal : std::runtime_error {
  explicit NotAnIdeal(Monomial witness)
      : std::runtime_error("not divisor-closed at " + witness.to_string()) {}
};

/// A duplicate-free collection of monomials, kept sorted in the canonical
/// monomial order.  Divisor-closure is a property to check, not an
/// invariant of the container.
class OrderIdeal {
 public:
  OrderIdeal() = default;
  explicit OrderIdeal(std::vector<Monomial> monomials);

  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool contains(Monomial m) const;

  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }

  bool operator==(const OrderIdeal&) const = default;

 private:
  std::vector<Monomial> monomials_;
};

/// A monomial of o with some one-step divisor missing, or nullopt if o is
/// divisor-closed.
std::optional<Monomial> find_ideal_violation(const OrderIdeal& o);

inline bool is_order_ideal(const OrderIdeal& o) {
  return !find_ideal_violation(o);
}

/// A divisibility-maximal monomial of smaller than maximal degree, or
/// nullopt if every maximal monomial has the top degree.  Throws NotAnIdeal
/// when o is not divisor-closed.
std::optional<Monomial> find_purity_violation(const OrderIdeal& o);

bool is_pure(const OrderIdeal& o);

/// F_i = number of monomials of degree i, up to the maximum degree present.
HVector F_vector(const OrderIdeal& o);

/// The monomials of o supported inside vars.
OrderIdeal restrict_support(const OrderIdeal& o, ElementSet vars);

}  // namespace lexshell
