#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexshell/element_set.hpp"

namespace lexshell {

/// A monomial in the variables x_1 .. x_16, packed one exponent nibble per
/// variable.  Exponents are capped at 15, far above anything a rank <= 4
/// construction produces.  The all-zero monomial is 1.
class Monomial {
 public:
  constexpr Monomial() = default;

  static constexpr Monomial one() { return Monomial(); }

  int exponent(int var) const {
    return static_cast<int>((packed_ >> (4 * (var - 1))) & 0xF);
  }

  /// This monomial times x_var^k.
  Monomial times(int var, int k = 1) const;

  int degree() const;
  ElementSet support() const;
  bool is_one() const { return packed_ == 0; }

  bool divides(Monomial o) const;

  /// Monomial with the exponent of x_var lowered by one; var must occur.
  Monomial divided_by_var(int var) const {
    return Monomial(packed_ - (std::uint64_t{1} << (4 * (var - 1))));
  }

  /// Apply a relabeling to the variable indices; relabel[v] is the new
  /// index of variable v.
  Monomial relabeled(const std::vector<int>& relabel) const;

  /// "x4^2*x5" with factors in ascending variable order; "1" for the unit.
  std::string to_string() const;

  /// Inverse of to_string; rejects malformed input.
  static std::optional<Monomial> parse(std::string_view text);

  bool operator==(const Monomial&) const = default;

  /// Degree first, then ascending lexicographic comparison of the exponent
  /// tuple read from the smallest variable.  Total order used for listings
  /// and for OrderIdeal's internal sort.
  bool operator<(Monomial o) const;

  std::uint64_t packed() const { return packed_; }

 private:
  constexpr explicit Monomial(std::uint64_t packed) : packed_(packed) {}
  std::uint64_t packed_ = 0;
};

}  // namespace lexshell
