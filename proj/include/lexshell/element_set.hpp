#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lexshell {

/// Largest supported ground set.  Everything in this library works with
/// subsets of {1..n} for n <= kMaxGroundSet packed into one machine word.
inline constexpr int kMaxGroundSet = 16;

/// A subset of {1..16}.  Element e occupies bit e; bit 0 stays clear.
class ElementSet {
 public:
  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint32_t bits) {
    return ElementSet(bits);
  }

  static constexpr ElementSet single(int e) { return ElementSet(1u << e); }

  /// The full set {1..n}.
  static constexpr ElementSet full(int n) {
    return ElementSet(((1u << (n + 1)) - 2u));
  }

  static ElementSet of(std::initializer_list<int> elems) {
    std::uint32_t b = 0;
    for (int e : elems) b |= (1u << e);
    return ElementSet(b);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (1u << e)); }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(1u << e));
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet operator^(ElementSet o) const {
    return ElementSet(bits_ ^ o.bits_);
  }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Plain integer order on the bit encoding; this is the canonical order
  /// used to sort basis lists.
  constexpr bool operator<(ElementSet o) const { return bits_ < o.bits_; }

  constexpr int min_element() const { return std::countr_zero(bits_); }
  constexpr int max_element() const { return 31 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  /// "{1,2,6}" or "{}".
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ',';
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on same-size subsets viewed as ascending sequences:
/// a < b iff the smallest element where they differ belongs to a.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  std::uint32_t d = a.bits() ^ b.bits();
  if (d == 0) return false;
  return (a.bits() >> std::countr_zero(d)) & 1u;
}

/// Calls fn(s) for every subset s of mask, the empty set included.
template <class Fn>
void for_each_subset(ElementSet mask, Fn&& fn) {
  std::uint32_t m = mask.bits();
  std::uint32_t sub = m;
  while (true) {
    fn(ElementSet::from_bits(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace lexshell
