#include "lexshell/monomial.hpp"

#include <stdexcept>
#include <vector>

namespace lexshell {

Monomial Monomial::times(int var, int k) const {
  if (var < 1 || var > kMaxGroundSet) {
    throw std::out_of_range("variable index " + std::to_string(var));
  }
  int e = exponent(var) + k;
  if (e < 0 || e > 15) {
    throw std::out_of_range("exponent " + std::to_string(e) +
                            " outside 0..15");
  }
  std::uint64_t cleared = packed_ & ~(std::uint64_t{0xF} << (4 * (var - 1)));
  return Monomial(cleared | (std::uint64_t(e) << (4 * (var - 1))));
}

int Monomial::degree() const {
  int sum = 0;
  for (std::uint64_t p = packed_; p; p >>= 4) sum += static_cast<int>(p & 0xF);
  return sum;
}

ElementSet Monomial::support() const {
  ElementSet s;
  std::uint64_t p = packed_;
  for (int v = 1; v <= kMaxGroundSet && p; ++v, p >>= 4) {
    if (p & 0xF) s = s.with(v);
  }
  return s;
}

bool Monomial::divides(Monomial o) const {
  // Nibble-wise <= via the borrow trick would need care; sixteen compares
  // are cheap enough.
  std::uint64_t a = packed_, b = o.packed_;
  while (a) {
    if ((a & 0xF) > (b & 0xF)) return false;
    a >>= 4;
    b >>= 4;
  }
  return true;
}

Monomial Monomial::relabeled(const std::vector<int>& relabel) const {
  Monomial out;
  std::uint64_t p = packed_;
  for (int v = 1; v <= kMaxGroundSet && p; ++v, p >>= 4) {
    int e = static_cast<int>(p & 0xF);
    if (e) out = out.times(relabel[v], e);
  }
  return out;
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (int v = 1; v <= kMaxGroundSet; ++v) {
    int e = exponent(v);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += 'x' + std::to_string(v);
    if (e > 1) s += '^' + std::to_string(e);
  }
  return s;
}

std::optional<Monomial> Monomial::parse(std::string_view text) {
  if (text == "1") return Monomial::one();
  Monomial out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'x') return std::nullopt;
    ++i;
    int var = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      var = var * 10 + (text[i] - '0');
      ++i;
    }
    if (var < 1 || var > kMaxGroundSet) return std::nullopt;
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exp = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        exp = exp * 10 + (text[i] - '0');
        ++i;
      }
      if (exp < 1) return std::nullopt;
    }
    if (exp > 15 || out.exponent(var) != 0) return std::nullopt;
    out = out.times(var, exp);
    if (i < text.size()) {
      if (text[i] != '*') return std::nullopt;
      ++i;
      if (i == text.size()) return std::nullopt;
    }
  }
  return out;
}

bool Monomial::operator<(Monomial o) const {
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  std::uint64_t a = packed_, b = o.packed_;
  while (a || b) {
    int ea = static_cast<int>(a & 0xF), eb = static_cast<int>(b & 0xF);
    if (ea != eb) return ea < eb;
    a >>= 4;
    b >>= 4;
  }
  return false;
}

}  // namespace lexshell
