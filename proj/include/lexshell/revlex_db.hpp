#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lexshell/matroid.hpp"

namespace lexshell {

struct LengthMismatch : MatroidError {
  LengthMismatch(std::size_t got, std::size_t want)
      : MatroidError("indicator has " + std::to_string(got) +
                     " characters, expected C(n,r) = " +
                     std::to_string(want)) {}
};

/// One database record: a 0/1 indicator over the r-subsets of {1..n}
/// listed in revlex order, marking which subsets are bases.
struct RevlexRecord {
  int n = 0;
  int r = 0;
  std::string indicator;

  bool operator==(const RevlexRecord&) const = default;
};

/// Decode and validate.  Throws LengthMismatch for a malformed record and
/// the usual axiom errors when the marked subsets are not the bases of a
/// matroid.
Matroid parse_revlex(const RevlexRecord& rec);

RevlexRecord serialize_revlex(const Matroid& m);

/// Lines of the form "n r indicator"; blank lines and '#' comments are
/// skipped.
std::vector<RevlexRecord> read_database(std::istream& in);

}  // namespace lexshell
