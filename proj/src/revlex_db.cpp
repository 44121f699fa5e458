#include "lexshell/revlex_db.hpp"

#include <istream>
#include <sstream>

#include "lexshell/subsets.hpp"

namespace lexshell {

Matroid parse_revlex(const RevlexRecord& rec) {
  if (rec.n < 1 || rec.n > kMaxGroundSet || rec.r < 0 || rec.r > rec.n) {
    throw ElementOutOfRange("record parameters n=" + std::to_string(rec.n) +
                            " r=" + std::to_string(rec.r));
  }
  const auto& order = subsets_revlex(rec.n, rec.r);
  if (rec.indicator.size() != order.size()) {
    throw LengthMismatch(rec.indicator.size(), order.size());
  }
  std::vector<ElementSet> bases;
  for (std::size_t i = 0; i < order.size(); ++i) {
    char c = rec.indicator[i];
    if (c == '1') {
      bases.push_back(order[i]);
    } else if (c != '0') {
      throw MatroidError("indicator may contain only '0' and '1'");
    }
  }
  return Matroid::from_bases(rec.n, std::move(bases));
}

RevlexRecord serialize_revlex(const Matroid& m) {
  RevlexRecord rec;
  rec.n = m.ground_size();
  rec.r = m.rank();
  const auto& order = subsets_revlex(rec.n, rec.r);
  rec.indicator.assign(order.size(), '0');
  for (ElementSet b : m.bases()) {
    rec.indicator[revlex_rank(b)] = '1';
  }
  return rec;
}

std::vector<RevlexRecord> read_database(std::istream& in) {
  std::vector<RevlexRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    RevlexRecord rec;
    if (ss >> rec.n >> rec.r >> rec.indicator) out.push_back(rec);
  }
  return out;
}

}  // namespace lexshell
