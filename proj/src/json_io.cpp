#include "lexshell/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexshell/revlex_db.hpp"

namespace lexshell {

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (ElementSet b : m.bases()) bases.push_back(b.elements());
  return json{{"n", m.ground_size()}, {"rank", m.rank()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("bases")) {
    throw MatroidError("matroid JSON needs fields n and bases");
  }
  int n = j.at("n").get<int>();
  std::vector<ElementSet> bases;
  for (const auto& row : j.at("bases")) {
    ElementSet b;
    for (const auto& e : row) {
      int v = e.get<int>();
      if (v < 1 || v > kMaxGroundSet) {
        throw ElementOutOfRange("element " + std::to_string(v));
      }
      b = b.with(v);
    }
    bases.push_back(b);
  }
  return Matroid::from_bases(n, std::move(bases));
}

json ideal_to_json(const OrderIdeal& o) {
  json out = json::array();
  for (Monomial m : o) {
    json vars = json::object();
    for (int v : m.support().elements()) {
      vars[std::to_string(v)] = m.exponent(v);
    }
    out.push_back(json{{"vars", vars}});
  }
  return out;
}

OrderIdeal ideal_from_json(const json& j) {
  std::vector<Monomial> monomials;
  for (const auto& entry : j) {
    Monomial m;
    for (const auto& [key, value] : entry.at("vars").items()) {
      m = m.times(std::stoi(key), value.get<int>());
    }
    monomials.push_back(m);
  }
  return OrderIdeal(std::move(monomials));
}

json family_to_json(const RestrictedHFamily& fam, const BasedMatroid& bm) {
  json out = json::object();
  for (const auto& [positions, h] : fam.entries) {
    std::string key;
    for (int e : bm.labels_of(positions).elements()) {
      if (!key.empty()) key += ',';
      key += std::to_string(e);
    }
    out[key] = h;
  }
  return out;
}

json report_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    checks.push_back(json{{"name", c.name},
                          {"checked", c.checked},
                          {"failed", c.failed},
                          {"witnesses", c.witnesses}});
  }
  return json{{"corpus", rep.corpus_id},
              {"classes", rep.matroid_classes},
              {"signatures", rep.based_signatures},
              {"checks", checks},
              {"seconds", rep.seconds}};
}

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

}  // namespace

void write_corpus(const Corpus& corpus, const std::string& directory) {
  std::filesystem::create_directories(directory);

  json matroids = json::array();
  for (const Matroid& m : corpus.matroids) matroids.push_back(matroid_to_json(m));
  std::ofstream mf(directory + "/matroids.json");
  mf << matroids.dump(1) << '\n';

  json signatures = json::object();
  for (const BasedRecord& rec : corpus.based) {
    json entry;
    entry["base"] = rec.base.elements();
    entry["order"] = rec.order;
    entry["matroid"] = matroid_to_json(rec.matroid);
    entry["family"] = family_to_json(rec.family, rec.based());
    signatures[hex64(fnv1a(signature_bytes(rec.family)))] = entry;
  }
  std::ofstream sf(directory + "/signatures.json");
  sf << signatures.dump(1) << '\n';
}

Matroid load_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatroidError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw MatroidError(path + " is empty");
  if (text[first] == '{') {
    return matroid_from_json(json::parse(text));
  }
  std::istringstream ss(text);
  std::vector<RevlexRecord> records = read_database(ss);
  if (records.size() != 1) {
    throw MatroidError(path + " must hold exactly one record");
  }
  return parse_revlex(records.front());
}

}  // namespace lexshell
