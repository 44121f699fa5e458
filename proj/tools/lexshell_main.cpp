// Command-line front end: validation, h-vectors, shellings, restricted-h
// tables, order-ideal construction, corpus enumeration, and the full
// verification pipeline.
//
// Exit codes: 0 success, 1 usage or input errors, 2 invalid matroid
// (validate / parse-db), 3 check or verification failures.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexshell/canonical.hpp"
#include "lexshell/conditions.hpp"
#include "lexshell/constructor.hpp"
#include "lexshell/json_io.hpp"
#include "lexshell/revlex_db.hpp"
#include "lexshell/shelling.hpp"
#include "lexshell/verifier.hpp"

namespace {

using namespace lexshell;

ElementSet parse_set(const std::string& csv) {
  ElementSet out;
  std::string token;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) out = out.with(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

std::vector<int> parse_list(const std::string& csv) {
  std::vector<int> out;
  std::string token;
  for (char c : csv + ",") {
    if (c == ',') {
      if (!token.empty()) out.push_back(std::stoi(token));
      token.clear();
    } else {
      token += c;
    }
  }
  return out;
}

ElementSet lex_smallest_basis(const Matroid& m) {
  ElementSet best = m.bases().front();
  for (ElementSet b : m.bases()) {
    if (lex_less(b, best)) best = b;
  }
  return best;
}

BasedMatroid based_from_flags(Matroid m, const std::string& base_csv,
                              const std::string& order_csv) {
  ElementSet base =
      base_csv.empty() ? lex_smallest_basis(m) : parse_set(base_csv);
  if (order_csv.empty()) {
    return BasedMatroid::with_default_order(std::move(m), base);
  }
  return BasedMatroid::create(std::move(m), base, parse_list(order_csv));
}

void print_table(std::ostream& os, const BasedMatroid& bm,
                 const RestrictedHFamily& family, const OrderIdeal* ideal) {
  std::vector<std::pair<ElementSet, HVector>> rows;
  for (const auto& [positions, h] : family.entries) {
    rows.push_back({bm.labels_of(positions), h});
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) {
      return a.first.size() < b.first.size();
    }
    return a.first < b.first;
  });
  os << "I\th(Gamma_I)";
  if (ideal) os << "\tmonomials";
  os << "\n";
  for (const auto& [labels, h] : rows) {
    os << labels.to_string() << "\t" << hvector_to_string(h);
    if (ideal) {
      os << "\t";
      bool first = true;
      for (Monomial m : *ideal) {
        if (m.support() != labels) continue;
        if (!first) os << ", ";
        os << m.to_string();
        first = false;
      }
    }
    os << "\n";
  }
}

int cmd_validate(const std::string& file) {
  try {
    Matroid m = load_matroid_file(file);
    std::cout << "valid matroid: n=" << m.ground_size()
              << " rank=" << m.rank() << " bases=" << m.bases().size()
              << "\n";
    return 0;
  } catch (const MatroidError& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 2;
  }
}

int cmd_parse_db(const std::string& file) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return 1;
  }
  std::vector<RevlexRecord> records = read_database(in);
  std::map<std::pair<int, int>, int> counts;
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      Matroid m = parse_revlex(records[i]);
      ++counts[{m.ground_size(), m.rank()}];
    } catch (const MatroidError& e) {
      std::cout << "record " << i + 1 << " invalid: " << e.what() << "\n";
      return 2;
    }
  }
  std::cout << "records: " << records.size() << "\n";
  for (const auto& [key, count] : counts) {
    std::cout << "n=" << key.first << " r=" << key.second << ": " << count
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid h-vectors, lexicographic shellings, and pure order "
               "ideal constructions"};
  app.require_subcommand(1);

  std::string file, base_csv, order_csv, format = "table", out_path;
  int rank = 4, max_n = 8, jobs = default_jobs();

  auto* validate = app.add_subcommand("validate", "check the matroid axioms");
  validate->add_option("file", file)->required();

  auto* hvec = app.add_subcommand("hvector", "print f- and h-vectors");
  hvec->add_option("file", file)->required();

  auto* shell = app.add_subcommand("shell", "print the lexicographic "
                                            "shelling with restriction sets");
  shell->add_option("file", file)->required();
  shell->add_option("--base", base_csv, "distinguished basis, e.g. 1,2,3");
  shell->add_option("--order", order_csv, "order of the remaining elements");

  auto* gammas = app.add_subcommand("gammas", "print the restricted-h table");
  gammas->add_option("file", file)->required();
  gammas->add_option("--base", base_csv);
  gammas->add_option("--order", order_csv);

  auto* construct_cmd =
      app.add_subcommand("construct", "emit the pure order ideal");
  construct_cmd->add_option("file", file)->required();
  construct_cmd->add_option("--base", base_csv);
  construct_cmd->add_option("--order", order_csv);
  construct_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "table"}));

  auto* check = app.add_subcommand(
      "check", "construct and verify all conditions on one matroid");
  check->add_option("file", file)->required();
  check->add_option("--base", base_csv);
  check->add_option("--order", order_csv);

  auto* enumerate = app.add_subcommand("enumerate", "build a corpus");
  enumerate->add_option("--rank", rank)->required();
  enumerate->add_option("--max-n", max_n)->required();
  enumerate->add_option("--out", out_path, "directory for corpus files");
  enumerate->add_option("--jobs", jobs);

  auto* parse_db =
      app.add_subcommand("parse-db", "validate a revlex database file");
  parse_db->add_option("file", file)->required();

  auto* verify = app.add_subcommand("verify-all", "run the full pipeline");
  verify->add_option("--rank", rank)->required();
  verify->add_option("--jobs", jobs);
  verify->add_option("--out", out_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(file);
    if (*parse_db) return cmd_parse_db(file);

    if (*hvec) {
      Matroid m = load_matroid_file(file);
      HVector f = m.f_vector();
      std::cout << "f = " << hvector_to_string(f) << "\n";
      std::cout << "h = " << hvector_to_string(h_vector_from_f(f)) << "\n";
      return 0;
    }

    if (*shell) {
      BasedMatroid bm =
          based_from_flags(load_matroid_file(file), base_csv, order_csv);
      ShellingRecord sr = lex_shelling(bm);
      for (std::size_t i = 0; i < sr.ordered_bases.size(); ++i) {
        std::cout << sr.ordered_bases[i].to_string() << "\tR="
                  << sr.restriction_sets[i].to_string() << "\n";
      }
      std::cout << "h = "
                << hvector_to_string(
                       h_vector_from_shelling(sr, bm.rank()))
                << "\n";
      return 0;
    }

    if (*gammas) {
      BasedMatroid bm =
          based_from_flags(load_matroid_file(file), base_csv, order_csv);
      print_table(std::cout, bm, restricted_h_family(bm), nullptr);
      return 0;
    }

    if (*construct_cmd) {
      BasedMatroid bm =
          based_from_flags(load_matroid_file(file), base_csv, order_csv);
      OrderIdeal ideal = construct(bm);
      if (format == "json") {
        std::cout << ideal_to_json(ideal).dump(1) << "\n";
      } else {
        print_table(std::cout, bm, restricted_h_family(bm), &ideal);
      }
      return 0;
    }

    if (*check) {
      BasedMatroid bm =
          based_from_flags(load_matroid_file(file), base_csv, order_csv);
      RestrictedHFamily family = restricted_h_family(bm);
      OrderIdeal ideal = construct(bm);
      print_table(std::cout, bm, family, &ideal);
      ConditionReport rep = check_conditions(bm, ideal, family);
      std::cout << rep.to_string();
      return rep.all_pass() ? 0 : 3;
    }

    if (*enumerate) {
      Corpus corpus = enumerate_up_to(rank, max_n, jobs);
      based_matroids(corpus, jobs);
      std::cout << "classes: " << corpus.matroids.size() << "\n";
      for (int n = rank; n <= max_n; ++n) {
        std::cout << "  n=" << n << ": " << corpus.classes_on(n) << "\n";
      }
      std::cout << "signatures: " << corpus.based.size() << "\n";
      if (!out_path.empty()) {
        write_corpus(corpus, out_path);
        std::cout << "written to " << out_path << "\n";
      }
      return 0;
    }

    if (*verify) {
      VerificationReport rep = run_full_verification(rank, jobs);
      std::cout << rep.summary();
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << report_to_json(rep).dump(1) << "\n";
      }
      return rep.clean() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
