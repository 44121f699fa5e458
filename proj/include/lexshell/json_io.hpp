#pragma once

#include <string>

#include <json.hpp>

#include "lexshell/enumeration.hpp"
#include "lexshell/order_ideal.hpp"
#include "lexshell/verifier.hpp"

namespace lexshell {

using json = nlohmann::json;

/// {"n": 7, "rank": 3, "bases": [[1,2,3], ...]} with bases in canonical
/// order.  Input needs only "n" and "bases"; basis order is irrelevant.
json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const json& j);

/// [{"vars": {"4": 2, "7": 1}}, ...] in the canonical monomial order.
json ideal_to_json(const OrderIdeal& o);
OrderIdeal ideal_from_json(const json& j);

/// {"4,5": [1,2], ...}: keys are comma-joined sorted element labels, ""
/// for the empty set.
json family_to_json(const RestrictedHFamily& fam, const BasedMatroid& bm);

json report_to_json(const VerificationReport& rep);

/// Corpus export: matroids.json plus signatures.json keyed by a 64-bit
/// FNV-1a hash of the signature bytes.
void write_corpus(const Corpus& corpus, const std::string& directory);

/// Reads either a matroid JSON object or a one-record revlex database
/// file, deciding by the first non-space byte.
Matroid load_matroid_file(const std::string& path);

}  // namespace lexshell
