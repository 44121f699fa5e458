#pragma once

#include <string>

#include "lexshell/constructor.hpp"
#include "lexshell/gamma.hpp"
#include "lexshell/order_ideal.hpp"

namespace lexshell {

struct NotAnIsomorphism : MatroidError {
  explicit NotAnIsomorphism(const std::string& what) : MatroidError(what) {}
};

struct ConditionCheck {
  bool pass = true;
  std::string witness;  // nonempty exactly when the check failed
};

/// Outcome of checking a candidate order ideal against its based matroid:
/// the four structural conditions, purity, and F-vector agreement.
struct ConditionReport {
  ConditionCheck variables;     // variable labels live outside the base
  ConditionCheck supports;      // supports are independent, base-disjoint
  ConditionCheck counts;        // per-support degree counts match h(Gamma_I)
  ConditionCheck restrictions;  // support restriction = construction on
                                // the restricted matroid
  ConditionCheck purity;
  ConditionCheck fvector;       // F(o) = h(matroid)

  bool all_pass() const {
    return variables.pass && supports.pass && counts.pass &&
           restrictions.pass && purity.pass && fvector.pass;
  }
  std::string to_string() const;
};

/// Checks o (normally a construction output) against bm.  family must be
/// restricted_h_family(bm).  Failures are reported, never thrown.
ConditionReport check_conditions(const BasedMatroid& bm, const OrderIdeal& o,
                                 const RestrictedHFamily& family);

/// Transport a based matroid along a ground-set permutation (relabel[e] is
/// the new name of e); the order moves pointwise.
BasedMatroid relabel_based(const BasedMatroid& bm,
                           const std::vector<int>& relabel);

/// Label equivariance of the construction: building after relabeling gives
/// the relabeled build.  Throws NotAnIsomorphism if relabel is not a
/// permutation of {1..n}.
bool check_naturality(const BasedMatroid& bm, const std::vector<int>& relabel);

}  // namespace lexshell
