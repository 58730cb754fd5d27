#pragma once

#include <string>
#include <vector>

#include "polnorm/model.hpp"

namespace polnorm {

// Duplicate-free, sorted set of simple rules equivalent (as a disjunction)
// to some source rule.
struct Decomposition {
  std::vector<SimpleRule> rules;  // sorted, canonically unique
  std::string origin;             // label of the source rule, may be empty

  bool contains(const SimpleRule& t) const;
  void insert(SimpleRule t);
  bool operator==(const Decomposition& o) const { return rules == o.rules; }
};

// All of a rule's constraints joined into one conjunction. A single
// constraint is returned as-is; the empty rule yields the empty And,
// which is the internal always-true expression.
ConstraintExpr merge_constraints(const Rule& r);

// Rewrites away Xor, Not, Leq, Geq and numeric Neq. The result is built
// from And/Or/Leaf only, with Eq/Lt/Gt on numeric attributes and Eq/Neq
// on entity attributes.
ConstraintExpr reformulate(const ConstraintExpr& x);

// Distributes And over Or. Expects reformulated input; produces the raw
// disjuncts without deduplication or simplification.
std::vector<std::vector<Condition>> to_dnf(const ConstraintExpr& x);

// Sorted, duplicate-free simple rule. Two different equalities on one
// entity attribute are unsatisfiable under the unique name assumption and
// collapse to bottom here; numeric contradictions are left to interval
// simplification.
SimpleRule canonicalize(std::vector<Condition> conds);

// The full regularisation: merge, reformulate, expand to DNF and
// canonicalise every disjunct.
Decomposition normalize(const Rule& r);

}  // namespace polnorm
