#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polnorm/intervals.hpp"
#include "polnorm/match.hpp"

namespace polnorm {

// Union of the decompositions of a set of rules over one shared value
// index. All cells are non-empty and globally comparable by canonical
// equality; value_index records the index actually used (the supplied one
// extended with the rules' own operands).
struct NormalisedRuleSet {
  std::vector<SimpleRule> cells;  // sorted, unique
  ValueIndex value_index;

  bool contains(const SimpleRule& t) const;
};

NormalisedRuleSet ns(const std::vector<Rule>& rules, const ValueIndex& v);

struct CompareOptions {
  // Witness lists are truncated to this many cells; counts stay exact.
  std::size_t witness_cap = 20;
  // Reject policies with obligations instead of comparing them
  // syntactically.
  bool strict_obligations = false;
};

struct CellWitnesses {
  std::size_t count = 0;
  std::vector<SimpleRule> cells;  // first witness_cap cells
};

struct ComparisonReport {
  bool overlap = false;
  bool left_in_right = false;
  bool right_in_left = false;
  bool equivalent = false;
  CellWitnesses shared;
  CellWitnesses left_only;
  CellWitnesses right_only;
  // Policy comparison only: whether the obligation lists are syntactically
  // equal (order-insensitive). Unset for rule comparison.
  bool compared_obligations = false;
  bool obligations_equal = true;
};

// Decomposes both rules over the union of their operand sets and compares
// the cell sets: overlap is a non-empty intersection, containment is set
// inclusion, equivalence is set equality.
ComparisonReport compare_rules(const Rule& a, const Rule& b, const CompareOptions& opts = {});

// Replaces permissions and prohibitions by the canonical difference of
// their cell sets: <NS(P,V) \ NS(F,V), {}, O>. Obligations are carried
// verbatim; splitting them would strengthen the policy.
Policy rewrite_drop_prohibitions(const Policy& p);

// Mirror image for permission-by-default semantics: <{}, NS(F,V) \ NS(P,V), O>.
// Worlds must then be validated with ValiditySemantics::PermitByDefault.
Policy rewrite_drop_permissions(const Policy& p);

// Rewrites both policies to permissions-only over one shared value index
// (union over all four rule sets) and compares the permission cell sets.
// Equal cell sets mean the two policies validate exactly the same worlds.
ComparisonReport compare_policies(const Policy& p1, const Policy& p2,
                                  const CompareOptions& opts = {});

}  // namespace polnorm
