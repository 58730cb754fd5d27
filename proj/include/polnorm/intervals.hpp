#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polnorm/normalize.hpp"

namespace polnorm {

// Per-attribute sorted, duplicate-free sets of right operands, used as the
// cut points for interval splitting. Immutable once built; merging two
// indexes is a set union per attribute.
class ValueIndex {
 public:
  ValueIndex() = default;

  void add(const std::string& attr, const Value& v);
  void add_rule(const Rule& r);
  void add_simple(const SimpleRule& t);
  void merge(const ValueIndex& other);

  bool empty() const { return values_.empty(); }
  const std::map<std::string, std::vector<Value>>& attributes() const { return values_; }
  const std::vector<Value>* find(const std::string& attr) const;

  bool operator==(const ValueIndex& o) const { return values_ == o.values_; }

 private:
  std::map<std::string, std::vector<Value>> values_;
};

ValueIndex build_value_index(const std::vector<Rule>& rules);
ValueIndex build_value_index_simple(const std::vector<SimpleRule>& rules);

// Collapses a canonical simple rule's per-attribute constraints to their
// minimal form. Numeric attributes keep at most the maximum lower bound
// and minimum upper bound, or a single interior equality; impossible
// combinations (empty interval, equality outside the open interval, two
// distinct equalities, entity eq/neq clashes) yield bottom.
SimpleRule simplify(const SimpleRule& t);

// True iff t is bottom or simplifies to bottom.
bool is_empty(const SimpleRule& t);

// Splits a simplified, non-bottom simple rule at every index value:
// numeric intervals are cut at the values strictly inside them (an
// unconstrained attribute is the interval (-inf, +inf) and receives the
// full partition), entity attributes are partitioned into one equality
// per not-yet-excluded value plus the all-excluded remainder. Equality
// constraints are never split. Every member is simplified; bottom members
// are dropped.
Decomposition split(const SimpleRule& t, const ValueIndex& v);

// The full pipeline for one rule: normalize, simplify, split against v
// extended with the rule's own operands, drop empty members, dedup.
Decomposition decompose(const Rule& r, const ValueIndex& v);

}  // namespace polnorm
