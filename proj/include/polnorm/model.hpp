#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polnorm/decimal.hpp"

namespace polnorm {

// Attribute kind. Numeric attributes carry exact decimals and admit order
// comparisons; entity attributes carry opaque symbols (IRIs, names) and
// admit only equality and inequality, under the unique name assumption.
enum class Kind { Numeric, Entity };

// Right-operand value: an exact decimal or an opaque symbol.
class Value {
 public:
  static Value number(Decimal d) { return Value(std::move(d)); }
  static Value symbol(std::string s) { return Value(std::move(s)); }

  Kind kind() const { return std::holds_alternative<Decimal>(v_) ? Kind::Numeric : Kind::Entity; }
  bool is_number() const { return kind() == Kind::Numeric; }
  const Decimal& num() const { return std::get<Decimal>(v_); }
  const std::string& sym() const { return std::get<std::string>(v_); }

  // Total order: numerics before symbols, numerics by decimal order,
  // symbols lexicographic. Used only as a sort key; cross-kind comparison
  // never happens within one attribute.
  int cmp(const Value& other) const;

  bool operator==(const Value& o) const { return cmp(o) == 0; }
  bool operator!=(const Value& o) const { return cmp(o) != 0; }
  bool operator<(const Value& o) const { return cmp(o) < 0; }

  std::string str() const { return is_number() ? num().str() : sym(); }

 private:
  explicit Value(Decimal d) : v_(std::move(d)) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  std::variant<Decimal, std::string> v_;
};

enum class Op { Eq, Neq, Lt, Gt, Leq, Geq };

const char* op_name(Op op);                       // "eq", "neq", ...
std::optional<Op> op_from_name(std::string_view); // inverse of op_name

// Canonical (post-regularisation) operators are Eq/Lt/Gt for numeric
// attributes and Eq/Neq for entity attributes.
bool op_canonical_for(Op op, Kind kind);
bool op_legal_for(Op op, Kind kind);

// Sort rank inside canonical rules: Eq < Lt < Gt < Neq.
int op_rank(Op op);

// Atomic comparison (left op right). The attribute kind is implied by the
// right operand's variant; well-typedness against the schema is enforced
// at ingestion time.
struct Condition {
  std::string left;
  Op op;
  Value right;

  Kind kind() const { return right.kind(); }

  int cmp(const Condition& other) const;
  bool operator==(const Condition& o) const { return cmp(o) == 0; }
  bool operator<(const Condition& o) const { return cmp(o) < 0; }

  std::string str() const;
};

// Boolean tree over conditions. And/Or are n-ary; after parsing they have
// at least two children, except that the empty And is the internal
// encoding of "true" (the merged form of an empty rule).
class ConstraintExpr {
 public:
  enum class Node { Leaf, And, Or, Not, Xor };

  static ConstraintExpr leaf(Condition c);
  static ConstraintExpr conj(std::vector<ConstraintExpr> children);
  static ConstraintExpr disj(std::vector<ConstraintExpr> children);
  static ConstraintExpr negation(ConstraintExpr child);
  static ConstraintExpr exclusive(ConstraintExpr a, ConstraintExpr b);

  Node node() const { return node_; }
  const Condition& condition() const { return *cond_; }
  const std::vector<ConstraintExpr>& children() const { return children_; }

  // Structural equality (used by serialisation round-trip tests).
  bool operator==(const ConstraintExpr& o) const;

  std::string str() const;

 private:
  ConstraintExpr(Node node, std::optional<Condition> cond, std::vector<ConstraintExpr> children)
      : node_(node), cond_(std::move(cond)), children_(std::move(children)) {}

  Node node_;
  std::optional<Condition> cond_;
  std::vector<ConstraintExpr> children_;
};

// A rule is a set of constraints evaluated conjunctively. The empty rule
// matches every event. The interpretation (permission, prohibition,
// obligation) comes from which policy list holds it.
struct Rule {
  std::vector<ConstraintExpr> constraints;
  std::string label;  // optional, empty when absent

  bool operator==(const Rule& o) const;
};

// Canonical conjunction of conditions restricted to canonical operators,
// ordered by (attribute, operator rank, value) and duplicate free. The
// distinguished bottom form matches no event and has no conditions.
//
// Equality of two SimpleRules is plain comparison of their condition
// lists; everything the comparison module does rests on that.
class SimpleRule {
 public:
  SimpleRule() = default;

  // Sorts and dedups; callers wanting contradiction detection should go
  // through canonicalize() in normalize.hpp.
  static SimpleRule from_conditions(std::vector<Condition> conds);
  static SimpleRule bottom_rule();

  bool bottom() const { return bottom_; }
  const std::vector<Condition>& conditions() const { return conditions_; }

  // Conditions on one attribute (contiguous in the sorted list).
  std::vector<Condition> conditions_on(const std::string& attr) const;

  int cmp(const SimpleRule& other) const;
  bool operator==(const SimpleRule& o) const { return cmp(o) == 0; }
  bool operator<(const SimpleRule& o) const { return cmp(o) < 0; }

  Rule to_rule(std::string label = "") const;

  std::string str() const;

 private:
  std::vector<Condition> conditions_;
  bool bottom_ = false;
};

// Declared attribute kinds. Every attribute mentioned anywhere in a policy
// must appear here.
using Schema = std::map<std::string, Kind>;

// The attribute that every event must carry with a non-null value, when
// the schema declares it.
inline constexpr const char* kActionAttribute = "Action";

struct Policy {
  Schema schema;
  std::vector<Rule> permissions;
  std::vector<Rule> prohibitions;
  std::vector<Rule> obligations;

  bool operator==(const Policy& o) const;
};

// Attribute valuation. Missing keys and explicit nulls evaluate the same
// way (any condition over them is false).
struct Event {
  std::map<std::string, std::optional<Value>> assignments;

  const std::optional<Value>* find(const std::string& attr) const;
  std::string str() const;
};

struct World {
  std::vector<Event> events;
};

}  // namespace polnorm
