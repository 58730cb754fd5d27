#pragma once

#include <optional>
#include <string>

#include "polnorm/model.hpp"

namespace polnorm {

// Default semantics is the closed-world reading: every event needs a
// matching permission and prohibitions are absolute. Under
// PermitByDefault no permission is required; an event is only rejected
// when a prohibition matches it and no permission overrides.
enum class ValiditySemantics { ProhibitByDefault, PermitByDefault };

// Comparison of e[c.left] against c.right under c.op. A null or absent
// attribute makes the condition false. Throws TypeMismatchError when the
// event carries a value of the other variant.
bool evaluate_condition(const Condition& c, const Event& e);

// Standard boolean semantics; Xor(a,b) is (a && !b) || (b && !a).
bool evaluate_expr(const ConstraintExpr& x, const Event& e);

// True iff every constraint of r evaluates true on e (vacuously true for
// the empty rule).
bool match(const Rule& r, const Event& e);

// Conjunction of the simple rule's conditions; always false for bottom.
bool match_simple(const SimpleRule& t, const Event& e);

struct ValidityCheck {
  bool holds = true;
  std::string witness;  // human-readable; empty when holds
};

struct ValidityReport {
  ValiditySemantics semantics = ValiditySemantics::ProhibitByDefault;
  bool valid = true;
  // (a) every event matched by some permission. Under PermitByDefault an
  // event only needs a permission when a prohibition matches it, and the
  // verdict is folded into events_not_prohibited; this check then holds
  // vacuously.
  ValidityCheck events_permitted;
  // (b) no event matched by a prohibition (PermitByDefault: no event
  // matched by a prohibition without a permission overriding it).
  ValidityCheck events_not_prohibited;
  // (c) every obligation matched by at least one event.
  ValidityCheck obligations_met;
};

ValidityReport validate_world(const Policy& p, const World& w,
                              ValiditySemantics semantics = ValiditySemantics::ProhibitByDefault);

// Schema conformance for externally supplied events: known attribute kinds
// must match, and when the schema declares the action attribute every
// event must carry it with a non-null value.
void check_event(const Event& e, const Schema& schema);

}  // namespace polnorm
