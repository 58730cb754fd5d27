#include "polnorm/match.hpp"

#include "polnorm/errors.hpp"

namespace polnorm {

bool evaluate_condition(const Condition& c, const Event& e) {
  const std::optional<Value>* slot = e.find(c.left);
  if (slot == nullptr || !slot->has_value()) return false;
  const Value& ev = **slot;
  if (ev.kind() != c.right.kind()) {
    throw TypeMismatchError("attribute '" + c.left + "': event value " + ev.str() +
                            " and condition value " + c.right.str() +
                            " have different kinds");
  }
  if (c.kind() == Kind::Entity) {
    const bool eq = ev.sym() == c.right.sym();
    switch (c.op) {
      case Op::Eq: return eq;
      case Op::Neq: return !eq;
      default:
        throw TypeMismatchError("operator '" + std::string(op_name(c.op)) +
                                "' is not defined for entity attribute '" + c.left + "'");
    }
  }
  const int cmp = ev.num().cmp(c.right.num());
  switch (c.op) {
    case Op::Eq: return cmp == 0;
    case Op::Neq: return cmp != 0;
    case Op::Lt: return cmp < 0;
    case Op::Gt: return cmp > 0;
    case Op::Leq: return cmp <= 0;
    case Op::Geq: return cmp >= 0;
  }
  throw InternalError("bad operator");
}

bool evaluate_expr(const ConstraintExpr& x, const Event& e) {
  switch (x.node()) {
    case ConstraintExpr::Node::Leaf:
      return evaluate_condition(x.condition(), e);
    case ConstraintExpr::Node::And:
      for (const auto& k : x.children()) {
        if (!evaluate_expr(k, e)) return false;
      }
      return true;
    case ConstraintExpr::Node::Or:
      for (const auto& k : x.children()) {
        if (evaluate_expr(k, e)) return true;
      }
      return false;
    case ConstraintExpr::Node::Not:
      return !evaluate_expr(x.children()[0], e);
    case ConstraintExpr::Node::Xor:
      return evaluate_expr(x.children()[0], e) != evaluate_expr(x.children()[1], e);
  }
  throw InternalError("bad expression node");
}

bool match(const Rule& r, const Event& e) {
  for (const auto& c : r.constraints) {
    if (!evaluate_expr(c, e)) return false;
  }
  return true;
}

bool match_simple(const SimpleRule& t, const Event& e) {
  if (t.bottom()) return false;
  for (const auto& c : t.conditions()) {
    if (!evaluate_condition(c, e)) return false;
  }
  return true;
}

void check_event(const Event& e, const Schema& schema) {
  if (schema.count(kActionAttribute)) {
    const std::optional<Value>* action = e.find(kActionAttribute);
    if (action == nullptr || !action->has_value()) {
      throw SchemaError("event " + e.str() + " has no action");
    }
  }
  for (const auto& [attr, v] : e.assignments) {
    if (!v.has_value()) continue;
    auto it = schema.find(attr);
    if (it == schema.end()) continue;
    if ((it->second == Kind::Numeric) != v->is_number()) {
      throw SchemaError("event value for '" + attr + "' (" + v->str() +
                        ") does not match the declared attribute kind");
    }
  }
}

namespace {

std::string rule_name(const Rule& r, std::size_t index, const char* kind) {
  if (!r.label.empty()) return r.label;
  return std::string(kind) + " #" + std::to_string(index);
}

}  // namespace

ValidityReport validate_world(const Policy& p, const World& w, ValiditySemantics semantics) {
  ValidityReport report;
  report.semantics = semantics;

  for (const Event& e : w.events) {
    bool permitted = false;
    for (const Rule& r : p.permissions) {
      if (match(r, e)) {
        permitted = true;
        break;
      }
    }
    if (semantics == ValiditySemantics::ProhibitByDefault) {
      if (!permitted && report.events_permitted.holds) {
        report.events_permitted.holds = false;
        report.events_permitted.witness = "unmatched event " + e.str();
      }
    }
    for (std::size_t i = 0; i < p.prohibitions.size(); ++i) {
      if (!match(p.prohibitions[i], e)) continue;
      const bool violating =
          semantics == ValiditySemantics::ProhibitByDefault || !permitted;
      if (violating && report.events_not_prohibited.holds) {
        report.events_not_prohibited.holds = false;
        report.events_not_prohibited.witness =
            "event " + e.str() + " matched by " + rule_name(p.prohibitions[i], i, "prohibition");
      }
      if (violating) break;
    }
  }

  for (std::size_t i = 0; i < p.obligations.size(); ++i) {
    bool met = false;
    for (const Event& e : w.events) {
      if (match(p.obligations[i], e)) {
        met = true;
        break;
      }
    }
    if (!met) {
      report.obligations_met.holds = false;
      report.obligations_met.witness =
          "no event matches " + rule_name(p.obligations[i], i, "obligation");
      break;
    }
  }

  report.valid = report.events_permitted.holds && report.events_not_prohibited.holds &&
                 report.obligations_met.holds;
  return report;
}

}  // namespace polnorm
