#include "polnorm/model.hpp"

#include <algorithm>

#include "polnorm/errors.hpp"

namespace polnorm {

int Value::cmp(const Value& other) const {
  if (v_.index() != other.v_.index()) return v_.index() < other.v_.index() ? -1 : 1;
  if (is_number()) return num().cmp(other.num());
  return sym().compare(other.sym()) < 0 ? -1 : (sym() == other.sym() ? 0 : 1);
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Eq: return "eq";
    case Op::Neq: return "neq";
    case Op::Lt: return "lt";
    case Op::Gt: return "gt";
    case Op::Leq: return "leq";
    case Op::Geq: return "geq";
  }
  throw InternalError("bad operator");
}

std::optional<Op> op_from_name(std::string_view name) {
  if (name == "eq") return Op::Eq;
  if (name == "neq") return Op::Neq;
  if (name == "lt") return Op::Lt;
  if (name == "gt") return Op::Gt;
  if (name == "leq") return Op::Leq;
  if (name == "geq") return Op::Geq;
  return std::nullopt;
}

bool op_canonical_for(Op op, Kind kind) {
  if (kind == Kind::Numeric) return op == Op::Eq || op == Op::Lt || op == Op::Gt;
  return op == Op::Eq || op == Op::Neq;
}

bool op_legal_for(Op op, Kind kind) {
  if (kind == Kind::Numeric) return true;
  return op == Op::Eq || op == Op::Neq;
}

int op_rank(Op op) {
  switch (op) {
    case Op::Eq: return 0;
    case Op::Lt: return 1;
    case Op::Gt: return 2;
    case Op::Neq: return 3;
    case Op::Leq: return 4;
    case Op::Geq: return 5;
  }
  throw InternalError("bad operator");
}

namespace {
const char* op_pretty(Op op) {
  switch (op) {
    case Op::Eq: return "=";
    case Op::Neq: return "!=";
    case Op::Lt: return "<";
    case Op::Gt: return ">";
    case Op::Leq: return "<=";
    case Op::Geq: return ">=";
  }
  return "?";
}
}  // namespace

int Condition::cmp(const Condition& other) const {
  if (int c = left.compare(other.left); c != 0) return c < 0 ? -1 : 1;
  if (op_rank(op) != op_rank(other.op)) return op_rank(op) < op_rank(other.op) ? -1 : 1;
  return right.cmp(other.right);
}

std::string Condition::str() const {
  return "(" + left + " " + op_pretty(op) + " " + right.str() + ")";
}

ConstraintExpr ConstraintExpr::leaf(Condition c) {
  return ConstraintExpr(Node::Leaf, std::move(c), {});
}

ConstraintExpr ConstraintExpr::conj(std::vector<ConstraintExpr> children) {
  return ConstraintExpr(Node::And, std::nullopt, std::move(children));
}

ConstraintExpr ConstraintExpr::disj(std::vector<ConstraintExpr> children) {
  return ConstraintExpr(Node::Or, std::nullopt, std::move(children));
}

ConstraintExpr ConstraintExpr::negation(ConstraintExpr child) {
  std::vector<ConstraintExpr> kids;
  kids.push_back(std::move(child));
  return ConstraintExpr(Node::Not, std::nullopt, std::move(kids));
}

ConstraintExpr ConstraintExpr::exclusive(ConstraintExpr a, ConstraintExpr b) {
  std::vector<ConstraintExpr> kids;
  kids.push_back(std::move(a));
  kids.push_back(std::move(b));
  return ConstraintExpr(Node::Xor, std::nullopt, std::move(kids));
}

bool ConstraintExpr::operator==(const ConstraintExpr& o) const {
  if (node_ != o.node_) return false;
  if (node_ == Node::Leaf) return condition() == o.condition();
  return children_ == o.children_;
}

std::string ConstraintExpr::str() const {
  switch (node_) {
    case Node::Leaf: return condition().str();
    case Node::Not: return "not " + children_[0].str();
    case Node::Xor: return "(" + children_[0].str() + " xor " + children_[1].str() + ")";
    case Node::And:
    case Node::Or: {
      if (children_.empty()) return node_ == Node::And ? "true" : "false";
      std::string sep = node_ == Node::And ? " and " : " or ";
      std::string out = "(";
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) out += sep;
        out += children_[i].str();
      }
      return out + ")";
    }
  }
  return "?";
}

bool Rule::operator==(const Rule& o) const {
  return label == o.label && constraints == o.constraints;
}

SimpleRule SimpleRule::from_conditions(std::vector<Condition> conds) {
  std::sort(conds.begin(), conds.end());
  conds.erase(std::unique(conds.begin(), conds.end()), conds.end());
  SimpleRule r;
  r.conditions_ = std::move(conds);
  return r;
}

SimpleRule SimpleRule::bottom_rule() {
  SimpleRule r;
  r.bottom_ = true;
  return r;
}

std::vector<Condition> SimpleRule::conditions_on(const std::string& attr) const {
  std::vector<Condition> out;
  for (const auto& c : conditions_) {
    if (c.left == attr) out.push_back(c);
  }
  return out;
}

int SimpleRule::cmp(const SimpleRule& other) const {
  if (bottom_ != other.bottom_) return bottom_ ? -1 : 1;
  const std::size_t n = std::min(conditions_.size(), other.conditions_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = conditions_[i].cmp(other.conditions_[i]); c != 0) return c;
  }
  if (conditions_.size() == other.conditions_.size()) return 0;
  return conditions_.size() < other.conditions_.size() ? -1 : 1;
}

Rule SimpleRule::to_rule(std::string label) const {
  if (bottom_) throw InvalidInputError("the bottom rule has no rule form");
  Rule r;
  r.label = std::move(label);
  r.constraints.reserve(conditions_.size());
  for (const auto& c : conditions_) r.constraints.push_back(ConstraintExpr::leaf(c));
  return r;
}

std::string SimpleRule::str() const {
  if (bottom_) return "<bottom>";
  if (conditions_.empty()) return "<any>";
  std::string out;
  for (std::size_t i = 0; i < conditions_.size(); ++i) {
    if (i) out += " and ";
    out += conditions_[i].str();
  }
  return out;
}

bool Policy::operator==(const Policy& o) const {
  return schema == o.schema && permissions == o.permissions &&
         prohibitions == o.prohibitions && obligations == o.obligations;
}

const std::optional<Value>* Event::find(const std::string& attr) const {
  auto it = assignments.find(attr);
  return it == assignments.end() ? nullptr : &it->second;
}

std::string Event::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : assignments) {
    if (!first) out += ", ";
    first = false;
    out += k + ": " + (v.has_value() ? v->str() : "null");
  }
  return out + "}";
}

}  // namespace polnorm
