#include "polnorm/normalize.hpp"

#include <algorithm>

#include "polnorm/errors.hpp"

namespace polnorm {

bool Decomposition::contains(const SimpleRule& t) const {
  return std::binary_search(rules.begin(), rules.end(), t);
}

void Decomposition::insert(SimpleRule t) {
  auto it = std::lower_bound(rules.begin(), rules.end(), t);
  if (it != rules.end() && *it == t) return;
  rules.insert(it, std::move(t));
}

ConstraintExpr merge_constraints(const Rule& r) {
  if (r.constraints.size() == 1) return r.constraints.front();
  return ConstraintExpr::conj(r.constraints);
}

namespace {

ConstraintExpr cond_leaf(const Condition& base, Op op) {
  return ConstraintExpr::leaf(Condition{base.left, op, base.right});
}

ConstraintExpr disj2(ConstraintExpr a, ConstraintExpr b) {
  std::vector<ConstraintExpr> kids;
  kids.push_back(std::move(a));
  kids.push_back(std::move(b));
  return ConstraintExpr::disj(std::move(kids));
}

// Operator elimination rows, positive polarity.
ConstraintExpr reformulate_leaf(const Condition& c) {
  if (c.kind() == Kind::Entity) {
    if (!op_legal_for(c.op, Kind::Entity)) {
      throw InvalidInputError("operator '" + std::string(op_name(c.op)) +
                              "' on entity attribute '" + c.left + "'");
    }
    return ConstraintExpr::leaf(c);  // eq / neq already canonical
  }
  switch (c.op) {
    case Op::Eq:
    case Op::Lt:
    case Op::Gt:
      return ConstraintExpr::leaf(c);
    case Op::Leq:  // (l <= r)  ->  (l < r) or (l = r)
      return disj2(cond_leaf(c, Op::Lt), cond_leaf(c, Op::Eq));
    case Op::Geq:  // (l >= r)  ->  (l > r) or (l = r)
      return disj2(cond_leaf(c, Op::Gt), cond_leaf(c, Op::Eq));
    case Op::Neq:  // (l != r)  ->  (l < r) or (l > r)
      return disj2(cond_leaf(c, Op::Lt), cond_leaf(c, Op::Gt));
  }
  throw InternalError("bad operator");
}

// Negation rows. Entity attributes flip between eq and neq; numeric
// attributes land on the three canonical operators.
ConstraintExpr reformulate_negated_leaf(const Condition& c) {
  if (c.kind() == Kind::Entity) {
    switch (c.op) {
      case Op::Eq: return cond_leaf(c, Op::Neq);
      case Op::Neq: return cond_leaf(c, Op::Eq);
      default:
        throw InvalidInputError("operator '" + std::string(op_name(c.op)) +
                                "' on entity attribute '" + c.left + "'");
    }
  }
  switch (c.op) {
    case Op::Eq:  // not (l = r)  ->  (l < r) or (l > r)
      return disj2(cond_leaf(c, Op::Lt), cond_leaf(c, Op::Gt));
    case Op::Lt:  // not (l < r)  ->  (l > r) or (l = r)
      return disj2(cond_leaf(c, Op::Gt), cond_leaf(c, Op::Eq));
    case Op::Gt:  // not (l > r)  ->  (l < r) or (l = r)
      return disj2(cond_leaf(c, Op::Lt), cond_leaf(c, Op::Eq));
    case Op::Leq:  // not (l <= r)  ->  (l > r)
      return cond_leaf(c, Op::Gt);
    case Op::Geq:  // not (l >= r)  ->  (l < r)
      return cond_leaf(c, Op::Lt);
    case Op::Neq:  // not (l != r)  ->  (l = r)
      return cond_leaf(c, Op::Eq);
  }
  throw InternalError("bad operator");
}

// Xor is expanded first, then negations are pushed to the leaves where the
// table rows apply directly.
ConstraintExpr reformulate_rec(const ConstraintExpr& x, bool negated) {
  switch (x.node()) {
    case ConstraintExpr::Node::Leaf:
      return negated ? reformulate_negated_leaf(x.condition()) : reformulate_leaf(x.condition());
    case ConstraintExpr::Node::Not:
      return reformulate_rec(x.children()[0], !negated);
    case ConstraintExpr::Node::And:
    case ConstraintExpr::Node::Or: {
      std::vector<ConstraintExpr> kids;
      kids.reserve(x.children().size());
      for (const auto& k : x.children()) kids.push_back(reformulate_rec(k, negated));
      const bool conjunction = (x.node() == ConstraintExpr::Node::And) != negated;
      return conjunction ? ConstraintExpr::conj(std::move(kids))
                         : ConstraintExpr::disj(std::move(kids));
    }
    case ConstraintExpr::Node::Xor: {
      const ConstraintExpr& a = x.children()[0];
      const ConstraintExpr& b = x.children()[1];
      if (!negated) {
        // a xor b  ->  (a and not b) or (b and not a)
        std::vector<ConstraintExpr> left;
        left.push_back(reformulate_rec(a, false));
        left.push_back(reformulate_rec(b, true));
        std::vector<ConstraintExpr> right;
        right.push_back(reformulate_rec(b, false));
        right.push_back(reformulate_rec(a, true));
        return disj2(ConstraintExpr::conj(std::move(left)),
                     ConstraintExpr::conj(std::move(right)));
      }
      // not (a xor b)  ->  (a and b) or (not a and not b)
      std::vector<ConstraintExpr> both;
      both.push_back(reformulate_rec(a, false));
      both.push_back(reformulate_rec(b, false));
      std::vector<ConstraintExpr> neither;
      neither.push_back(reformulate_rec(a, true));
      neither.push_back(reformulate_rec(b, true));
      return disj2(ConstraintExpr::conj(std::move(both)),
                   ConstraintExpr::conj(std::move(neither)));
    }
  }
  throw InternalError("bad expression node");
}

}  // namespace

ConstraintExpr reformulate(const ConstraintExpr& x) { return reformulate_rec(x, false); }

std::vector<std::vector<Condition>> to_dnf(const ConstraintExpr& x) {
  switch (x.node()) {
    case ConstraintExpr::Node::Leaf:
      return {{x.condition()}};
    case ConstraintExpr::Node::Or: {
      std::vector<std::vector<Condition>> out;
      for (const auto& k : x.children()) {
        auto part = to_dnf(k);
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return out;
    }
    case ConstraintExpr::Node::And: {
      std::vector<std::vector<Condition>> out = {{}};
      for (const auto& k : x.children()) {
        const auto part = to_dnf(k);
        std::vector<std::vector<Condition>> next;
        next.reserve(out.size() * part.size());
        for (const auto& left : out) {
          for (const auto& right : part) {
            std::vector<Condition> merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
          }
        }
        out = std::move(next);
      }
      return out;
    }
    case ConstraintExpr::Node::Not:
    case ConstraintExpr::Node::Xor:
      throw InvalidInputError("to_dnf expects a reformulated expression");
  }
  throw InternalError("bad expression node");
}

SimpleRule canonicalize(std::vector<Condition> conds) {
  for (const auto& c : conds) {
    if (!op_canonical_for(c.op, c.kind())) {
      throw InvalidInputError("non-canonical operator '" + std::string(op_name(c.op)) +
                              "' in condition " + c.str());
    }
  }
  SimpleRule r = SimpleRule::from_conditions(std::move(conds));
  // Distinct equalities on one entity attribute cannot both hold.
  const auto& cs = r.conditions();
  for (std::size_t i = 1; i < cs.size(); ++i) {
    if (cs[i].kind() == Kind::Entity && cs[i].op == Op::Eq && cs[i - 1].op == Op::Eq &&
        cs[i - 1].left == cs[i].left) {
      return SimpleRule::bottom_rule();
    }
  }
  return r;
}

Decomposition normalize(const Rule& r) {
  Decomposition d;
  d.origin = r.label;
  const ConstraintExpr merged = merge_constraints(r);
  const ConstraintExpr regular = reformulate(merged);
  for (auto& conjunct : to_dnf(regular)) {
    d.insert(canonicalize(std::move(conjunct)));
  }
  return d;
}

}  // namespace polnorm
