#include "polnorm/intervals.hpp"

#include <algorithm>

#include "polnorm/errors.hpp"

namespace polnorm {

void ValueIndex::add(const std::string& attr, const Value& v) {
  auto& vec = values_[attr];
  auto it = std::lower_bound(vec.begin(), vec.end(), v);
  if (it != vec.end() && *it == v) return;
  vec.insert(it, v);
}

namespace {

void collect_expr_values(const ConstraintExpr& x, ValueIndex& out) {
  if (x.node() == ConstraintExpr::Node::Leaf) {
    out.add(x.condition().left, x.condition().right);
    return;
  }
  for (const auto& k : x.children()) collect_expr_values(k, out);
}

}  // namespace

void ValueIndex::add_rule(const Rule& r) {
  for (const auto& c : r.constraints) collect_expr_values(c, *this);
}

void ValueIndex::add_simple(const SimpleRule& t) {
  for (const auto& c : t.conditions()) add(c.left, c.right);
}

void ValueIndex::merge(const ValueIndex& other) {
  for (const auto& [attr, vals] : other.values_) {
    for (const auto& v : vals) add(attr, v);
  }
}

const std::vector<Value>* ValueIndex::find(const std::string& attr) const {
  auto it = values_.find(attr);
  return it == values_.end() ? nullptr : &it->second;
}

ValueIndex build_value_index(const std::vector<Rule>& rules) {
  ValueIndex v;
  for (const auto& r : rules) v.add_rule(r);
  return v;
}

ValueIndex build_value_index_simple(const std::vector<SimpleRule>& rules) {
  ValueIndex v;
  for (const auto& t : rules) v.add_simple(t);
  return v;
}

namespace {

// Constraints of one simple rule on one attribute, in minimal form.
struct AttrSummary {
  Kind kind = Kind::Numeric;
  std::optional<Value> eq;
  std::optional<Value> lower;       // strict, numeric only
  std::optional<Value> upper;       // strict, numeric only
  std::vector<Value> neq;           // entity only, sorted
  bool contradictory = false;
};

AttrSummary summarize(const std::string& attr, const std::vector<Condition>& conds) {
  AttrSummary s;
  if (!conds.empty()) s.kind = conds.front().kind();
  for (const auto& c : conds) {
    switch (c.op) {
      case Op::Eq:
        if (s.eq && *s.eq != c.right) {
          s.contradictory = true;  // two distinct equalities
          return s;
        }
        s.eq = c.right;
        break;
      case Op::Gt:
        if (!s.lower || c.right.num() > s.lower->num()) s.lower = c.right;
        break;
      case Op::Lt:
        if (!s.upper || c.right.num() < s.upper->num()) s.upper = c.right;
        break;
      case Op::Neq:
        s.neq.push_back(c.right);
        break;
      default:
        throw InvalidInputError("non-canonical operator in simple rule on '" + attr + "'");
    }
  }
  if (s.kind == Kind::Numeric) {
    if (s.eq) {
      // The bounds are strict, so the equality value must lie strictly
      // inside the interval they define.
      if ((s.lower && !(s.eq->num() > s.lower->num())) ||
          (s.upper && !(s.eq->num() < s.upper->num()))) {
        s.contradictory = true;
      }
      s.lower.reset();
      s.upper.reset();
    } else if (s.lower && s.upper && !(s.lower->num() < s.upper->num())) {
      s.contradictory = true;  // empty interval
    }
  } else {
    if (s.eq) {
      for (const auto& w : s.neq) {
        if (w == *s.eq) {
          s.contradictory = true;
          break;
        }
      }
      s.neq.clear();  // a kept equality subsumes inequalities to other symbols
    }
  }
  return s;
}

void append_summary(std::vector<Condition>& out, const std::string& attr, const AttrSummary& s) {
  if (s.eq) {
    out.push_back(Condition{attr, Op::Eq, *s.eq});
    return;
  }
  if (s.kind == Kind::Numeric) {
    if (s.lower) out.push_back(Condition{attr, Op::Gt, *s.lower});
    if (s.upper) out.push_back(Condition{attr, Op::Lt, *s.upper});
  } else {
    for (const auto& w : s.neq) out.push_back(Condition{attr, Op::Neq, w});
  }
}

// Groups the (sorted) conditions of t by attribute.
std::vector<std::pair<std::string, std::vector<Condition>>> group_by_attr(const SimpleRule& t) {
  std::vector<std::pair<std::string, std::vector<Condition>>> groups;
  for (const auto& c : t.conditions()) {
    if (groups.empty() || groups.back().first != c.left) {
      groups.push_back({c.left, {}});
    }
    groups.back().second.push_back(c);
  }
  return groups;
}

}  // namespace

SimpleRule simplify(const SimpleRule& t) {
  if (t.bottom()) return t;
  std::vector<Condition> out;
  for (const auto& [attr, conds] : group_by_attr(t)) {
    const AttrSummary s = summarize(attr, conds);
    if (s.contradictory) return SimpleRule::bottom_rule();
    append_summary(out, attr, s);
  }
  return SimpleRule::from_conditions(std::move(out));
}

bool is_empty(const SimpleRule& t) { return t.bottom() || simplify(t).bottom(); }

namespace {

// One alternative = the conditions replacing an attribute's constraints in
// one cell of the partition.
using Alternative = std::vector<Condition>;

std::vector<Alternative> split_numeric(const std::string& attr, const AttrSummary& s,
                                       const std::vector<Value>& vals) {
  // Values strictly inside the (possibly unbounded) interval.
  std::vector<Value> inside;
  for (const auto& v : vals) {
    if (s.lower && !(v.num() > s.lower->num())) continue;
    if (s.upper && !(v.num() < s.upper->num())) continue;
    inside.push_back(v);
  }
  if (inside.empty()) return {};

  std::vector<Alternative> alts;
  auto open_cell = [&](const std::optional<Value>& lo, const std::optional<Value>& hi) {
    Alternative a;
    if (lo) a.push_back(Condition{attr, Op::Gt, *lo});
    if (hi) a.push_back(Condition{attr, Op::Lt, *hi});
    alts.push_back(std::move(a));
  };

  open_cell(s.lower, inside.front());
  for (std::size_t i = 0; i < inside.size(); ++i) {
    alts.push_back({Condition{attr, Op::Eq, inside[i]}});
    const std::optional<Value> hi =
        i + 1 < inside.size() ? std::optional<Value>(inside[i + 1]) : s.upper;
    open_cell(inside[i], hi);
  }
  return alts;
}

std::vector<Alternative> split_entity(const std::string& attr, const AttrSummary& s,
                                      const std::vector<Value>& vals) {
  // Values not already excluded by the rule's own inequalities.
  std::vector<Value> fresh;
  for (const auto& v : vals) {
    if (!std::binary_search(s.neq.begin(), s.neq.end(), v)) fresh.push_back(v);
  }
  if (fresh.empty()) return {};

  std::vector<Alternative> alts;
  for (const auto& v : fresh) {
    alts.push_back({Condition{attr, Op::Eq, v}});
  }
  Alternative rest;
  for (const auto& w : s.neq) rest.push_back(Condition{attr, Op::Neq, w});
  for (const auto& v : fresh) rest.push_back(Condition{attr, Op::Neq, v});
  alts.push_back(std::move(rest));
  return alts;
}

}  // namespace

Decomposition split(const SimpleRule& t, const ValueIndex& v) {
  if (t.bottom()) throw InvalidInputError("cannot split the bottom rule");
  if (!(simplify(t) == t)) throw InvalidInputError("split expects a simplified rule");

  std::vector<Condition> fixed;
  std::vector<std::vector<Alternative>> menu;

  auto groups = group_by_attr(t);
  // Attributes in the index but absent from the rule get the full partition.
  for (const auto& [attr, vals] : v.attributes()) {
    const bool present =
        std::any_of(groups.begin(), groups.end(), [&](const auto& g) { return g.first == attr; });
    if (!present && !vals.empty()) {
      AttrSummary s;
      s.kind = vals.front().kind();
      auto alts = s.kind == Kind::Numeric ? split_numeric(attr, s, vals)
                                          : split_entity(attr, s, vals);
      if (!alts.empty()) menu.push_back(std::move(alts));
    }
  }
  for (const auto& [attr, conds] : groups) {
    const std::vector<Value>* vals = v.find(attr);
    const AttrSummary s = summarize(attr, conds);
    // A point cannot be subdivided; equalities pass through untouched.
    if (s.eq || vals == nullptr || vals->empty()) {
      fixed.insert(fixed.end(), conds.begin(), conds.end());
      continue;
    }
    auto alts = s.kind == Kind::Numeric ? split_numeric(attr, s, *vals)
                                        : split_entity(attr, s, *vals);
    if (alts.empty()) {
      fixed.insert(fixed.end(), conds.begin(), conds.end());
    } else {
      menu.push_back(std::move(alts));
    }
  }

  // Cartesian product over the per-attribute partitions.
  Decomposition out;
  std::vector<std::size_t> pick(menu.size(), 0);
  while (true) {
    std::vector<Condition> conds = fixed;
    for (std::size_t i = 0; i < menu.size(); ++i) {
      const Alternative& a = menu[i][pick[i]];
      conds.insert(conds.end(), a.begin(), a.end());
    }
    SimpleRule cell = simplify(canonicalize(std::move(conds)));
    if (!cell.bottom()) out.insert(std::move(cell));

    std::size_t i = 0;
    for (; i < menu.size(); ++i) {
      if (++pick[i] < menu[i].size()) break;
      pick[i] = 0;
    }
    if (i == menu.size()) break;
  }
  return out;
}

Decomposition decompose(const Rule& r, const ValueIndex& v) {
  ValueIndex effective = v;
  effective.add_rule(r);

  Decomposition out;
  out.origin = r.label;
  for (const SimpleRule& member : normalize(r).rules) {
    const SimpleRule reduced = simplify(member);
    if (reduced.bottom()) continue;
    for (SimpleRule& cell : split(reduced, effective).rules) {
      out.insert(std::move(cell));
    }
  }
  return out;
}

}  // namespace polnorm
