#include "polnorm/compare.hpp"

#include <algorithm>

#include "polnorm/errors.hpp"

namespace polnorm {

bool NormalisedRuleSet::contains(const SimpleRule& t) const {
  return std::binary_search(cells.begin(), cells.end(), t);
}

NormalisedRuleSet ns(const std::vector<Rule>& rules, const ValueIndex& v) {
  NormalisedRuleSet out;
  out.value_index = v;
  out.value_index.merge(build_value_index(rules));
  for (const Rule& r : rules) {
    for (SimpleRule& cell : decompose(r, out.value_index).rules) {
      auto it = std::lower_bound(out.cells.begin(), out.cells.end(), cell);
      if (it == out.cells.end() || !(*it == cell)) out.cells.insert(it, std::move(cell));
    }
  }
  return out;
}

namespace {

CellWitnesses witnesses_from(std::vector<SimpleRule> cells, std::size_t cap) {
  CellWitnesses w;
  w.count = cells.size();
  if (cells.size() > cap) cells.resize(cap);
  w.cells = std::move(cells);
  return w;
}

ComparisonReport compare_cell_sets(const std::vector<SimpleRule>& left,
                                   const std::vector<SimpleRule>& right,
                                   const CompareOptions& opts) {
  std::vector<SimpleRule> shared, left_only, right_only;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(),
                        std::back_inserter(shared));
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(left_only));
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(right_only));

  ComparisonReport rep;
  rep.overlap = !shared.empty();
  rep.left_in_right = left_only.empty();
  rep.right_in_left = right_only.empty();
  rep.equivalent = rep.left_in_right && rep.right_in_left;
  rep.shared = witnesses_from(std::move(shared), opts.witness_cap);
  rep.left_only = witnesses_from(std::move(left_only), opts.witness_cap);
  rep.right_only = witnesses_from(std::move(right_only), opts.witness_cap);
  return rep;
}

// Canonical permissions-only cell set of a policy over a given index.
std::vector<SimpleRule> permission_cells(const Policy& p, const ValueIndex& v) {
  const NormalisedRuleSet ns_p = ns(p.permissions, v);
  const NormalisedRuleSet ns_f = ns(p.prohibitions, v);
  std::vector<SimpleRule> out;
  std::set_difference(ns_p.cells.begin(), ns_p.cells.end(), ns_f.cells.begin(),
                      ns_f.cells.end(), std::back_inserter(out));
  return out;
}

std::vector<Rule> cells_to_rules(const std::vector<SimpleRule>& cells) {
  std::vector<Rule> rules;
  rules.reserve(cells.size());
  for (const auto& cell : cells) rules.push_back(cell.to_rule());
  return rules;
}

ValueIndex policy_rule_index(const Policy& p) {
  ValueIndex v = build_value_index(p.permissions);
  v.merge(build_value_index(p.prohibitions));
  return v;
}

}  // namespace

ComparisonReport compare_rules(const Rule& a, const Rule& b, const CompareOptions& opts) {
  ValueIndex v = build_value_index({a, b});
  const Decomposition da = decompose(a, v);
  const Decomposition db = decompose(b, v);
  return compare_cell_sets(da.rules, db.rules, opts);
}

Policy rewrite_drop_prohibitions(const Policy& p) {
  const ValueIndex v = policy_rule_index(p);
  Policy out;
  out.schema = p.schema;
  out.permissions = cells_to_rules(permission_cells(p, v));
  out.obligations = p.obligations;
  return out;
}

Policy rewrite_drop_permissions(const Policy& p) {
  const ValueIndex v = policy_rule_index(p);
  const NormalisedRuleSet ns_p = ns(p.permissions, v);
  const NormalisedRuleSet ns_f = ns(p.prohibitions, v);
  std::vector<SimpleRule> cells;
  std::set_difference(ns_f.cells.begin(), ns_f.cells.end(), ns_p.cells.begin(),
                      ns_p.cells.end(), std::back_inserter(cells));
  Policy out;
  out.schema = p.schema;
  out.prohibitions = cells_to_rules(cells);
  out.obligations = p.obligations;
  return out;
}

ComparisonReport compare_policies(const Policy& p1, const Policy& p2,
                                  const CompareOptions& opts) {
  if (opts.strict_obligations && (!p1.obligations.empty() || !p2.obligations.empty())) {
    throw ObligationsUnsupportedError(
        "policy comparison with obligations is not supported in strict mode");
  }
  for (const auto& [name, kind] : p1.schema) {
    auto it = p2.schema.find(name);
    if (it != p2.schema.end() && it->second != kind) {
      throw SchemaError("attribute '" + name + "' has different kinds in the two policies");
    }
  }

  // One shared index across all four rule sets keeps cells aligned.
  ValueIndex v = policy_rule_index(p1);
  v.merge(policy_rule_index(p2));

  ComparisonReport rep =
      compare_cell_sets(permission_cells(p1, v), permission_cells(p2, v), opts);

  if (!p1.obligations.empty() || !p2.obligations.empty()) {
    rep.compared_obligations = true;
    auto key = [](const Rule& r) {
      Rule copy = r;
      copy.label.clear();
      return copy;
    };
    std::vector<Rule> o1, o2;
    for (const auto& r : p1.obligations) o1.push_back(key(r));
    for (const auto& r : p2.obligations) o2.push_back(key(r));
    rep.obligations_equal = o1.size() == o2.size();
    if (rep.obligations_equal) {
      std::vector<bool> used(o2.size(), false);
      for (const auto& r : o1) {
        bool found = false;
        for (std::size_t i = 0; i < o2.size(); ++i) {
          if (!used[i] && o2[i] == r) {
            used[i] = true;
            found = true;
            break;
          }
        }
        if (!found) {
          rep.obligations_equal = false;
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace polnorm
