#include "polnorm/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "polnorm/errors.hpp"
#include "polnorm/json_io.hpp"
#include "polnorm/oracle.hpp"

namespace polnorm::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Policy load_policy(const std::string& path) {
  const std::string text = read_file(path);
  // ODRL documents are recognised by their JSON-LD markers.
  if (text.find("\"@context\"") != std::string::npos ||
      text.find("\"permission\"") != std::string::npos ||
      text.find("\"prohibition\"") != std::string::npos) {
    const Json doc = parse_json(text);
    if (doc.is_object() && !doc.find("attributes")) return import_odrl_subset(text);
  }
  return parse_policy(text);
}

struct NamedRule {
  std::string kind;
  std::size_t index;
  const Rule* rule;

  std::string name() const {
    if (!rule->label.empty()) return rule->label;
    return kind + " #" + std::to_string(index);
  }
};

std::vector<NamedRule> all_rules(const Policy& p) {
  std::vector<NamedRule> out;
  for (std::size_t i = 0; i < p.permissions.size(); ++i)
    out.push_back({"permission", i, &p.permissions[i]});
  for (std::size_t i = 0; i < p.prohibitions.size(); ++i)
    out.push_back({"prohibition", i, &p.prohibitions[i]});
  for (std::size_t i = 0; i < p.obligations.size(); ++i)
    out.push_back({"obligation", i, &p.obligations[i]});
  return out;
}

const Rule& find_rule(const Policy& p, const std::string& label, const std::string& path) {
  const Rule* found = nullptr;
  for (const auto& named : all_rules(p)) {
    if (named.rule->label == label) {
      if (found) throw SchemaError("label '" + label + "' is ambiguous in " + path);
      found = named.rule;
    }
  }
  if (!found) throw SchemaError("no rule labelled '" + label + "' in " + path);
  return *found;
}

std::string cell_text(const SimpleRule& cell) { return cell.str(); }

// ---- normalize / split ----

Json decomposition_json(const Policy& p, const ValueIndex& extra) {
  ValueIndex v = build_value_index(p.permissions);
  v.merge(build_value_index(p.prohibitions));
  v.merge(extra);

  Json decomps = Json::array();
  auto add = [&](const char* kind, const std::vector<Rule>& rules) {
    for (std::size_t i = 0; i < rules.size(); ++i) {
      const Decomposition d = decompose(rules[i], v);
      Json node = Json::object();
      node.set("kind", Json::string(kind));
      node.set("index", Json::number(static_cast<long long>(i)));
      if (!rules[i].label.empty()) node.set("label", Json::string(rules[i].label));
      node.set("cell_count", Json::number(static_cast<long long>(d.rules.size())));
      Json cells = Json::array();
      for (const auto& cell : d.rules) cells.push_back(conditions_json(cell));
      node.set("cells", std::move(cells));
      decomps.push_back(std::move(node));
    }
  };
  add("permission", p.permissions);
  add("prohibition", p.prohibitions);

  Json doc = Json::object();
  doc.set("decompositions", std::move(decomps));
  // Normalising an obligation would strengthen the policy, so obligations
  // pass through verbatim.
  Json obligations = Json::array();
  for (const auto& r : p.obligations) obligations.push_back(rule_to_json(r));
  doc.set("obligations", std::move(obligations));
  return doc;
}

void print_decomposition_text(const Json& doc, std::ostream& out) {
  for (const auto& node : doc.find("decompositions")->as_array()) {
    out << node.find("kind")->as_string() << " #"
        << node.find("index")->as_number().str();
    if (const Json* label = node.find("label")) out << " (" << label->as_string() << ")";
    out << ": " << node.find("cell_count")->as_number().str() << " cells\n";
    for (const auto& cell : node.find("cells")->as_array()) {
      out << "  - ";
      const auto& conds = cell.as_array();
      if (conds.empty()) out << "<any>";
      for (std::size_t i = 0; i < conds.size(); ++i) {
        if (i) out << " and ";
        const auto& c = conds[i];
        out << "(" << c.find("left")->as_string() << " " << c.find("op")->as_string() << " "
            << (c.find("right")->is_number() ? c.find("right")->as_number().str()
                                             : c.find("right")->as_string())
            << ")";
      }
      out << "\n";
    }
  }
}

void print_comparison_text(const ComparisonReport& rep, std::ostream& out) {
  out << "overlap: " << (rep.overlap ? "yes" : "no") << "\n";
  out << "left contained in right: " << (rep.left_in_right ? "yes" : "no") << "\n";
  out << "right contained in left: " << (rep.right_in_left ? "yes" : "no") << "\n";
  out << "equivalent: " << (rep.equivalent ? "yes" : "no") << "\n";
  auto show = [&](const char* name, const CellWitnesses& w) {
    out << name << " (" << w.count << "):\n";
    for (const auto& cell : w.cells) out << "  - " << cell_text(cell) << "\n";
  };
  show("shared cells", rep.shared);
  show("left-only cells", rep.left_only);
  show("right-only cells", rep.right_only);
}

// ---- subcommand bodies ----

int cmd_normalize(const std::string& policy_path, const std::string& values_path,
                  const std::string& format, std::ostream& out) {
  const Policy p = load_policy(policy_path);
  ValueIndex extra;
  if (!values_path.empty()) extra = parse_value_set(read_file(values_path), p.schema);
  const Json doc = decomposition_json(p, extra);
  if (format == "text") {
    print_decomposition_text(doc, out);
  } else {
    out << emit_json(doc);
  }
  return 0;
}

int cmd_split(const std::string& policy_path, const std::string& against_path,
              const std::string& format, std::ostream& out) {
  const Policy p = load_policy(policy_path);
  const Policy other = load_policy(against_path);
  for (const auto& [name, kind] : other.schema) {
    auto it = p.schema.find(name);
    if (it != p.schema.end() && it->second != kind) {
      throw SchemaError("attribute '" + name + "' has different kinds in the two policies");
    }
  }
  ValueIndex extra = build_value_index(other.permissions);
  extra.merge(build_value_index(other.prohibitions));
  extra.merge(build_value_index(other.obligations));
  const Json doc = decomposition_json(p, extra);
  if (format == "text") {
    print_decomposition_text(doc, out);
  } else {
    out << emit_json(doc);
  }
  return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::vector<std::string>& rule_labels, bool strict_obligations,
                std::size_t witness_cap, const std::string& format, std::ostream& out) {
  const Policy a = load_policy(a_path);
  const Policy b = load_policy(b_path);
  CompareOptions opts;
  opts.witness_cap = witness_cap;
  opts.strict_obligations = strict_obligations;

  ComparisonReport rep;
  if (!rule_labels.empty()) {
    rep = compare_rules(find_rule(a, rule_labels[0], a_path),
                        find_rule(b, rule_labels[1], b_path), opts);
  } else {
    rep = compare_policies(a, b, opts);
  }
  if (format == "text") {
    print_comparison_text(rep, out);
  } else {
    out << emit_json(comparison_report_json(rep));
  }
  return 0;
}

int cmd_rewrite(const std::string& policy_path, const std::string& drop, std::ostream& out) {
  const Policy p = load_policy(policy_path);
  const Policy rewritten =
      drop == "prohibitions" ? rewrite_drop_prohibitions(p) : rewrite_drop_permissions(p);
  out << serialize_policy(rewritten);
  return 0;
}

int cmd_validate(const std::string& policy_path, const std::string& world_path,
                 const std::string& default_mode, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const Policy p = load_policy(policy_path);
  const World w = parse_world(read_file(world_path));
  for (const auto& e : w.events) check_event(e, p.schema);

  // Rules extended by splitting reject events that are null on the split
  // attribute; surface that before anyone trusts such a verdict.
  ValueIndex v = build_value_index(p.permissions);
  v.merge(build_value_index(p.prohibitions));
  for (const auto& e : w.events) {
    for (const auto& [attr, vals] : v.attributes()) {
      const std::optional<Value>* slot = e.find(attr);
      if (slot == nullptr || !slot->has_value()) {
        err << "warning: event " << e.str() << " is null on constrained attribute '" << attr
            << "'; conditions on it evaluate to false\n";
      }
    }
  }

  const ValiditySemantics semantics = default_mode == "permit"
                                          ? ValiditySemantics::PermitByDefault
                                          : ValiditySemantics::ProhibitByDefault;
  const ValidityReport rep = validate_world(p, w, semantics);
  if (format == "text") {
    out << "valid: " << (rep.valid ? "yes" : "no") << "\n";
    auto show = [&](const char* name, const ValidityCheck& c) {
      out << name << ": " << (c.holds ? "ok" : "violated") << "\n";
      if (!c.holds) out << "  " << c.witness << "\n";
    };
    show("events permitted", rep.events_permitted);
    show("events not prohibited", rep.events_not_prohibited);
    show("obligations met", rep.obligations_met);
  } else {
    out << emit_json(validity_report_json(rep));
  }
  return 0;
}

int cmd_check(const std::string& a_path, const std::string& b_path, std::uint64_t cap,
              const std::string& format, std::ostream& out) {
  const Policy a = load_policy(a_path);
  const Policy b = load_policy(b_path);

  bool all_agree = true;
  Json pairs = Json::array();
  for (const auto& ra : all_rules(a)) {
    for (const auto& rb : all_rules(b)) {
      const ComparisonReport rep = compare_rules(*ra.rule, *rb.rule);

      ValueIndex v = build_value_index({*ra.rule, *rb.rule});
      DomainSpec domain = domain_from_values(v);
      domain.event_cap = cap;
      const OracleRelation oracle = oracle_relation(*ra.rule, *rb.rule, domain);

      const bool agree = rep.overlap == oracle.overlap && rep.left_in_right == oracle.a_in_b &&
                         rep.right_in_left == oracle.b_in_a &&
                         rep.equivalent == oracle.equivalent;
      all_agree = all_agree && agree;

      Json node = Json::object();
      node.set("left", Json::string(ra.name()));
      node.set("right", Json::string(rb.name()));
      node.set("agree", Json::boolean(agree));
      Json cmp = Json::object();
      cmp.set("overlap", Json::boolean(rep.overlap));
      cmp.set("left_in_right", Json::boolean(rep.left_in_right));
      cmp.set("right_in_left", Json::boolean(rep.right_in_left));
      Json orc = Json::object();
      orc.set("overlap", Json::boolean(oracle.overlap));
      orc.set("left_in_right", Json::boolean(oracle.a_in_b));
      orc.set("right_in_left", Json::boolean(oracle.b_in_a));
      node.set("normalised", std::move(cmp));
      node.set("oracle", std::move(orc));
      pairs.push_back(std::move(node));
    }
  }

  Json doc = Json::object();
  doc.set("agreement", Json::boolean(all_agree));
  doc.set("pairs", std::move(pairs));
  if (format == "text") {
    out << "agreement: " << (all_agree ? "yes" : "NO") << " over "
        << doc.find("pairs")->as_array().size() << " rule pairs\n";
  } else {
    out << emit_json(doc);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalises digital-rights policies into disjoint simple rules and "
               "decides overlap, containment, equivalence and validity."};
  app.require_subcommand(1);

  std::string policy_path, values_path, against_path, world_path;
  std::string a_path, b_path;
  std::string format = "json";
  std::string drop, default_mode = "prohibit";
  std::vector<std::string> rule_labels;
  bool strict_obligations = false;
  std::size_t witness_cap = 20;
  std::uint64_t cap = 1'000'000;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* normalize_cmd =
      app.add_subcommand("normalize", "Decompose each rule into disjoint cells");
  normalize_cmd->add_option("policy", policy_path, "Policy document")->required();
  normalize_cmd->add_option("--values", values_path,
                            "Value set merged with the policy's own operands");
  add_format(normalize_cmd);

  CLI::App* split_cmd =
      app.add_subcommand("split", "Decompose a policy against another policy's values");
  split_cmd->add_option("policy", policy_path, "Policy document")->required();
  split_cmd->add_option("--against", against_path, "Policy supplying extra cut values")
      ->required();
  add_format(split_cmd);

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two policies (or two rules)");
  compare_cmd->add_option("a", a_path, "Left document")->required();
  compare_cmd->add_option("b", b_path, "Right document")->required();
  compare_cmd->add_option("--rules", rule_labels, "Compare the two labelled rules instead")
      ->expected(2);
  compare_cmd->add_flag("--strict-obligations", strict_obligations,
                        "Reject policies that carry obligations");
  compare_cmd->add_option("--witness-cap", witness_cap, "Maximum cells listed per witness set");
  add_format(compare_cmd);

  CLI::App* rewrite_cmd =
      app.add_subcommand("rewrite", "Rewrite to a single-rule-type policy");
  rewrite_cmd->add_option("policy", policy_path, "Policy document")->required();
  rewrite_cmd->add_option("--drop", drop, "Rule type to eliminate")
      ->required()
      ->check(CLI::IsMember({"prohibitions", "permissions"}));

  CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a world against a policy");
  validate_cmd->add_option("policy", policy_path, "Policy document")->required();
  validate_cmd->add_option("world", world_path, "World document")->required();
  validate_cmd->add_option("--default", default_mode, "Default semantics")
      ->check(CLI::IsMember({"permit", "prohibit"}));
  add_format(validate_cmd);

  CLI::App* check_cmd =
      app.add_subcommand("check", "Cross-validate comparison against brute-force enumeration");
  check_cmd->add_option("a", a_path, "Left document")->required();
  check_cmd->add_option("b", b_path, "Right document")->required();
  check_cmd->add_option("--cap", cap, "Maximum number of enumerated events");
  add_format(check_cmd);

  std::vector<const char*> argv;
  argv.push_back("polnorm");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (normalize_cmd->parsed()) return cmd_normalize(policy_path, values_path, format, out);
    if (split_cmd->parsed()) return cmd_split(policy_path, against_path, format, out);
    if (compare_cmd->parsed()) {
      return cmd_compare(a_path, b_path, rule_labels, strict_obligations, witness_cap, format,
                         out);
    }
    if (rewrite_cmd->parsed()) return cmd_rewrite(policy_path, drop, out);
    if (validate_cmd->parsed()) {
      return cmd_validate(policy_path, world_path, default_mode, format, out, err);
    }
    if (check_cmd->parsed()) return cmd_check(a_path, b_path, cap, format, out);
    err << "error: no subcommand\n";
    return 1;
  } catch (const ObligationsUnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedFeatureError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainTooLargeError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const TypeMismatchError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace polnorm::cli
