#include "polnorm/json_io.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "polnorm/errors.hpp"

namespace polnorm {

const Json* Json::find(std::string_view key) const {
  for (const auto& [k, v] : as_object()) {
    if (k == key) return &v;
  }
  return nullptr;
}

namespace {

// Builds the exact-decimal DOM. Number tokens that do not fit the integer
// fast path arrive with their raw text, which Decimal parses losslessly.
class SaxBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  Json take() { return std::move(root_); }

  bool null() override { return emplace(Json::null()); }
  bool boolean(bool val) override { return emplace(Json::boolean(val)); }
  bool number_integer(number_integer_t val) override {
    return emplace(Json::number(Decimal::from_int(val)));
  }
  bool number_unsigned(number_unsigned_t val) override {
    if (val <= static_cast<number_unsigned_t>(std::numeric_limits<long long>::max())) {
      return emplace(Json::number(Decimal::from_int(static_cast<long long>(val))));
    }
    return emplace(Json::number(Decimal::parse(std::to_string(val))));
  }
  bool number_float(number_float_t, const string_t& raw) override {
    return emplace(Json::number(Decimal::parse(raw)));
  }
  bool string(string_t& val) override { return emplace(Json::string(val)); }
  bool binary(binary_t&) override {
    throw ParseError("binary values are not valid JSON");
  }
  bool start_object(std::size_t) override {
    stack_.push_back(Json::object());
    return true;
  }
  bool key(string_t& val) override {
    keys_.push_back(val);
    return true;
  }
  bool end_object() override {
    Json obj = std::move(stack_.back());
    stack_.pop_back();
    return emplace(std::move(obj));
  }
  bool start_array(std::size_t) override {
    stack_.push_back(Json::array());
    return true;
  }
  bool end_array() override {
    Json arr = std::move(stack_.back());
    stack_.pop_back();
    return emplace(std::move(arr));
  }
  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    std::string msg = ex.what();
    // Strip nlohmann's "[json.exception...]" prefix; we report our own position.
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(msg, position);
  }

 private:
  bool emplace(Json v) {
    if (stack_.empty()) {
      root_ = std::move(v);
      return true;
    }
    Json& top = stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(v));
    } else {
      top.set(std::move(keys_.back()), std::move(v));
      keys_.pop_back();
    }
    return true;
  }

  Json root_;
  std::vector<Json> stack_;
  std::vector<std::string> keys_;
};

void emit_escaped(const std::string& s, std::string& out) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void emit_rec(const Json& v, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
  if (v.is_null()) {
    out += "null";
  } else if (v.is_bool()) {
    out += v.as_bool() ? "true" : "false";
  } else if (v.is_number()) {
    out += v.as_number().str();
  } else if (v.is_string()) {
    emit_escaped(v.as_string(), out);
  } else if (v.is_array()) {
    if (v.as_array().empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    const auto& items = v.as_array();
    for (std::size_t i = 0; i < items.size(); ++i) {
      out += pad_in;
      emit_rec(items[i], out, depth + 1);
      if (i + 1 < items.size()) out += ",";
      out += "\n";
    }
    out += pad + "]";
  } else {
    if (v.as_object().empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    const auto& members = v.as_object();
    for (std::size_t i = 0; i < members.size(); ++i) {
      out += pad_in;
      emit_escaped(members[i].first, out);
      out += ": ";
      emit_rec(members[i].second, out, depth + 1);
      if (i + 1 < members.size()) out += ",";
      out += "\n";
    }
    out += pad + "}";
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  SaxBuilder builder;
  nlohmann::json::sax_parse(text, &builder);
  return builder.take();
}

std::string emit_json(const Json& v) {
  std::string out;
  emit_rec(v, out, 0);
  out += "\n";
  return out;
}

// ---- native policy format ---------------------------------------------------

namespace {

const Json& expect_object(const Json& v, const std::string& what) {
  if (!v.is_object()) throw SchemaError(what + " must be a JSON object");
  return v;
}

const Json& expect_array(const Json& v, const std::string& what) {
  if (!v.is_array()) throw SchemaError(what + " must be a JSON array");
  return v;
}

std::string expect_string(const Json& v, const std::string& what) {
  if (!v.is_string()) throw SchemaError(what + " must be a JSON string");
  return v.as_string();
}

Kind attribute_kind(const Schema& schema, const std::string& name) {
  auto it = schema.find(name);
  if (it == schema.end()) {
    throw SchemaError("unknown attribute '" + name + "' (not declared in \"attributes\")");
  }
  return it->second;
}

Value parse_typed_value(const Json& v, Kind kind, const std::string& attr) {
  if (kind == Kind::Numeric) {
    if (!v.is_number()) {
      throw SchemaError("attribute '" + attr + "' is numeric; its values must be JSON numbers");
    }
    return Value::number(v.as_number());
  }
  if (!v.is_string()) {
    throw SchemaError("attribute '" + attr + "' is an entity; its values must be JSON strings");
  }
  return Value::symbol(v.as_string());
}

Condition parse_condition(const Json& node, const Schema& schema) {
  const Json* left = node.find("left");
  const Json* op = node.find("op");
  const Json* right = node.find("right");
  if (!left || !op || !right) {
    throw SchemaError("a condition needs \"left\", \"op\" and \"right\"");
  }
  const std::string attr = expect_string(*left, "\"left\"");
  const Kind kind = attribute_kind(schema, attr);
  const std::string op_text = expect_string(*op, "\"op\"");
  const auto parsed_op = op_from_name(op_text);
  if (!parsed_op) {
    throw SchemaError("unknown operator '" + op_text +
                      "' (set and class-membership operators are not supported)");
  }
  if (!op_legal_for(*parsed_op, kind)) {
    throw SchemaError("operator '" + op_text + "' is not defined for entity attribute '" +
                      attr + "'");
  }
  return Condition{attr, *parsed_op, parse_typed_value(*right, kind, attr)};
}

ConstraintExpr parse_expr(const Json& node, const Schema& schema) {
  expect_object(node, "a constraint expression");
  if (node.find("left") || node.find("op") || node.find("right")) {
    for (const auto& [k, v] : node.as_object()) {
      if (k != "left" && k != "op" && k != "right") {
        throw SchemaError("unexpected key '" + k + "' in a condition");
      }
    }
    return ConstraintExpr::leaf(parse_condition(node, schema));
  }
  if (node.as_object().size() != 1) {
    throw SchemaError("a constraint expression must be a condition or a single "
                      "\"and\"/\"or\"/\"not\"/\"xor\" node");
  }
  const auto& [key, body] = node.as_object().front();
  if (key == "not") return ConstraintExpr::negation(parse_expr(body, schema));
  if (key == "xor") {
    const auto& arr = expect_array(body, "\"xor\"").as_array();
    if (arr.size() != 2) throw SchemaError("\"xor\" takes exactly two operands");
    return ConstraintExpr::exclusive(parse_expr(arr[0], schema), parse_expr(arr[1], schema));
  }
  if (key == "and" || key == "or") {
    const auto& arr = expect_array(body, "\"" + key + "\"").as_array();
    if (arr.empty()) throw SchemaError("\"" + key + "\" needs at least one operand");
    std::vector<ConstraintExpr> kids;
    kids.reserve(arr.size());
    for (const auto& item : arr) kids.push_back(parse_expr(item, schema));
    if (kids.size() == 1) return std::move(kids.front());  // singleton collapses
    return key == "and" ? ConstraintExpr::conj(std::move(kids))
                        : ConstraintExpr::disj(std::move(kids));
  }
  throw SchemaError("unknown constraint node '" + key + "'");
}

Rule parse_rule(const Json& node, const Schema& schema, const char* kind_name,
                std::size_t index) {
  expect_object(node, std::string(kind_name) + " rule");
  Rule rule;
  const Json* constraints = nullptr;
  for (const auto& [k, v] : node.as_object()) {
    if (k == "label") {
      rule.label = expect_string(v, "\"label\"");
    } else if (k == "constraints") {
      constraints = &v;
    } else {
      throw SchemaError("unexpected key '" + k + "' in " + kind_name + " rule #" +
                        std::to_string(index));
    }
  }
  if (!constraints) {
    throw SchemaError(std::string(kind_name) + " rule #" + std::to_string(index) +
                      " needs a \"constraints\" array");
  }
  for (const auto& item : expect_array(*constraints, "\"constraints\"").as_array()) {
    rule.constraints.push_back(parse_expr(item, schema));
  }
  return rule;
}

std::vector<Rule> parse_rules(const Json* node, const Schema& schema, const char* kind_name) {
  std::vector<Rule> rules;
  if (!node) return rules;
  const auto& arr = expect_array(*node, std::string("\"") + kind_name + "\"").as_array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    rules.push_back(parse_rule(arr[i], schema, kind_name, i));
  }
  return rules;
}

}  // namespace

Policy parse_policy(std::string_view text) {
  const Json doc = parse_json(text);
  expect_object(doc, "a policy document");

  Policy p;
  const Json* attributes = nullptr;
  for (const auto& [k, v] : doc.as_object()) {
    if (k == "attributes") {
      attributes = &v;
    } else if (k != "permissions" && k != "prohibitions" && k != "obligations") {
      throw SchemaError("unexpected top-level key '" + k + "' in policy document");
    }
  }
  if (!attributes) throw SchemaError("policy document needs an \"attributes\" object");
  for (const auto& [name, kind] : expect_object(*attributes, "\"attributes\"").as_object()) {
    const std::string text_kind = expect_string(kind, "attribute kind");
    if (text_kind == "numeric") {
      p.schema[name] = Kind::Numeric;
    } else if (text_kind == "entity") {
      p.schema[name] = Kind::Entity;
    } else {
      throw SchemaError("attribute '" + name + "' has unknown kind '" + text_kind +
                        "' (expected \"numeric\" or \"entity\")");
    }
  }

  p.permissions = parse_rules(doc.find("permissions"), p.schema, "permissions");
  p.prohibitions = parse_rules(doc.find("prohibitions"), p.schema, "prohibitions");
  p.obligations = parse_rules(doc.find("obligations"), p.schema, "obligations");
  return p;
}

namespace {

Json value_json(const Value& v) {
  return v.is_number() ? Json::number(v.num()) : Json::string(v.sym());
}

Json condition_json(const Condition& c) {
  Json node = Json::object();
  node.set("left", Json::string(c.left));
  node.set("op", Json::string(op_name(c.op)));
  node.set("right", value_json(c.right));
  return node;
}

Json expr_json(const ConstraintExpr& x) {
  switch (x.node()) {
    case ConstraintExpr::Node::Leaf:
      return condition_json(x.condition());
    case ConstraintExpr::Node::Not: {
      Json node = Json::object();
      node.set("not", expr_json(x.children()[0]));
      return node;
    }
    case ConstraintExpr::Node::Xor: {
      Json arr = Json::array();
      arr.push_back(expr_json(x.children()[0]));
      arr.push_back(expr_json(x.children()[1]));
      Json node = Json::object();
      node.set("xor", std::move(arr));
      return node;
    }
    case ConstraintExpr::Node::And:
    case ConstraintExpr::Node::Or: {
      Json arr = Json::array();
      for (const auto& k : x.children()) arr.push_back(expr_json(k));
      Json node = Json::object();
      node.set(x.node() == ConstraintExpr::Node::And ? "and" : "or", std::move(arr));
      return node;
    }
  }
  throw InternalError("bad expression node");
}

Json rule_json(const Rule& r) {
  Json node = Json::object();
  if (!r.label.empty()) node.set("label", Json::string(r.label));
  Json constraints = Json::array();
  for (const auto& c : r.constraints) constraints.push_back(expr_json(c));
  node.set("constraints", std::move(constraints));
  return node;
}

Json rules_json(const std::vector<Rule>& rules) {
  Json arr = Json::array();
  for (const auto& r : rules) arr.push_back(rule_json(r));
  return arr;
}

}  // namespace

std::string serialize_policy(const Policy& p) {
  Json doc = Json::object();
  Json attributes = Json::object();
  for (const auto& [name, kind] : p.schema) {  // std::map iterates sorted
    attributes.set(name, Json::string(kind == Kind::Numeric ? "numeric" : "entity"));
  }
  doc.set("attributes", std::move(attributes));
  doc.set("permissions", rules_json(p.permissions));
  doc.set("prohibitions", rules_json(p.prohibitions));
  doc.set("obligations", rules_json(p.obligations));
  return emit_json(doc);
}

namespace {

Event event_from_json(const Json& node) {
  expect_object(node, "an event");
  Event e;
  for (const auto& [attr, v] : node.as_object()) {
    if (v.is_null()) {
      if (attr == kActionAttribute) {
        throw SchemaError("the Action attribute must not be null");
      }
      e.assignments[attr] = std::nullopt;
    } else if (v.is_number()) {
      e.assignments[attr] = Value::number(v.as_number());
    } else if (v.is_string()) {
      e.assignments[attr] = Value::symbol(v.as_string());
    } else {
      throw SchemaError("event attribute '" + attr +
                        "' must be a number, a string or null");
    }
  }
  return e;
}

}  // namespace

Event parse_event(std::string_view text) { return event_from_json(parse_json(text)); }

World parse_world(std::string_view text) {
  const Json doc = parse_json(text);
  const Json* events = &doc;
  if (doc.is_object()) {
    events = doc.find("events");
    if (!events) throw SchemaError("a world document is an array of events (or {\"events\": [...]})");
  }
  World w;
  for (const auto& item : expect_array(*events, "a world document").as_array()) {
    w.events.push_back(event_from_json(item));
  }
  return w;
}

ValueIndex parse_value_set(std::string_view text, const Schema& schema) {
  const Json doc = parse_json(text);
  expect_object(doc, "a value set document");
  ValueIndex v;
  for (const auto& [attr, values] : doc.as_object()) {
    const Kind kind = attribute_kind(schema, attr);
    for (const auto& item : expect_array(values, "values of '" + attr + "'").as_array()) {
      v.add(attr, parse_typed_value(item, kind, attr));
    }
  }
  return v;
}

// ---- ODRL JSON-LD subset ----------------------------------------------------

namespace {

// Duties, remedies, consequences and the set/class-membership operators are
// deliberately outside the imported subset.
[[noreturn]] void unsupported(const std::string& term) {
  throw UnsupportedFeatureError("unsupported ODRL term '" + term + "'");
}

std::string strip_prefix(const std::string& s) {
  if (s.rfind("odrl:", 0) == 0) return s.substr(5);
  return s;
}

std::string odrl_iri(const Json& v, const std::string& what) {
  if (v.is_string()) return v.as_string();
  if (v.is_object()) {
    if (const Json* id = v.find("@id"); id && id->is_string()) return id->as_string();
    unsupported(what + " without a plain value or @id");
  }
  unsupported(what + " of this shape");
}

std::optional<Op> odrl_operator(const std::string& name) {
  if (name == "eq") return Op::Eq;
  if (name == "neq") return Op::Neq;
  if (name == "gt") return Op::Gt;
  if (name == "gteq") return Op::Geq;
  if (name == "lt") return Op::Lt;
  if (name == "lteq") return Op::Leq;
  return std::nullopt;
}

Value odrl_right_operand(const Json& v) {
  if (v.is_number()) return Value::number(v.as_number());
  if (v.is_string()) return Value::symbol(v.as_string());
  if (v.is_object()) {
    if (const Json* id = v.find("@id"); id && id->is_string()) {
      return Value::symbol(id->as_string());
    }
    if (const Json* val = v.find("@value")) {
      if (val->is_number()) return Value::number(val->as_number());
      if (val->is_string()) {
        const Json* type = v.find("@type");
        if (type && type->is_string()) {
          const std::string t = type->as_string();
          if (t.find("decimal") != std::string::npos ||
              t.find("integer") != std::string::npos ||
              t.find("double") != std::string::npos || t.find("float") != std::string::npos) {
            return Value::number(Decimal::parse(val->as_string()));
          }
        }
        return Value::symbol(val->as_string());
      }
    }
  }
  unsupported("rightOperand of this shape");
}

const Json& odrl_operand_list(const Json& v) {
  if (v.is_array()) return v;
  if (v.is_object()) {
    if (const Json* list = v.find("@list"); list && list->is_array()) return *list;
  }
  unsupported("logical constraint operand (expected a list)");
}

// Exactly-one over the operands; the binary case is plain xor.
ConstraintExpr exactly_one(std::vector<ConstraintExpr> operands) {
  if (operands.size() == 2) {
    return ConstraintExpr::exclusive(std::move(operands[0]), std::move(operands[1]));
  }
  std::vector<ConstraintExpr> disjuncts;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    std::vector<ConstraintExpr> kids;
    kids.push_back(operands[i]);
    for (std::size_t j = 0; j < operands.size(); ++j) {
      if (j != i) kids.push_back(ConstraintExpr::negation(operands[j]));
    }
    disjuncts.push_back(ConstraintExpr::conj(std::move(kids)));
  }
  return ConstraintExpr::disj(std::move(disjuncts));
}

ConstraintExpr odrl_constraint(const Json& node) {
  expect_object(node, "an ODRL constraint");

  for (const char* logical : {"and", "or", "xone"}) {
    if (const Json* body = node.find(logical)) {
      const auto& arr = odrl_operand_list(*body).as_array();
      if (arr.empty()) unsupported(std::string(logical) + " with no operands");
      std::vector<ConstraintExpr> kids;
      kids.reserve(arr.size());
      for (const auto& item : arr) kids.push_back(odrl_constraint(item));
      if (kids.size() == 1) return std::move(kids.front());
      if (std::string(logical) == "and") return ConstraintExpr::conj(std::move(kids));
      if (std::string(logical) == "or") return ConstraintExpr::disj(std::move(kids));
      return exactly_one(std::move(kids));
    }
  }
  if (node.find("andSequence")) unsupported("andSequence");

  const Json* left = node.find("leftOperand");
  const Json* op = node.find("operator");
  const Json* right = node.find("rightOperand");
  if (node.find("rightOperandReference")) unsupported("rightOperandReference");
  if (!left || !op || !right) {
    unsupported("constraint without leftOperand/operator/rightOperand");
  }
  for (const auto& [k, v] : node.as_object()) {
    if (k != "leftOperand" && k != "operator" && k != "rightOperand" && k != "uid" &&
        k != "@type" && k != "dct:description" && k != "description") {
      unsupported(k);
    }
  }
  const std::string op_name_text = strip_prefix(odrl_iri(*op, "operator"));
  const auto parsed = odrl_operator(op_name_text);
  if (!parsed) unsupported("operator '" + op_name_text + "'");
  return ConstraintExpr::leaf(Condition{strip_prefix(odrl_iri(*left, "leftOperand")), *parsed,
                                        odrl_right_operand(*right)});
}

Rule odrl_rule(const Json& node, const char* kind_name) {
  expect_object(node, std::string("an ODRL ") + kind_name);
  Rule rule;
  std::vector<ConstraintExpr> constraints;
  for (const auto& [k, v] : node.as_object()) {
    if (k == "action") {
      constraints.push_back(ConstraintExpr::leaf(Condition{
          "Action", Op::Eq, Value::symbol(strip_prefix(odrl_iri(v, "action")))}));
    } else if (k == "target") {
      constraints.push_back(ConstraintExpr::leaf(
          Condition{"Asset", Op::Eq, Value::symbol(odrl_iri(v, "target"))}));
    } else if (k == "assignee") {
      constraints.push_back(ConstraintExpr::leaf(
          Condition{"Assignee", Op::Eq, Value::symbol(odrl_iri(v, "assignee"))}));
    } else if (k == "assigner") {
      constraints.push_back(ConstraintExpr::leaf(
          Condition{"Assigner", Op::Eq, Value::symbol(odrl_iri(v, "assigner"))}));
    } else if (k == "constraint") {
      if (v.is_array()) {
        for (const auto& item : v.as_array()) constraints.push_back(odrl_constraint(item));
      } else {
        constraints.push_back(odrl_constraint(v));
      }
    } else if (k == "uid") {
      if (v.is_string()) rule.label = v.as_string();
    } else if (k != "@type") {
      unsupported(k);  // duty, remedy, consequence, refinement, ...
    }
  }
  rule.constraints = std::move(constraints);
  return rule;
}

void collect_schema(const ConstraintExpr& x, Schema& schema) {
  if (x.node() == ConstraintExpr::Node::Leaf) {
    const Condition& c = x.condition();
    const Kind kind = c.kind();
    auto [it, inserted] = schema.emplace(c.left, kind);
    if (!inserted && it->second != kind) {
      throw SchemaError("attribute '" + c.left +
                        "' is used with both numeric and entity values");
    }
    if (!op_legal_for(c.op, kind)) {
      throw SchemaError("operator '" + std::string(op_name(c.op)) +
                        "' needs a numeric rightOperand for '" + c.left +
                        "' (encode dates and quantities as numbers)");
    }
    return;
  }
  for (const auto& k : x.children()) collect_schema(k, schema);
}

}  // namespace

Policy import_odrl_subset(std::string_view text) {
  const Json doc = parse_json(text);
  expect_object(doc, "an ODRL policy");

  Policy p;
  for (const auto& [k, v] : doc.as_object()) {
    if (k == "permission" || k == "prohibition" || k == "obligation") {
      auto& bucket = k == "permission"    ? p.permissions
                     : k == "prohibition" ? p.prohibitions
                                          : p.obligations;
      if (v.is_array()) {
        for (const auto& item : v.as_array()) bucket.push_back(odrl_rule(item, k.c_str()));
      } else {
        bucket.push_back(odrl_rule(v, k.c_str()));
      }
    } else if (k != "@context" && k != "@type" && k != "uid" && k != "profile" &&
               k != "@id") {
      unsupported(k);
    }
  }

  for (const auto* rules : {&p.permissions, &p.prohibitions, &p.obligations}) {
    for (const Rule& r : *rules) {
      for (const ConstraintExpr& c : r.constraints) collect_schema(c, p.schema);
    }
  }
  return p;
}

// ---- report serialisation ---------------------------------------------------

Json conditions_json(const SimpleRule& cell) {
  Json arr = Json::array();
  for (const auto& c : cell.conditions()) arr.push_back(condition_json(c));
  return arr;
}

Json rule_to_json(const Rule& r) { return rule_json(r); }

namespace {

Json witnesses_json(const CellWitnesses& w) {
  Json node = Json::object();
  node.set("count", Json::number(static_cast<long long>(w.count)));
  Json cells = Json::array();
  for (const auto& cell : w.cells) cells.push_back(conditions_json(cell));
  node.set("cells", std::move(cells));
  return node;
}

Json check_json(const ValidityCheck& c) {
  Json node = Json::object();
  node.set("holds", Json::boolean(c.holds));
  node.set("witness", c.holds ? Json::null() : Json::string(c.witness));
  return node;
}

}  // namespace

Json comparison_report_json(const ComparisonReport& rep) {
  Json node = Json::object();
  node.set("overlap", Json::boolean(rep.overlap));
  node.set("left_in_right", Json::boolean(rep.left_in_right));
  node.set("right_in_left", Json::boolean(rep.right_in_left));
  node.set("equivalent", Json::boolean(rep.equivalent));
  node.set("shared_cells", witnesses_json(rep.shared));
  node.set("left_only_cells", witnesses_json(rep.left_only));
  node.set("right_only_cells", witnesses_json(rep.right_only));
  if (rep.compared_obligations) {
    node.set("obligations_equal", Json::boolean(rep.obligations_equal));
    node.set("note", Json::string("equivalence is modulo obligations, which are "
                                  "compared syntactically"));
  }
  return node;
}

Json validity_report_json(const ValidityReport& rep) {
  Json node = Json::object();
  node.set("semantics", Json::string(rep.semantics == ValiditySemantics::ProhibitByDefault
                                         ? "prohibit-by-default"
                                         : "permit-by-default"));
  node.set("valid", Json::boolean(rep.valid));
  node.set("events_permitted", check_json(rep.events_permitted));
  node.set("events_not_prohibited", check_json(rep.events_not_prohibited));
  node.set("obligations_met", check_json(rep.obligations_met));
  return node;
}

}  // namespace polnorm
