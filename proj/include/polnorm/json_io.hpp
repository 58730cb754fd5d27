#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polnorm/compare.hpp"
#include "polnorm/match.hpp"
#include "polnorm/model.hpp"

namespace polnorm {

// Small JSON document model with exact decimal numbers and ordered object
// keys. The standard DOM parsers round numbers through double, which
// would break exact value comparison, so parsing goes through a SAX
// handler that keeps the raw number tokens.
class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : v_(nullptr) {}

  static Json null() { return Json(); }
  static Json boolean(bool b) { return Json(Variant(b)); }
  static Json number(Decimal d) { return Json(Variant(std::move(d))); }
  static Json number(long long n) { return number(Decimal::from_int(n)); }
  static Json string(std::string s) { return Json(Variant(std::move(s))); }
  static Json array(Array a = {}) { return Json(Variant(std::move(a))); }
  static Json object(Object o = {}) { return Json(Variant(std::move(o))); }

  bool is_null() const { return std::holds_alternative<std::nullptr_t>(v_); }
  bool is_bool() const { return std::holds_alternative<bool>(v_); }
  bool is_number() const { return std::holds_alternative<Decimal>(v_); }
  bool is_string() const { return std::holds_alternative<std::string>(v_); }
  bool is_array() const { return std::holds_alternative<Array>(v_); }
  bool is_object() const { return std::holds_alternative<Object>(v_); }

  bool as_bool() const { return std::get<bool>(v_); }
  const Decimal& as_number() const { return std::get<Decimal>(v_); }
  const std::string& as_string() const { return std::get<std::string>(v_); }
  const Array& as_array() const { return std::get<Array>(v_); }
  const Object& as_object() const { return std::get<Object>(v_); }
  Array& as_array() { return std::get<Array>(v_); }
  Object& as_object() { return std::get<Object>(v_); }

  // First value under the key, or nullptr.
  const Json* find(std::string_view key) const;

  void push_back(Json v) { as_array().push_back(std::move(v)); }
  void set(std::string key, Json v) { as_object().emplace_back(std::move(key), std::move(v)); }

 private:
  using Variant =
      std::variant<std::nullptr_t, bool, Decimal, std::string, Array, Object>;
  explicit Json(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Throws ParseError (with byte position) on malformed input.
Json parse_json(std::string_view text);

// Deterministic rendering: two-space indent, keys in stored order, numbers
// in canonical decimal form. Identical documents produce identical bytes.
std::string emit_json(const Json& v);

// ---- native formats -------------------------------------------------------

Policy parse_policy(std::string_view text);
std::string serialize_policy(const Policy& p);

Event parse_event(std::string_view text);
World parse_world(std::string_view text);

// Value sets arrive as {"Attr": [v, ...], ...}; values are checked against
// the schema.
ValueIndex parse_value_set(std::string_view text, const Schema& schema);

// ---- ODRL JSON-LD subset ---------------------------------------------------

// Imports policies restricted to permission/prohibition/obligation rules
// with action/target/assignee/assigner and constraint lists over the
// comparison operators, plus and/or/xone logical constraints. Anything
// else raises UnsupportedFeatureError naming the offending term.
Policy import_odrl_subset(std::string_view text);

// ---- report serialisation ---------------------------------------------------

Json conditions_json(const SimpleRule& cell);
Json rule_to_json(const Rule& r);
Json comparison_report_json(const ComparisonReport& rep);
Json validity_report_json(const ValidityReport& rep);

}  // namespace polnorm
