#include "polnorm/oracle.hpp"

#include <algorithm>

#include "polnorm/errors.hpp"
#include "polnorm/match.hpp"

namespace polnorm {

std::uint64_t DomainSpec::event_count() const {
  std::uint64_t total = 1;
  for (const auto& [name, attr] : attributes) {
    std::uint64_t n = attr.values.size() + (attr.allow_null ? 1 : 0);
    if (n == 0) n = 1;  // an empty domain contributes a single null slot
    if (total > event_cap / n + 1) return event_cap + 1;  // saturate, avoid overflow
    total *= n;
  }
  return total;
}

void for_each_event(const DomainSpec& d, const std::function<void(const Event&)>& fn) {
  if (d.event_count() > d.event_cap) {
    throw DomainTooLargeError("domain enumerates more than " + std::to_string(d.event_cap) +
                              " events");
  }

  std::vector<std::string> names;
  std::vector<const DomainSpec::Attr*> attrs;
  for (const auto& [name, attr] : d.attributes) {
    names.push_back(name);
    attrs.push_back(&attr);
  }

  Event e;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == names.size()) {
      fn(e);
      return;
    }
    const auto& attr = *attrs[i];
    for (const Value& v : attr.values) {
      e.assignments[names[i]] = v;
      walk(i + 1);
    }
    if (attr.allow_null || attr.values.empty()) {
      e.assignments[names[i]] = std::nullopt;
      walk(i + 1);
    }
    e.assignments.erase(names[i]);
  };
  walk(0);
}

std::vector<Event> enumerate_events(const DomainSpec& d) {
  std::vector<Event> out;
  out.reserve(static_cast<std::size_t>(d.event_count()));
  for_each_event(d, [&](const Event& e) { out.push_back(e); });
  return out;
}

OracleRelation oracle_relation(const Rule& a, const Rule& b, const DomainSpec& d) {
  OracleRelation rel;
  for_each_event(d, [&](const Event& e) {
    const bool ma = match(a, e);
    const bool mb = match(b, e);
    if (ma && mb) rel.overlap = true;
    if (ma && !mb) rel.a_in_b = false;
    if (mb && !ma) rel.b_in_a = false;
  });
  rel.equivalent = rel.a_in_b && rel.b_in_a;
  return rel;
}

namespace {

std::string fresh_symbol(const std::vector<Value>& taken, int i) {
  std::string base = i == 1 ? "__other__" : "__other" + std::to_string(i) + "__";
  while (std::any_of(taken.begin(), taken.end(),
                     [&](const Value& v) { return v.sym() == base; })) {
    base += "_";
  }
  return base;
}

}  // namespace

DomainSpec domain_from_values(const ValueIndex& v, int padding) {
  DomainSpec d;
  for (const auto& [attr, vals] : v.attributes()) {
    if (vals.empty()) continue;
    DomainSpec::Attr out;
    if (vals.front().kind() == Kind::Numeric) {
      const Decimal one = Decimal::from_int(1);
      Decimal below = vals.front().num();
      Decimal above = vals.back().num();
      std::vector<Decimal> points;
      for (int i = 0; i < padding; ++i) {
        below = below - one;
        points.push_back(below);
      }
      for (std::size_t i = 0; i < vals.size(); ++i) {
        points.push_back(vals[i].num());
        if (i + 1 < vals.size()) {
          points.push_back(Decimal::midpoint(vals[i].num(), vals[i + 1].num()));
        }
      }
      for (int i = 0; i < padding; ++i) {
        above = above + one;
        points.push_back(above);
      }
      std::sort(points.begin(), points.end());
      for (const auto& p : points) out.values.push_back(Value::number(p));
    } else {
      out.values = vals;
      for (int i = 1; i <= padding; ++i) {
        out.values.push_back(Value::symbol(fresh_symbol(out.values, i)));
      }
    }
    d.attributes[attr] = std::move(out);
  }
  return d;
}

}  // namespace polnorm
