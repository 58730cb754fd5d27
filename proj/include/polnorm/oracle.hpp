#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polnorm/intervals.hpp"
#include "polnorm/model.hpp"

namespace polnorm {

// Finite per-attribute domains for exhaustive enumeration. Deliberately
// independent of the normalisation machinery: the only semantics it
// relies on is match().
struct DomainSpec {
  struct Attr {
    std::vector<Value> values;
    bool allow_null = false;  // never set for the action attribute
  };

  std::map<std::string, Attr> attributes;
  std::uint64_t event_cap = 1'000'000;

  std::uint64_t event_count() const;
};

// Calls fn for every assignment in the cartesian product, each exactly
// once, in a deterministic order (attributes by name, values in listed
// order, null last). Throws DomainTooLargeError beyond the cap.
void for_each_event(const DomainSpec& d, const std::function<void(const Event&)>& fn);

std::vector<Event> enumerate_events(const DomainSpec& d);

struct OracleRelation {
  bool overlap = false;
  bool a_in_b = true;
  bool b_in_a = true;
  bool equivalent = true;
};

// Truth table of the two rules over every enumerated event.
OracleRelation oracle_relation(const Rule& a, const Rule& b, const DomainSpec& d);

// Builds a domain in which every split cell over v is inhabited: for each
// numeric attribute the cut values themselves, one exact midpoint between
// each adjacent pair, and `padding` integers below the first and above the
// last cut; for each entity attribute the known symbols plus `padding`
// fresh ones.
DomainSpec domain_from_values(const ValueIndex& v, int padding = 1);

}  // namespace polnorm
