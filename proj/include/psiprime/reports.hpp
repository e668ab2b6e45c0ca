#pragma once

#include <string>

#include "json_io.hpp"
#include "notation.hpp"
#include "partitions.hpp"
#include "verify.hpp"

namespace psiprime {

inline Json group_brief(const AbelianGroup& g) {
  return Json{{"name", format_group(g)}, {"order", to_decimal(g.order())}, {"group", group_to_json(g)}};
}

inline Json index_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Json arr = Json::array();
  for (auto [a, b] : pairs) arr.push_back(Json::array({std::to_string(a), std::to_string(b)}));
  return arr;
}

inline Json to_json(const MonotonicityReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"partition", format_partition(row.partition)}, {"exponent", to_decimal(row.exponent)}});
  return Json{{"p", std::to_string(r.p)},
              {"n", std::to_string(r.n)},
              {"rows", rows},
              {"violations", index_pairs(r.violations)},
              {"pairs_checked", std::to_string(r.pairs_checked)},
              {"pair_mismatches", index_pairs(r.pair_mismatches)},
              {"holds", r.holds()}};
}

inline Json to_json(const InjectivityReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item = group_brief(e.group);
    item["psi_prime"] = factored_to_json(e.psi_prime);
    entries.push_back(std::move(item));
  }
  Json dups = Json::array();
  for (const auto& set : r.duplicate_sets) {
    Json s = Json::array();
    for (auto i : set) s.push_back(std::to_string(i));
    dups.push_back(std::move(s));
  }
  Json j{{"m", std::to_string(r.m)}, {"groups", entries}, {"duplicate_sets", dups}};
  if (r.lex_monotone) j["lex_monotone"] = *r.lex_monotone;
  j["holds"] = r.holds();
  return j;
}

inline Json to_json(const InjectivitySweep& s) {
  Json failures = Json::array();
  for (const auto& r : s.failures) failures.push_back(to_json(r));
  return Json{{"max_order", std::to_string(s.max_order)},
              {"groups_checked", std::to_string(s.groups_checked)},
              {"failures", failures},
              {"holds", s.holds()}};
}

inline Json to_json(const CollisionReport& r) {
  Json pairs = Json::array();
  for (const auto& c : r.pairs)
    pairs.push_back({{"a", group_brief(c.a)}, {"b", group_brief(c.b)}, {"psi_prime", factored_to_json(c.value)}});
  return Json{{"max_order", std::to_string(r.max_order)}, {"pairs", pairs}};
}

inline Json to_json(const ConjectureFReport& r) {
  Json co = Json::array();
  for (const auto& c : r.coincidences)
    co.push_back({{"a", group_brief(c.a)}, {"b", group_brief(c.b)}, {"k", std::to_string(c.k)}, {"value", to_decimal(c.value)}});
  return Json{{"m", std::to_string(r.m)},
              {"group_count", std::to_string(r.group_count)},
              {"pair_count", std::to_string(r.pair_count)},
              {"coincidences", co},
              {"holds", r.holds()}};
}

inline Json to_json(const ConjectureFSweep& s) {
  Json findings = Json::array();
  for (const auto& r : s.findings) findings.push_back(to_json(r));
  return Json{{"max_order", std::to_string(s.max_order)},
              {"pairs_checked", std::to_string(s.pairs_checked)},
              {"values_compared", std::to_string(s.values_compared)},
              {"findings", findings},
              {"holds", s.holds()}};
}

inline Json to_json(const OracleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.name}, {"formula", c.formula}, {"oracle", c.oracle}, {"agrees", c.agrees}});
  return Json{{"group", group_brief(r.group)},
              {"checks", checks},
              {"brute_force_skipped", r.brute_force_skipped},
              {"holds", r.holds()}};
}

}  // namespace psiprime
