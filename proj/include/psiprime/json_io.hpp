#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "factored.hpp"
#include "groups.hpp"
#include "symmetric.hpp"

namespace psiprime {

/// Insertion-ordered JSON, so numeric keys stay in numeric order.
using Json = nlohmann::ordered_json;

// Every integer travels as a decimal string.

inline Json group_to_json(const AbelianGroup& g) {
  Json j = Json::object();
  for (const auto& c : g.components()) j[std::to_string(c.prime)] = c.exponents.parts();
  return j;
}

namespace detail {

inline std::uint64_t parse_u64(std::string_view s, const char* what) {
  if (s.empty() || s.size() > 19 || (s.size() > 1 && s.front() == '0'))
    throw DomainError(std::string("invalid ") + what + " '" + std::string(s) + "'");
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw DomainError(std::string("invalid ") + what + " '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return v;
}

inline BigInt parse_big(const Json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a decimal string");
  const auto& s = j.get_ref<const std::string&>();
  BigInt v;
  if (s.empty() || v.set_str(s, 10) != 0 || (s.size() > 1 && s.front() == '0') || s.front() == '+')
    throw DomainError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

}  // namespace detail

inline AbelianGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("group JSON must be an object of prime -> partition");
  std::vector<PrimaryComponent> comps;
  for (const auto& [key, value] : j.items()) {
    const auto p = detail::parse_u64(key, "prime key");
    if (!value.is_array()) throw DomainError("partition for prime " + key + " must be an array");
    std::vector<int> parts;
    for (const auto& x : value) {
      if (!x.is_number_integer()) throw DomainError("partition parts must be integers");
      parts.push_back(x.get<int>());
    }
    comps.push_back({p, Partition(std::move(parts))});
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.prime < b.prime; });
  return AbelianGroup(std::move(comps));
}

inline AbelianGroup group_from_json_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "malformed group JSON");
  }
  return group_from_json(j);
}

inline Json factored_to_json(const FactoredInteger& f) {
  Json factors = Json::object();
  for (const auto& [p, e] : f.factors()) factors[std::to_string(p)] = to_decimal(e);
  return Json{{"factors", factors}};
}

inline FactoredInteger factored_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_object())
    throw DomainError("factored integer JSON must look like {\"factors\": {...}}");
  FactoredInteger::Map m;
  for (const auto& [key, value] : j["factors"].items()) m[detail::parse_u64(key, "prime key")] = detail::parse_big(value, "exponent");
  return FactoredInteger(std::move(m));
}

inline Json spectrum_to_json(const BigInt& order, const OrderSpectrum& s) {
  Json entries = Json::object();
  for (const auto& [d, m] : s.entries()) entries[std::to_string(d)] = to_decimal(m);
  return Json{{"order", to_decimal(order)}, {"spectrum", entries}};
}

inline Json big_array(const std::vector<BigInt>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

inline Json psi_k_to_json(const std::vector<BigInt>& psi) { return Json{{"psi_k", big_array(psi)}}; }

inline Json polynomial_to_json(const OrderPolynomial& poly) { return Json{{"coeffs", big_array(poly.coeffs)}}; }

}  // namespace psiprime
