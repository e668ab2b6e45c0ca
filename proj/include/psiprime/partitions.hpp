#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace psiprime {

/// Largest n accepted by partitions_of (p(64) = 1741630).
inline constexpr int kMaxPartitionN = 64;

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0. Trailing zeros are never stored.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw DomainError("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Lexicographic comparison of the zero-padded length-n tuples. Both
/// partitions must partition the same integer.
inline std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  if (a.n() != b.n())
    throw DomainError("lex_compare: partitions of " + std::to_string(a.n()) + " and " +
                      std::to_string(b.n()) + " are not comparable");
  const auto& x = a.parts();
  const auto& y = b.parts();
  const std::size_t len = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int xi = i < x.size() ? x[i] : 0;
    const int yi = i < y.size() ? y[i] : 0;
    if (xi != yi) return xi <=> yi;
  }
  return std::strong_ordering::equal;
}

namespace detail {

inline void visit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                             const std::function<void(const std::vector<int>&)>& fn) {
  if (remaining == 0) {
    fn(prefix);
    return;
  }
  // Ascending first part gives ascending lex order of the padded tuples.
  for (int first = 1; first <= std::min(remaining, max_part); ++first) {
    prefix.push_back(first);
    visit_partitions(remaining - first, first, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls `fn` on every partition of n in strictly ascending lex order,
/// (1,...,1) first and (n) last. No cap; the caller owns the cost.
template <class Fn>
void for_each_partition(int n, Fn&& fn) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  detail::visit_partitions(n, n, prefix, [&](const std::vector<int>& parts) { fn(Partition(parts)); });
}

/// All partitions of n, ascending under lex_compare.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  if (n > kMaxPartitionN)
    throw SizeError("partitions_of: n = " + std::to_string(n) + " exceeds cap " +
                    std::to_string(kMaxPartitionN));
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition q) { out.push_back(std::move(q)); });
  return out;
}

/// `[3,1,1]`; the empty partition prints as `[]`.
inline std::string format_partition(const Partition& q) {
  std::string s = "[";
  for (std::size_t i = 0; i < q.parts().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(q.parts()[i]);
  }
  s += ']';
  return s;
}

/// Inverse of format_partition. Accepts exactly the emitted form: no spaces,
/// no leading zeros.
inline Partition parse_partition(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(pos, what); };
  if (pos >= text.size() || text[pos] != '[') fail("expected '['");
  ++pos;
  std::vector<int> parts;
  if (pos < text.size() && text[pos] == ']') {
    ++pos;
  } else {
    for (;;) {
      if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') fail("expected a positive integer");
      long long v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + (text[pos] - '0');
        if (v > kMaxPartitionN * 1000LL) fail("part too large");
        ++pos;
      }
      if (!parts.empty() && parts.back() < v) fail("parts must be weakly decreasing");
      parts.push_back(static_cast<int>(v));
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ']') {
        ++pos;
        break;
      }
      fail("expected ',' or ']'");
    }
  }
  if (pos != text.size()) fail("trailing characters");
  return Partition(std::move(parts));
}

}  // namespace psiprime
