#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "groups.hpp"
#include "json_io.hpp"

namespace psiprime {

/// Upper bound on the number of cyclic factors a group expression may spell out.
inline constexpr std::uint64_t kMaxCyclicFactors = 4096;

namespace detail {

class GroupLexer {
 public:
  explicit GroupLexer(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }
  bool done() const noexcept { return pos_ >= text_.size(); }
  char peek() const noexcept { return done() ? '\0' : text_[pos_]; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::uint64_t integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (kFactorizationCap * 10)) fail("integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void push_cyclic(GroupLexer& lx, std::vector<std::uint64_t>& out, std::uint64_t order, std::uint64_t count) {
  if (order < 2) lx.fail("cyclic factor order must be at least 2");
  if (order > kFactorizationCap) lx.fail("cyclic factor order exceeds " + std::to_string(kFactorizationCap));
  if (out.size() + count > kMaxCyclicFactors) lx.fail("too many cyclic factors");
  out.insert(out.end(), count, order);
}

inline std::vector<std::uint64_t> parse_product_form(GroupLexer& lx) {
  std::vector<std::uint64_t> orders;
  if (lx.accept('1')) {
    if (!lx.done()) lx.fail("trailing characters after trivial group '1'");
    return orders;
  }
  do {
    lx.expect('Z');
    const std::size_t at = lx.pos();
    const auto order = lx.integer();
    std::uint64_t count = 1;
    if (lx.accept('^')) {
      count = lx.integer();
      if (count < 1) lx.fail("exponent must be positive");
    }
    if (order < 2) throw ParseError(at, "cyclic factor order must be at least 2");
    push_cyclic(lx, orders, order, count);
  } while (lx.accept('x'));
  if (!lx.done()) lx.fail("expected 'x' or end of input");
  return orders;
}

inline std::vector<std::uint64_t> parse_list_form(GroupLexer& lx) {
  std::vector<std::uint64_t> orders;
  lx.expect('[');
  lx.skip_spaces();
  if (!lx.accept(']')) {
    for (;;) {
      lx.skip_spaces();
      const std::size_t at = lx.pos();
      const auto order = lx.integer();
      if (order < 2) throw ParseError(at, "cyclic factor order must be at least 2");
      push_cyclic(lx, orders, order, 1);
      lx.skip_spaces();
      if (lx.accept(',')) continue;
      lx.expect(']');
      break;
    }
  }
  if (!lx.done()) lx.fail("trailing characters");
  return orders;
}

}  // namespace detail

/// Parses `Z4xZ3^2`, `[4,3,3]`, `1`, `[]`, or the canonical JSON object
/// `{"2":[2],"3":[1,1]}` and returns the canonical group.
inline AbelianGroup parse_group(std::string_view text) {
  if (!text.empty() && text.front() == '{') return group_from_json_text(text);
  detail::GroupLexer lx(text);
  if (lx.done()) lx.fail("empty group expression");
  if (lx.peek() == '[') return canonicalize(detail::parse_list_form(lx));
  return canonicalize(detail::parse_product_form(lx));
}

/// Product notation with equal cyclic factors collapsed, primes ascending and
/// exponents descending: `Z4xZ3^2`. The trivial group is `1`.
inline std::string format_group(const AbelianGroup& g) {
  if (g.trivial()) return "1";
  std::string out;
  for (const auto& c : g.components()) {
    const auto& parts = c.exponents.parts();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (!out.empty()) out += 'x';
      out += 'Z' + to_decimal(big_pow(c.prime, static_cast<std::uint64_t>(parts[i])));
      if (j - i > 1) out += '^' + std::to_string(j - i);
      i = j;
    }
  }
  return out;
}

}  // namespace psiprime
