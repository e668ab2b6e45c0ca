#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <mpfr.h>

#include "bigint.hpp"
#include "errors.hpp"

namespace psiprime {

/// A positive integer held as prime -> exponent. Zero exponents are never
/// stored; the empty map is 1.
class FactoredInteger {
 public:
  using Map = std::map<std::uint64_t, BigInt>;

  FactoredInteger() = default;

  explicit FactoredInteger(Map factors) : factors_(std::move(factors)) {
    for (auto it = factors_.begin(); it != factors_.end();) {
      if (sgn(it->second) < 0) throw DomainError("negative exponent in factored integer");
      if (it->first < 2) throw DomainError("factor base must be at least 2");
      it = sgn(it->second) == 0 ? factors_.erase(it) : std::next(it);
    }
  }

  static FactoredInteger prime_power(std::uint64_t p, BigInt e) { return FactoredInteger(Map{{p, std::move(e)}}); }

  const Map& factors() const& noexcept { return factors_; }
  const Map& factors() const&& = delete;
  bool is_one() const noexcept { return factors_.empty(); }

  BigInt exponent_of(std::uint64_t p) const {
    auto it = factors_.find(p);
    return it == factors_.end() ? BigInt(0) : it->second;
  }

  FactoredInteger& operator*=(const FactoredInteger& o) {
    for (const auto& [p, e] : o.factors_) factors_[p] += e;
    return *this;
  }

  friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }

  /// this^k
  FactoredInteger pow(const BigInt& k) const {
    if (sgn(k) < 0) throw DomainError("negative power of a factored integer");
    Map out;
    if (sgn(k) == 0) return {};
    for (const auto& [p, e] : factors_) out.emplace(p, e * k);
    return FactoredInteger(std::move(out));
  }

  /// `2^45*3^32`, or `1`. Injective, so usable as a hash key.
  std::string key() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors_) {
      if (!s.empty()) s += '*';
      s += std::to_string(p) + '^' + to_decimal(e);
    }
    return s;
  }

  /// Upper estimate of the decimal digit count.
  double approx_digits() const {
    double d = 0;
    for (const auto& [p, e] : factors_) d += e.get_d() * std::log10(static_cast<double>(p));
    return d + 1;
  }

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  Map factors_;
};

/// The plain integer value. Refuses with SizeError when the result could
/// exceed `digit_limit` decimal digits.
inline BigInt materialize(const FactoredInteger& f, std::uint64_t digit_limit) {
  if (f.approx_digits() > static_cast<double>(digit_limit) + 1)
    throw SizeError("materializing would produce about " + std::to_string(static_cast<std::uint64_t>(f.approx_digits())) +
                    " digits, over the limit of " + std::to_string(digit_limit));
  BigInt r = 1;
  for (const auto& [p, e] : f.factors()) {
    if (!e.fits_ulong_p()) throw SizeError("exponent too large to materialize");
    r *= big_pow(p, e.get_ui());
  }
  return r;
}

namespace detail {

/// Materialization threshold for exact comparison after cancellation.
inline constexpr double kExactCompareBits = 8192;

inline double approx_bits(const FactoredInteger& f) {
  double b = 0;
  for (const auto& [p, e] : f.factors()) b += e.get_d() * std::log2(static_cast<double>(p));
  return b;
}

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpfrValue() { mpfr_clear(v_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_ptr get() noexcept { return v_; }

 private:
  mpfr_t v_;
};

/// Σ e·ln p rounded in direction `rnd`. All terms are positive, so rounding
/// every step the same way yields a certified bound.
inline void log_bound(const FactoredInteger& f, mpfr_prec_t prec, mpfr_rnd_t rnd, mpfr_ptr out) {
  MpfrValue term(prec);
  mpfr_set_zero(out, 1);
  for (const auto& [p, e] : f.factors()) {
    mpfr_set_ui(term.get(), static_cast<unsigned long>(p), rnd);
    mpfr_log(term.get(), term.get(), rnd);
    mpfr_mul_z(term.get(), term.get(), e.get_mpz_t(), rnd);
    mpfr_add(out, out, term.get(), rnd);
  }
}

}  // namespace detail

/// Exact ordering of two factored integers.
inline std::strong_ordering factored_compare(const FactoredInteger& a, const FactoredInteger& b) {
  if (a == b) return std::strong_ordering::equal;

  // Divide out the common part so the supports become disjoint.
  FactoredInteger::Map x, y;
  for (const auto& [p, e] : a.factors()) {
    BigInt d = e - b.exponent_of(p);
    if (sgn(d) > 0) x.emplace(p, d);
  }
  for (const auto& [p, e] : b.factors()) {
    BigInt d = e - a.exponent_of(p);
    if (sgn(d) > 0) y.emplace(p, d);
  }
  // With disjoint supports, an empty side is 1 and the other side exceeds it.
  if (x.empty()) return std::strong_ordering::less;
  if (y.empty()) return std::strong_ordering::greater;

  const FactoredInteger fx(std::move(x)), fy(std::move(y));
  const double bits = std::max(detail::approx_bits(fx), detail::approx_bits(fy));
  if (bits <= detail::kExactCompareBits) {
    const auto limit = static_cast<std::uint64_t>(detail::kExactCompareBits);
    return cmp(materialize(fx, limit), materialize(fy, limit)) <=> 0;
  }

  mpfr_prec_t prec = 128 + static_cast<mpfr_prec_t>(std::log2(bits + 2));
  for (;; prec *= 2) {
    detail::MpfrValue xlo(prec), xhi(prec), ylo(prec), yhi(prec);
    detail::log_bound(fx, prec, MPFR_RNDD, xlo.get());
    detail::log_bound(fx, prec, MPFR_RNDU, xhi.get());
    detail::log_bound(fy, prec, MPFR_RNDD, ylo.get());
    detail::log_bound(fy, prec, MPFR_RNDU, yhi.get());
    if (mpfr_less_p(xhi.get(), ylo.get())) return std::strong_ordering::less;
    if (mpfr_less_p(yhi.get(), xlo.get())) return std::strong_ordering::greater;
    if (prec > (mpfr_prec_t{1} << 24))
      throw ConsistencyError("factored_compare failed to separate distinct values");
  }
}

}  // namespace psiprime
