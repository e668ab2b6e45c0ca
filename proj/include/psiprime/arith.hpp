#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace psiprime {

/// Inputs above this bound are not primality-tested unless the caller
/// vouches for them with PrimeCheck::trust.
inline constexpr std::uint64_t kPrimeTestLimit = std::uint64_t{1} << 31;

/// Largest integer `factorize` accepts (trial division up to 10^6).
inline constexpr std::uint64_t kFactorizationCap = 1'000'000'000'000ULL;

enum class PrimeCheck { verify, trust };

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Throws DomainError unless `p` is prime. Above kPrimeTestLimit the check is
/// skipped when `mode == PrimeCheck::trust` and refused otherwise.
inline void require_prime(std::uint64_t p, PrimeCheck mode = PrimeCheck::verify) {
  if (p > kPrimeTestLimit) {
    if (mode == PrimeCheck::trust) return;
    throw DomainError("cannot verify primality of " + std::to_string(p) +
                      " (above 2^31); pass PrimeCheck::trust to vouch for it");
  }
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

/// Prime factorization by trial division, primes ascending.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("cannot factorize 0");
  if (n > kFactorizationCap)
    throw SizeError("factorization cap exceeded: " + std::to_string(n) + " > " +
                    std::to_string(kFactorizationCap));
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

/// a*b, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

}  // namespace psiprime
