#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "groups.hpp"

namespace psiprime {

/// Default cap on |G| for ψ_k and the order polynomial.
inline constexpr std::uint64_t kDefaultSymmetricCap = 512;

/// Dense ascending-power coefficients of P_G = Π_{x∈G} (X − o(x)).
struct OrderPolynomial {
  std::vector<BigInt> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const OrderPolynomial&, const OrderPolynomial&) = default;
};

namespace detail {

inline std::size_t checked_symmetric_size(const OrderSpectrum& s, std::uint64_t cap) {
  const BigInt n = s.total();
  if (n > big_from_u64(cap))
    throw SizeError("group order " + to_decimal(n) + " exceeds the symmetric-function cap " + std::to_string(cap));
  return n.get_ui();
}

/// Coefficients of Π_d (1 + d·X)^{m_d}; entry k is e_k of the order multiset.
inline std::vector<BigInt> elementary_symmetric(const OrderSpectrum& s, std::uint64_t cap) {
  const std::size_t n = checked_symmetric_size(s, cap);
  std::vector<BigInt> acc(n + 1, 0);
  acc[0] = 1;
  std::size_t deg = 0;
  for (const auto& [d, mult] : s.entries()) {
    const std::size_t m = mult.get_ui();
    // (1 + dX)^m = Σ_j C(m, j) d^j X^j
    std::vector<BigInt> factor(m + 1);
    BigInt binom = 1, dpow = 1;
    const BigInt dd = big_from_u64(d);
    for (std::size_t j = 0; j <= m; ++j) {
      factor[j] = binom * dpow;
      binom = binom * static_cast<unsigned long>(m - j) / static_cast<unsigned long>(j + 1);
      dpow *= dd;
    }
    std::vector<BigInt> next(n + 1, 0);
    for (std::size_t a = 0; a <= deg; ++a) {
      if (sgn(acc[a]) == 0) continue;
      for (std::size_t j = 0; j <= m; ++j) next[a + j] += acc[a] * factor[j];
    }
    acc = std::move(next);
    deg += m;
  }
  return acc;
}

}  // namespace detail

/// ψ_1, ..., ψ_n for n = |G|: elementary symmetric functions of the element orders.
inline std::vector<BigInt> psi_all(const AbelianGroup& g, std::uint64_t cap = kDefaultSymmetricCap) {
  auto e = detail::elementary_symmetric(order_spectrum(g), cap);
  return {e.begin() + 1, e.end()};
}

/// ψ_k alone; 1 <= k <= |G|.
inline BigInt psi_k(const AbelianGroup& g, std::uint64_t k, std::uint64_t cap = kDefaultSymmetricCap) {
  auto all = psi_all(g, cap);
  if (k < 1 || k > all.size())
    throw DomainError("k must lie in 1.." + std::to_string(all.size()) + ", got " + std::to_string(k));
  return all[k - 1];
}

/// c_{n−k} = (−1)^k ψ_k, c_n = 1.
inline OrderPolynomial order_polynomial(const AbelianGroup& g, std::uint64_t cap = kDefaultSymmetricCap) {
  auto e = detail::elementary_symmetric(order_spectrum(g), cap);
  const std::size_t n = e.size() - 1;
  OrderPolynomial poly;
  poly.coeffs.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) poly.coeffs[n - k] = (k % 2 == 0) ? e[k] : BigInt(-e[k]);
  return poly;
}

}  // namespace psiprime
