#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "bigint.hpp"
#include "factored.hpp"
#include "groups.hpp"

namespace psiprime {

/// The piecewise weight f_α(i) attached to Z_{p^α_1} x ... x Z_{p^α_k}
/// (α ascending):
///
///   f(i) = p^{(k-1)i}                       for 0 <= i <= α_1
///        = p^{(k-2)i + α_1}                 for α_1 <= i <= α_2
///          ...
///        = p^{α_1 + ... + α_{k-1}}          for i >= α_{k-1}
///
/// Adjacent branches agree at each breakpoint. For k = 1 the last branch is
/// an empty sum, so f is identically 1.
inline BigInt f_eval(std::span<const int> alphas, std::uint64_t p, std::uint64_t i) {
  if (alphas.empty()) throw DomainError("f_eval needs at least one exponent");
  const std::size_t k = alphas.size();
  // j = number of α_1..α_{k-1} that are <= i, i.e. the branch index.
  std::size_t j = 0;
  std::uint64_t prefix = 0;
  while (j + 1 < k && static_cast<std::uint64_t>(alphas[j]) <= i) {
    prefix += static_cast<std::uint64_t>(alphas[j]);
    ++j;
  }
  const std::uint64_t exponent = static_cast<std::uint64_t>(k - 1 - j) * i + prefix;
  return big_pow(p, exponent);
}

/// log_p ψ′(G) = α_k·p^n − Σ_{i=0}^{α_k−1} p^i f(i).
inline BigInt psi_prime_pgroup_exponent(const PGroupType& g) {
  if (g.alphas().empty()) return 0;
  const std::uint64_t p = g.p();
  const auto top = static_cast<std::uint64_t>(g.exponent());
  BigInt e = BigInt(static_cast<unsigned long>(top)) * g.order();
  BigInt pi = 1;
  for (std::uint64_t i = 0; i < top; ++i) {
    e -= pi * f_eval(g.alphas(), p, i);
    pi *= static_cast<unsigned long>(p);
  }
  return e;
}

inline FactoredInteger psi_prime_pgroup(const PGroupType& g) {
  return FactoredInteger::prime_power(g.p(), psi_prime_pgroup_exponent(g));
}

namespace detail {

inline BigInt checked_exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw ConsistencyError(std::string(what) + ": closed form left a non-zero remainder");
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

/// ψ′(Z_{p^α}) = p^{(α p^{α+1} − (α+1) p^α + 1)/(p−1)}.
inline FactoredInteger psi_prime_cyclic_closed_form(std::uint64_t p, int alpha) {
  require_prime(p);
  if (alpha < 1) throw DomainError("cyclic closed form needs alpha >= 1");
  const auto a = static_cast<unsigned long>(alpha);
  const BigInt pa = big_pow(p, a);
  const BigInt num = BigInt(a) * pa * static_cast<unsigned long>(p) - BigInt(a + 1) * pa + 1;
  return FactoredInteger::prime_power(p, detail::checked_exact_div(num, BigInt(static_cast<unsigned long>(p - 1)), "cyclic"));
}

/// ψ′(Z_{p^α} x Z_{p^β}) = p^{(β p^{α+β+2} − p^{α+β+1} − (β+1) p^{α+β} + p^{2α+1} + 1)/(p²−1)}.
inline FactoredInteger psi_prime_rank2_closed_form(std::uint64_t p, int alpha, int beta) {
  require_prime(p);
  if (alpha < 1 || beta < alpha) throw DomainError("rank-two closed form needs 1 <= alpha <= beta");
  const auto a = static_cast<unsigned long>(alpha);
  const auto b = static_cast<unsigned long>(beta);
  const BigInt pab = big_pow(p, a + b);
  const BigInt bp(static_cast<unsigned long>(p));
  const BigInt num = BigInt(b) * pab * bp * bp - pab * bp - BigInt(b + 1) * pab + big_pow(p, 2 * a + 1) + 1;
  return FactoredInteger::prime_power(p, detail::checked_exact_div(num, bp * bp - 1, "rank-two"));
}

/// One factor of a coprime direct product: its ψ′ and its order.
struct CoprimePart {
  FactoredInteger psi_prime;
  BigInt order;
};

/// ψ′(G_1 x ... x G_k) = Π ψ′(G_i)^{n_i} with n_i = Π_{j≠i} |G_j|, for
/// pairwise coprime |G_i|.
inline FactoredInteger combine_coprime(std::span<const CoprimePart> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].order < 1) throw DomainError("group orders must be positive");
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (gcd(parts[i].order, parts[j].order) != 1)
        throw DomainError("orders " + to_decimal(parts[i].order) + " and " + to_decimal(parts[j].order) +
                          " are not coprime");
  }
  FactoredInteger out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BigInt complement = 1;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) complement *= parts[j].order;
    out *= parts[i].psi_prime.pow(complement);
  }
  return out;
}

/// Product of element orders, via the Sylow decomposition.
inline FactoredInteger psi_prime(const AbelianGroup& g) {
  std::vector<CoprimePart> parts;
  for (const auto& t : g.sylow_types()) parts.push_back({psi_prime_pgroup(t), t.order()});
  return combine_coprime(parts);
}

/// Sum of element orders.
inline BigInt psi_sum(const AbelianGroup& g) {
  BigInt s = 0;
  const auto spectrum = order_spectrum(g);
  for (const auto& [d, m] : spectrum.entries()) s += big_from_u64(d) * m;
  return s;
}

/// Π_d d^{m_d}, factored. Independent of the closed formulas.
inline FactoredInteger psi_prime_from_spectrum(const OrderSpectrum& s) {
  FactoredInteger::Map acc;
  for (const auto& [d, m] : s.entries()) {
    if (d == 1) continue;
    for (auto [p, e] : factorize(d)) acc[p] += m * static_cast<unsigned long>(e);
  }
  return FactoredInteger(std::move(acc));
}

}  // namespace psiprime
