#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "partitions.hpp"

namespace psiprime {

/// Z_{p^α_1} x ... x Z_{p^α_k} with 1 <= α_1 <= ... <= α_k.
class PGroupType {
 public:
  PGroupType(std::uint64_t p, std::vector<int> alphas, PrimeCheck check = PrimeCheck::verify)
      : p_(p), alphas_(std::move(alphas)) {
    require_prime(p_, check);
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
      if (alphas_[i] < 1) throw DomainError("p-group exponents must be positive");
      if (i > 0 && alphas_[i - 1] > alphas_[i]) throw DomainError("p-group exponents must be ascending");
    }
  }

  std::uint64_t p() const noexcept { return p_; }
  const std::vector<int>& alphas() const noexcept { return alphas_; }
  std::size_t rank() const noexcept { return alphas_.size(); }
  int n() const noexcept { return std::accumulate(alphas_.begin(), alphas_.end(), 0); }
  int exponent() const noexcept { return alphas_.empty() ? 0 : alphas_.back(); }
  BigInt order() const { return big_pow(p_, static_cast<std::uint64_t>(n())); }

  friend bool operator==(const PGroupType&, const PGroupType&) = default;

 private:
  std::uint64_t p_;
  std::vector<int> alphas_;
};

inline PGroupType partition_to_group_type(const Partition& q, std::uint64_t p,
                                          PrimeCheck check = PrimeCheck::verify) {
  std::vector<int> alphas(q.parts().rbegin(), q.parts().rend());
  return PGroupType(p, std::move(alphas), check);
}

inline Partition group_type_to_partition(const PGroupType& g) {
  return Partition(std::vector<int>(g.alphas().rbegin(), g.alphas().rend()));
}

/// Sylow component of an abelian group: the prime and its exponent partition.
struct PrimaryComponent {
  std::uint64_t prime;
  Partition exponents;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;
};

/// Finite abelian group in primary decomposition. Components are sorted by
/// strictly increasing prime and never empty; the trivial group has none.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  explicit AbelianGroup(std::vector<PrimaryComponent> components, PrimeCheck check = PrimeCheck::verify)
      : components_(std::move(components)) {
    for (std::size_t i = 0; i < components_.size(); ++i) {
      require_prime(components_[i].prime, check);
      if (components_[i].exponents.empty()) throw DomainError("empty primary component");
      if (i > 0 && components_[i - 1].prime >= components_[i].prime)
        throw DomainError("primary components must have strictly increasing primes");
    }
  }

  const std::vector<PrimaryComponent>& components() const noexcept { return components_; }
  bool trivial() const noexcept { return components_.empty(); }

  BigInt order() const {
    BigInt m = 1;
    for (const auto& c : components_) m *= big_pow(c.prime, static_cast<std::uint64_t>(c.exponents.n()));
    return m;
  }

  std::vector<PGroupType> sylow_types() const {
    std::vector<PGroupType> out;
    for (const auto& c : components_) out.push_back(partition_to_group_type(c.exponents, c.prime, PrimeCheck::trust));
    return out;
  }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<PrimaryComponent> components_;
};

inline AbelianGroup make_group(const PGroupType& g) {
  if (g.alphas().empty()) return {};
  return AbelianGroup({{g.p(), group_type_to_partition(g)}}, PrimeCheck::trust);
}

/// Canonical form of Z_{c_1} x ... x Z_{c_r}; isomorphic inputs give equal outputs.
inline AbelianGroup canonicalize(const std::vector<std::uint64_t>& cyclic_orders) {
  std::map<std::uint64_t, std::vector<int>> by_prime;
  for (auto c : cyclic_orders) {
    if (c < 2) throw DomainError("cyclic factor order must be at least 2, got " + std::to_string(c));
    for (auto [p, e] : factorize(c)) by_prime[p].push_back(e);
  }
  std::vector<PrimaryComponent> comps;
  for (auto& [p, es] : by_prime) {
    std::sort(es.begin(), es.end(), std::greater<>());
    comps.push_back({p, Partition(std::move(es))});
  }
  return AbelianGroup(std::move(comps), PrimeCheck::trust);
}

/// Largest order accepted by enumerate_abelian_groups.
inline constexpr std::uint64_t kMaxEnumerationOrder = kFactorizationCap;

/// Every isomorphism type of abelian group of order m. Order: per-prime
/// partitions ascending in lex order, the smallest prime varying slowest.
inline std::vector<AbelianGroup> enumerate_abelian_groups(std::uint64_t m) {
  if (m < 1) throw DomainError("group order must be at least 1");
  if (m > kMaxEnumerationOrder)
    throw SizeError("enumerate_abelian_groups: order " + std::to_string(m) + " exceeds cap " +
                    std::to_string(kMaxEnumerationOrder));
  const auto factors = factorize(m);
  std::vector<std::vector<Partition>> choices;
  for (auto [p, e] : factors) choices.push_back(partitions_of(e));

  std::vector<AbelianGroup> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<PrimaryComponent> comps;
    for (std::size_t i = 0; i < choices.size(); ++i) comps.push_back({factors[i].first, choices[i][idx[i]]});
    out.emplace_back(std::move(comps), PrimeCheck::trust);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

/// Element order -> number of elements of exactly that order.
class OrderSpectrum {
 public:
  using Map = std::map<std::uint64_t, BigInt>;

  OrderSpectrum() = default;
  explicit OrderSpectrum(Map entries) : entries_(std::move(entries)) {
    for (auto it = entries_.begin(); it != entries_.end();) {
      if (sgn(it->second) < 0) throw DomainError("negative multiplicity");
      if (it->first == 0) throw DomainError("element order 0");
      it = sgn(it->second) == 0 ? entries_.erase(it) : std::next(it);
    }
  }

  const Map& entries() const& noexcept { return entries_; }
  const Map& entries() const&& = delete;

  BigInt multiplicity(std::uint64_t d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& [d, m] : entries_) s += m;
    return s;
  }

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  Map entries_;
};

namespace detail {

/// {p^i : count of elements of order exactly p^i} for one Sylow component.
inline std::vector<std::pair<std::uint64_t, BigInt>> pgroup_spectrum(std::uint64_t p, const Partition& q) {
  const int top = q.empty() ? 0 : q.parts().front();
  if (!checked_pow(p, static_cast<std::uint64_t>(top)))
    throw SizeError("element orders exceed 64 bits for p = " + std::to_string(p));
  std::vector<std::pair<std::uint64_t, BigInt>> out;
  BigInt prev = 0;
  std::uint64_t pi = 1;
  for (int i = 0; i <= top; ++i) {
    // #{x : o(x) | p^i} = p^{sum_j min(alpha_j, i)}
    std::uint64_t e = 0;
    for (int a : q.parts()) e += static_cast<std::uint64_t>(std::min(a, i));
    BigInt below = big_pow(p, e);
    out.emplace_back(pi, below - prev);
    prev = std::move(below);
    if (i < top) pi *= p;
  }
  return out;
}

}  // namespace detail

/// Counting formula per Sylow component, combined multiplicatively across
/// primes. Throws SizeError if the group exponent does not fit 64 bits.
inline OrderSpectrum order_spectrum(const AbelianGroup& g) {
  OrderSpectrum::Map acc{{1, BigInt(1)}};
  for (const auto& c : g.components()) {
    const auto local = detail::pgroup_spectrum(c.prime, c.exponents);
    OrderSpectrum::Map next;
    for (const auto& [d1, m1] : acc)
      for (const auto& [d2, m2] : local) {
        auto d = checked_mul(d1, d2);
        if (!d) throw SizeError("element orders exceed 64 bits");
        next[*d] += m1 * m2;
      }
    acc = std::move(next);
  }
  return OrderSpectrum(std::move(acc));
}

/// Literal enumeration cap for brute_force_spectrum.
inline constexpr std::uint64_t kBruteForceCap = 100'000;

/// Walks every element as a residue tuple over the cyclic factors Z_{p^α}
/// and tallies lcm of the component orders p^α / gcd(r, p^α).
inline OrderSpectrum brute_force_spectrum(const AbelianGroup& g) {
  const BigInt order = g.order();
  if (order > big_from_u64(kBruteForceCap))
    throw SizeError("brute_force_spectrum: group order " + to_decimal(order) + " exceeds cap " +
                    std::to_string(kBruteForceCap));
  std::vector<std::uint64_t> moduli;
  for (const auto& c : g.components())
    for (int a : c.exponents.parts()) moduli.push_back(*checked_pow(c.prime, static_cast<std::uint64_t>(a)));

  std::map<std::uint64_t, std::uint64_t> tally;
  std::vector<std::uint64_t> residue(moduli.size(), 0);
  for (;;) {
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < moduli.size(); ++i)
      o = std::lcm(o, moduli[i] / std::gcd(residue[i], moduli[i]));
    ++tally[o];
    std::size_t i = 0;
    for (; i < moduli.size(); ++i) {
      if (++residue[i] < moduli[i]) break;
      residue[i] = 0;
    }
    if (i == moduli.size()) break;
  }
  OrderSpectrum::Map entries;
  for (auto [d, m] : tally) entries[d] = big_from_u64(m);
  return OrderSpectrum(std::move(entries));
}

}  // namespace psiprime
