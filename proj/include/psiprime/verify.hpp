#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"
#include "factored.hpp"
#include "groups.hpp"
#include "parallel.hpp"
#include "partitions.hpp"
#include "psi.hpp"
#include "symmetric.hpp"

namespace psiprime {

// ---------------------------------------------------------------------------
// Monotonicity of ψ′ over P_n

/// Largest n accepted by check_theorem_c (p(40) = 37338 rows).
inline constexpr int kMaxTheoremCN = 40;

/// Pairwise checking is quadratic in p(n); above this many rows it is refused.
inline constexpr std::size_t kMaxPairwiseRows = 5000;

struct MonotonicityRow {
  Partition partition;
  BigInt exponent;  // log_p ψ′
};

struct MonotonicityReport {
  std::uint64_t p = 0;
  int n = 0;
  std::vector<MonotonicityRow> rows;                          // ascending lex order
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // adjacent rows failing strict increase
  std::size_t pairs_checked = 0;                              // 0 unless the full biconditional was requested
  std::vector<std::pair<std::size_t, std::size_t>> pair_mismatches;

  bool holds() const noexcept { return violations.empty() && pair_mismatches.empty(); }
};

enum class BiconditionalCheck { adjacent_only, all_pairs };

inline MonotonicityReport check_theorem_c(std::uint64_t p, int n,
                                          BiconditionalCheck mode = BiconditionalCheck::adjacent_only) {
  require_prime(p);
  if (n < 1) throw DomainError("check_theorem_c needs n >= 1");
  if (n > kMaxTheoremCN)
    throw SizeError("check_theorem_c: n = " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxTheoremCN));

  MonotonicityReport r;
  r.p = p;
  r.n = n;
  for_each_partition(n, [&](Partition q) {
    BigInt e = psi_prime_pgroup_exponent(partition_to_group_type(q, p, PrimeCheck::trust));
    r.rows.push_back({std::move(q), std::move(e)});
  });
  for (std::size_t i = 0; i + 1 < r.rows.size(); ++i)
    if (!(r.rows[i].exponent < r.rows[i + 1].exponent)) r.violations.emplace_back(i, i + 1);

  if (mode == BiconditionalCheck::all_pairs) {
    if (r.rows.size() > kMaxPairwiseRows)
      throw SizeError("all-pairs check over " + std::to_string(r.rows.size()) + " partitions exceeds cap " +
                      std::to_string(kMaxPairwiseRows));
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      for (std::size_t j = i + 1; j < r.rows.size(); ++j) {
        const auto by_value = cmp(r.rows[i].exponent, r.rows[j].exponent) <=> 0;
        const auto by_lex = lex_compare(r.rows[i].partition, r.rows[j].partition);
        ++r.pairs_checked;
        if (by_value != by_lex) r.pair_mismatches.emplace_back(i, j);
      }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Injectivity of ψ′ at fixed order

struct GroupValue {
  AbelianGroup group;
  FactoredInteger psi_prime;
};

struct InjectivityReport {
  std::uint64_t m = 0;
  std::vector<GroupValue> entries;                    // enumeration order
  std::vector<std::vector<std::size_t>> duplicate_sets;  // indices sharing a ψ′ value
  /// For prime-power m: whether ψ′ strictly increases along enumeration
  /// (ascending lex) order.
  std::optional<bool> lex_monotone;

  bool holds() const noexcept { return duplicate_sets.empty() && lex_monotone.value_or(true); }
};

inline InjectivityReport check_injectivity(std::uint64_t m) {
  InjectivityReport r;
  r.m = m;
  for (auto& g : enumerate_abelian_groups(m)) {
    auto v = psi_prime(g);
    r.entries.push_back({std::move(g), std::move(v)});
  }
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < r.entries.size(); ++i) buckets[r.entries[i].psi_prime.key()].push_back(i);
  for (auto& [key, idx] : buckets)
    if (idx.size() > 1) r.duplicate_sets.push_back(std::move(idx));
  std::sort(r.duplicate_sets.begin(), r.duplicate_sets.end());

  if (m > 1 && factorize(m).size() == 1) {
    bool mono = true;
    for (std::size_t i = 0; i + 1 < r.entries.size(); ++i)
      mono = mono && factored_compare(r.entries[i].psi_prime, r.entries[i + 1].psi_prime) < 0;
    r.lex_monotone = mono;
  }
  return r;
}

/// Largest max_order accepted by the order sweeps.
inline constexpr std::uint64_t kMaxSweepOrder = 1'000'000;

struct InjectivitySweep {
  std::uint64_t max_order = 0;
  std::uint64_t groups_checked = 0;
  std::vector<InjectivityReport> failures;  // ascending m

  bool holds() const noexcept { return failures.empty(); }
};

inline InjectivitySweep check_injectivity_up_to(std::uint64_t max_order, unsigned jobs = 1) {
  if (max_order > kMaxSweepOrder)
    throw SizeError("injectivity sweep: max order " + std::to_string(max_order) + " exceeds cap " +
                    std::to_string(kMaxSweepOrder));
  auto reports = parallel_map<InjectivityReport>(max_order, jobs, [](std::size_t i) { return check_injectivity(i + 1); });
  InjectivitySweep s;
  s.max_order = max_order;
  for (auto& r : reports) {
    s.groups_checked += r.entries.size();
    if (!r.holds()) s.failures.push_back(std::move(r));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Coincidences of ψ′ across different orders

/// Largest max_order accepted by find_cross_order_collisions.
inline constexpr std::uint64_t kMaxCollisionOrder = 100'000;

struct CollisionPair {
  AbelianGroup a;
  AbelianGroup b;
  FactoredInteger value;
};

struct CollisionReport {
  std::uint64_t max_order = 0;
  std::vector<CollisionPair> pairs;  // sorted by (order a, index a, order b, index b)
};

inline CollisionReport find_cross_order_collisions(std::uint64_t max_order, unsigned jobs = 1) {
  if (max_order > kMaxCollisionOrder)
    throw SizeError("collision scan: max order " + std::to_string(max_order) + " exceeds cap " +
                    std::to_string(kMaxCollisionOrder));
  auto per_order = parallel_map<std::vector<GroupValue>>(max_order, jobs, [](std::size_t i) {
    std::vector<GroupValue> out;
    for (auto& g : enumerate_abelian_groups(i + 1)) {
      auto v = psi_prime(g);
      out.push_back({std::move(g), std::move(v)});
    }
    return out;
  });
  std::vector<GroupValue> all;
  for (auto& v : per_order)
    for (auto& gv : v) all.push_back(std::move(gv));

  std::unordered_map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < all.size(); ++i) buckets[all[i].psi_prime.key()].push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> idx_pairs;
  for (const auto& [key, idx] : buckets)
    for (std::size_t x = 0; x < idx.size(); ++x)
      for (std::size_t y = x + 1; y < idx.size(); ++y) idx_pairs.emplace_back(idx[x], idx[y]);
  std::sort(idx_pairs.begin(), idx_pairs.end());

  CollisionReport r;
  r.max_order = max_order;
  for (auto [i, j] : idx_pairs) r.pairs.push_back({all[i].group, all[j].group, all[i].psi_prime});
  return r;
}

// ---------------------------------------------------------------------------
// ψ_k as a complete invariant at fixed order

struct Coincidence {
  AbelianGroup a;
  AbelianGroup b;
  std::uint64_t k = 0;
  BigInt value;
};

struct ConjectureFReport {
  std::uint64_t m = 0;
  std::uint64_t group_count = 0;
  std::uint64_t pair_count = 0;
  std::vector<Coincidence> coincidences;

  bool holds() const noexcept { return coincidences.empty(); }
};

inline ConjectureFReport check_conjecture_f(std::uint64_t m, std::uint64_t cap = kDefaultSymmetricCap) {
  if (m > cap)
    throw SizeError("conjecture check: order " + std::to_string(m) + " exceeds the symmetric-function cap " +
                    std::to_string(cap));
  const auto groups = enumerate_abelian_groups(m);
  std::vector<std::vector<BigInt>> values;
  for (const auto& g : groups) values.push_back(psi_all(g, cap));

  ConjectureFReport r;
  r.m = m;
  r.group_count = groups.size();
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      ++r.pair_count;
      for (std::size_t k = 0; k < m; ++k)
        if (values[i][k] == values[j][k]) r.coincidences.push_back({groups[i], groups[j], k + 1, values[i][k]});
    }
  return r;
}

struct ConjectureFSweep {
  std::uint64_t max_order = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t values_compared = 0;
  std::vector<ConjectureFReport> findings;  // orders with at least one coincidence

  bool holds() const noexcept { return findings.empty(); }
};

inline ConjectureFSweep check_conjecture_f_up_to(std::uint64_t max_order, unsigned jobs = 1,
                                                 std::uint64_t cap = kDefaultSymmetricCap) {
  if (max_order > cap)
    throw SizeError("conjecture sweep: max order " + std::to_string(max_order) +
                    " exceeds the symmetric-function cap " + std::to_string(cap));
  auto reports = parallel_map<ConjectureFReport>(max_order, jobs,
                                                 [cap](std::size_t i) { return check_conjecture_f(i + 1, cap); });
  ConjectureFSweep s;
  s.max_order = max_order;
  for (auto& r : reports) {
    s.pairs_checked += r.pair_count;
    s.values_compared += r.pair_count * r.m;
    if (!r.holds()) s.findings.push_back(std::move(r));
  }
  return s;
}

// ---------------------------------------------------------------------------
// Formula-versus-oracle cross-check for one group

struct OracleCheck {
  std::string name;
  std::string formula;  // rendered value from the closed formulas
  std::string oracle;   // rendered value from the independent route
  bool agrees = false;
};

struct OracleReport {
  AbelianGroup group;
  std::vector<OracleCheck> checks;
  bool brute_force_skipped = false;  // order above kBruteForceCap

  bool holds() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.agrees; });
  }
};

namespace detail {

inline std::string render_spectrum(const OrderSpectrum& s) {
  std::string out;
  for (const auto& [d, m] : s.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(d) + ':' + to_decimal(m);
  }
  return out;
}

}  // namespace detail

inline OracleReport oracle_check(const AbelianGroup& g) {
  OracleReport r;
  r.group = g;
  auto add = [&](std::string name, std::string formula, std::string oracle) {
    const bool ok = formula == oracle;
    r.checks.push_back({std::move(name), std::move(formula), std::move(oracle), ok});
  };

  const auto counted = order_spectrum(g);
  const auto formula_value = psi_prime(g);
  add("psi' (Sylow formula vs spectrum product)", formula_value.key(), psi_prime_from_spectrum(counted).key());

  if (g.order() <= big_from_u64(kBruteForceCap)) {
    const auto brute = brute_force_spectrum(g);
    add("spectrum (counting vs enumeration)", detail::render_spectrum(counted), detail::render_spectrum(brute));
    BigInt brute_sum = 0;
    for (const auto& [d, m] : brute.entries()) brute_sum += big_from_u64(d) * m;
    add("psi (spectrum vs enumeration)", to_decimal(psi_sum(g)), to_decimal(brute_sum));
  } else {
    r.brute_force_skipped = true;
  }

  for (const auto& t : g.sylow_types()) {
    const auto p = std::to_string(t.p());
    const auto pgroup = psi_prime_pgroup(t);
    if (t.rank() == 1)
      add("psi' cyclic closed form, p=" + p, pgroup.key(), psi_prime_cyclic_closed_form(t.p(), t.alphas()[0]).key());
    if (t.rank() == 2)
      add("psi' rank-two closed form, p=" + p, pgroup.key(),
          psi_prime_rank2_closed_form(t.p(), t.alphas()[0], t.alphas()[1]).key());
  }
  return r;
}

}  // namespace psiprime
