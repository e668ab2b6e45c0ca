#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "psiprime/psi.hpp"

using namespace psiprime;

namespace {

FactoredInteger F(std::map<std::uint64_t, long> m) {
  FactoredInteger::Map out;
  for (auto [p, e] : m) out[p] = BigInt(e);
  return FactoredInteger(out);
}

std::vector<int> V(std::initializer_list<int> v) { return v; }

/// log_p of the literal product of element orders of a p-group.
std::uint64_t literal_exponent(std::uint64_t p, const std::vector<int>& alphas) {
  std::vector<std::uint64_t> cyclic;
  for (int a : alphas) cyclic.push_back(*checked_pow(p, static_cast<std::uint64_t>(a)));
  std::uint64_t e = 0;
  for (auto o : oracle::element_orders_by_addition(cyclic)) e += oracle::valuation(o, p);
  return e;
}

/// Σ_{i<α_k} p^i f(i) must equal α_k p^n − log_p ψ′.
void expect_weight_identity(std::uint64_t p, const std::vector<int>& alphas) {
  const int n = std::accumulate(alphas.begin(), alphas.end(), 0);
  BigInt lhs = 0;
  for (int i = 0; i < alphas.back(); ++i) lhs += big_pow(p, i) * f_eval(alphas, p, i);
  const BigInt rhs = BigInt(alphas.back()) * big_pow(p, n) - big_from_u64(literal_exponent(p, alphas));
  EXPECT_EQ(lhs, rhs);
}

}  // namespace

TEST(FEval, Examples) {
  EXPECT_EQ(f_eval(V({1, 2}), 2, 0), 1);
  EXPECT_EQ(f_eval(V({1, 2}), 2, 1), 2);
  EXPECT_EQ(f_eval(V({1, 2}), 2, 2), 2);
  expect_weight_identity(2, {1, 2});
  for (std::uint64_t p : {2, 3, 7})
    for (int a : {1, 3, 6})
      for (std::uint64_t i = 0; i < 10; ++i) EXPECT_EQ(f_eval(V({a}), p, i), 1);
  EXPECT_EQ(f_eval(V({2, 2}), 3, 0), 1);
  EXPECT_EQ(f_eval(V({2, 2}), 3, 1), 3);
  expect_weight_identity(3, {2, 2});
}

TEST(FEval, WeightIdentityOnSmallGroups) {
  for (std::uint64_t p : {2, 3, 5})
    for (int n = 1; *checked_pow(p, n) <= 729; ++n)
      for (const auto& q : partitions_of(n)) expect_weight_identity(p, partition_to_group_type(q, p).alphas());
}

TEST(FEval, AdjacentBranchesAgreeAtBreakpoints) {
  // Branch j (0-based) is p^{(k-1-j) i + α_1 + ... + α_j}; at i = α_{j+1}
  // branches j and j+1 coincide, and f_eval must return that common value.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 6), part(1, 7);
  const std::uint64_t primes[] = {2, 3, 5, 7, 11};
  for (int round = 0; round < 400; ++round) {
    std::vector<int> a(static_cast<std::size_t>(len(rng)));
    for (auto& x : a) x = part(rng);
    std::sort(a.begin(), a.end());
    const std::uint64_t p = primes[round % 5];
    const auto k = static_cast<long>(a.size());
    long prefix = 0;
    for (long j = 0; j + 1 < k; ++j) {
      const long i = a[j];
      const long left = (k - 1 - j) * i + prefix;
      const long right = (k - 2 - j) * i + prefix + a[j];
      ASSERT_EQ(left, right);
      EXPECT_EQ(f_eval(a, p, i), big_pow(p, left));
      prefix += a[j];
    }
  }
}

TEST(PsiPrimePGroup, Examples) {
  EXPECT_EQ(psi_prime_pgroup(PGroupType(2, {2})), F({{2, 5}}));
  EXPECT_EQ(psi_prime_pgroup(PGroupType(2, {1, 1})), F({{2, 3}}));
  EXPECT_EQ(psi_prime_pgroup(PGroupType(2, {3})), F({{2, 17}}));
  EXPECT_TRUE(psi_prime_pgroup(PGroupType(5, {})).is_one());
}

TEST(PsiPrimePGroup, MatchesLiteralProduct) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int n = 1; *checked_pow(p, n) <= 1024; ++n)
      for (const auto& q : partitions_of(n)) {
        const auto t = partition_to_group_type(q, p);
        EXPECT_EQ(psi_prime_pgroup(t), FactoredInteger::prime_power(p, big_from_u64(literal_exponent(p, t.alphas()))));
      }
}

TEST(PsiPrimePGroup, MatchesSpectrumOracleUpTo4096) {
  for (std::uint64_t p : {2, 3, 5, 7})
    for (int n = 1; *checked_pow(p, n) <= 4096; ++n)
      for (const auto& q : partitions_of(n)) {
        const auto t = partition_to_group_type(q, p);
        EXPECT_EQ(psi_prime_pgroup(t), psi_prime_from_spectrum(order_spectrum(make_group(t))));
      }
}

TEST(ClosedForms, CyclicExamples) {
  EXPECT_EQ(psi_prime_cyclic_closed_form(2, 2), F({{2, 5}}));
  EXPECT_EQ(psi_prime_cyclic_closed_form(2, 3), F({{2, 17}}));
  EXPECT_EQ(psi_prime_cyclic_closed_form(3, 1), F({{3, 2}}));
  EXPECT_THROW(psi_prime_cyclic_closed_form(4, 1), DomainError);
  EXPECT_THROW(psi_prime_cyclic_closed_form(2, 0), DomainError);
}

TEST(ClosedForms, RankTwoExamples) {
  EXPECT_EQ(psi_prime_rank2_closed_form(2, 1, 2), F({{2, 11}}));
  EXPECT_EQ(psi_prime_rank2_closed_form(2, 1, 1), F({{2, 3}}));
  EXPECT_EQ(psi_prime_rank2_closed_form(3, 1, 1), F({{3, 8}}));
  EXPECT_THROW(psi_prime_rank2_closed_form(2, 2, 1), DomainError);
}

TEST(ClosedForms, AgreeWithGeneralFormula) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (int a = 1; a <= 8; ++a) EXPECT_EQ(psi_prime_cyclic_closed_form(p, a), psi_prime_pgroup(PGroupType(p, {a})));
    for (int a = 1; a <= 6; ++a)
      for (int b = a; b <= 6; ++b)
        EXPECT_EQ(psi_prime_rank2_closed_form(p, a, b), psi_prime_pgroup(PGroupType(p, {a, b})));
  }
}

TEST(CombineCoprime, Examples) {
  const std::vector<CoprimePart> z6{{F({{2, 1}}), 2}, {F({{3, 2}}), 3}};
  EXPECT_EQ(combine_coprime(z6), F({{2, 3}, {3, 4}}));
  EXPECT_EQ(BigInt(648), materialize(combine_coprime(z6), 10));

  const std::vector<CoprimePart> single{{F({{2, 5}}), 4}};
  EXPECT_EQ(combine_coprime(single), F({{2, 5}}));

  const std::vector<CoprimePart> remark{{psi_prime_pgroup(PGroupType(2, {2})), 4},
                                        {psi_prime_pgroup(PGroupType(3, {1, 1})), 9}};
  EXPECT_EQ(combine_coprime(remark), F({{2, 45}, {3, 32}}));
}

TEST(CombineCoprime, RejectsSharedFactors) {
  const std::vector<CoprimePart> bad{{F({{2, 1}}), 2}, {F({{2, 5}}), 4}};
  EXPECT_THROW(combine_coprime(bad), DomainError);
}

TEST(CombineCoprime, MergesOverlappingSupports) {
  // Caller-supplied values need not have disjoint prime support.
  const std::vector<CoprimePart> parts{{F({{2, 1}, {3, 1}}), 5}, {F({{3, 2}}), 7}};
  EXPECT_EQ(combine_coprime(parts), F({{2, 7}, {3, 7 + 10}}));
}

TEST(PsiPrime, RemarkPair) {
  const auto a = psi_prime(canonicalize({4, 3, 3}));
  const auto b = psi_prime(canonicalize({2, 2, 2, 2, 3}));
  EXPECT_EQ(a, F({{2, 45}, {3, 32}}));
  EXPECT_EQ(b, a);
  EXPECT_TRUE(psi_prime(AbelianGroup()).is_one());
}

TEST(PsiPrime, AgreesWithSpectrumOracle) {
  for (std::uint64_t m = 1; m <= 2000; ++m)
    for (const auto& g : enumerate_abelian_groups(m))
      ASSERT_EQ(psi_prime(g), psi_prime_from_spectrum(order_spectrum(g))) << m;
}

TEST(PsiSum, Examples) {
  EXPECT_EQ(psi_sum(canonicalize({4})), 11);
  EXPECT_EQ(psi_sum(AbelianGroup()), 1);
  EXPECT_EQ(psi_sum(canonicalize({2, 2})), 7);
}

TEST(PsiSum, AgreesWithEnumeration) {
  for (std::uint64_t m = 1; m <= 300; ++m)
    for (const auto& g : enumerate_abelian_groups(m)) {
      BigInt s = 0;
      for (auto o : oracle::element_orders_by_addition(oracle::cyclic_factors(g))) s += static_cast<unsigned long>(o);
      EXPECT_EQ(psi_sum(g), s);
    }
}

TEST(PsiPrimeFromSpectrum, Examples) {
  OrderSpectrum::Map z4{{1, 1}, {2, 1}, {4, 2}};
  EXPECT_EQ(psi_prime_from_spectrum(OrderSpectrum(z4)), F({{2, 5}}));
  EXPECT_TRUE(psi_prime_from_spectrum(OrderSpectrum({{1, BigInt(1)}})).is_one());
  const auto g = canonicalize({4, 9});
  EXPECT_EQ(psi_prime_from_spectrum(order_spectrum(g)), psi_prime(g));
}

TEST(PsiPrime, LargeExponentsStayExact) {
  // Z_2^60: exponent 2^60 - 1 overflows nothing, but α_k p^n for n = 70 does.
  EXPECT_EQ(psi_prime_pgroup(PGroupType(2, std::vector<int>(60, 1))).exponent_of(2), big_pow(2, 60) - 1);
  const auto cyc = psi_prime_pgroup(PGroupType(2, {70}));
  EXPECT_EQ(cyc, psi_prime_cyclic_closed_form(2, 70));
  EXPECT_GT(cyc.exponent_of(2), big_pow(2, 64));
}
