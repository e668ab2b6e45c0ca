#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace psiprime {

using BigInt = mpz_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) { return big_pow(big_from_u64(base), exp); }

inline bool fits_u64(const BigInt& v) {
  return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t big_to_u64(const BigInt& v) {
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

}  // namespace psiprime
