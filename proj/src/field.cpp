#include "eip/field.hpp"

#include <string>

namespace eip {

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t q = 2; q * q <= v; ++q)
    if (v % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(static_cast<Scalar>(p)) {
  if (p >= (std::uint64_t{1} << 31))
    throw ParameterError("field modulus " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime(p))
    throw ParameterError("field modulus " + std::to_string(p) + " is not prime");
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw ParameterError("inverse of zero in F_" + std::to_string(p_));
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return reduce(s0);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

}  // namespace eip
