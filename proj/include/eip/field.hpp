#pragma once

#include <cstdint>

#include "eip/errors.hpp"

namespace eip {

using Scalar = std::uint32_t;

/// Arithmetic in Z/pZ for a prime p < 2^31, so products fit in 64 bits.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  [[nodiscard]] Scalar p() const noexcept { return p_; }

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  /// Inverse by extended Euclid; throws ParameterError on zero.
  [[nodiscard]] Scalar inv(Scalar a) const;
  [[nodiscard]] Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Canonical residue of an arbitrary signed integer.
  [[nodiscard]] Scalar reduce(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(m < 0 ? m + p_ : m);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar p_;
};

[[nodiscard]] bool is_prime(std::uint64_t v) noexcept;

}  // namespace eip
