#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eip/field.hpp"
#include "eip/matrix.hpp"

namespace eip {

/// A rational point of P^{r-1}(F_p): nonzero coordinates scaled so the first
/// nonzero entry is 1. Two points compare equal iff they are proportional.
class ProjPoint {
 public:
  /// Normalizes `coords`; throws ParameterError on the zero vector.
  ProjPoint(const PrimeField& field, std::span<const Scalar> coords);
  ProjPoint(const PrimeField& field, std::initializer_list<std::int64_t> coords);

  [[nodiscard]] const Vector& coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t r() const noexcept { return coords_.size(); }
  [[nodiscard]] Scalar operator[](std::size_t i) const noexcept { return coords_[i]; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;

 private:
  Vector coords_;
};

/// All (p^r - 1)/(p - 1) points in lexicographic order of normalized coordinates.
[[nodiscard]] std::vector<ProjPoint> projective_points(const PrimeField& field, int r);

/// `count` points drawn uniformly from F_p^r \ 0 (then normalized).
[[nodiscard]] std::vector<ProjPoint> sample_points(const PrimeField& field, int r,
                                                   std::size_t count, std::uint64_t seed);

/// g acting on coordinates: (g alpha)_i = sum_j g_ij alpha_j.
[[nodiscard]] ProjPoint transform(const Matrix& g, const ProjPoint& alpha);

}  // namespace eip
