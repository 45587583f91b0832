#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "eip/matrix.hpp"

namespace eip {

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Work (rows * cols) above which the elimination and product kernels fan out
/// over OpenMP threads.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

[[nodiscard]] Echelon rref(Matrix m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Columns form a basis of the right null space {x : m x = 0}.
[[nodiscard]] Matrix kernel_basis(const Matrix& m);
/// Columns form a basis of the column space (pivot columns of m).
[[nodiscard]] Matrix image_basis(const Matrix& m);
/// Some x with a x = b, or nullopt.
[[nodiscard]] std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b);
/// Some X with a X = b, or nullopt.
[[nodiscard]] std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct Cokernel {
  /// Surjection q : F^rows(m) -> F^dim with q m = 0.
  Matrix projector;
  std::size_t dim;
  /// Ambient coordinates whose unit vectors map to the cokernel basis.
  std::vector<std::size_t> complement;
};
/// The projector reads off the non-pivot coordinates after reducing modulo the
/// column space, so the cokernel basis is the set of non-pivot unit vectors.
[[nodiscard]] Cokernel cokernel_projection(const Matrix& m);

[[nodiscard]] bool is_invertible(const Matrix& m);
[[nodiscard]] std::optional<Matrix> inverse(const Matrix& m);

/// Column basis of the intersection of two column spaces in the same ambient.
[[nodiscard]] Matrix intersect(const Matrix& u, const Matrix& v);
/// Column basis of u + v.
[[nodiscard]] Matrix span_sum(const Matrix& u, const Matrix& v);
/// True when every column of v lies in the column space of u.
[[nodiscard]] bool contains(const Matrix& u, const Matrix& v);

/// Serial reference kernels, kept independent of the OpenMP code paths so the
/// parallel versions can be checked against them.
namespace serial {
[[nodiscard]] Echelon rref(Matrix m);
[[nodiscard]] std::size_t rank(Matrix m);
[[nodiscard]] Matrix multiply(const Matrix& a, const Matrix& b);
}  // namespace serial

}  // namespace eip
