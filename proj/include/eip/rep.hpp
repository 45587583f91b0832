#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eip/linalg.hpp"
#include "eip/points.hpp"

namespace eip {

/// A representation of the generalized Beilinson algebra B(n, r): vector spaces
/// at vertices 0..n-1 and r arrows between consecutive vertices, stored as
/// maps[level][arrow] of shape dims[level+1] x dims[level]. Arrow indices are
/// zero-based throughout the C++ interface.
class BeilinsonRep {
 public:
  /// Checks shapes (DimensionError) and n >= 2, r >= 1; does not check the
  /// commutativity relations, see validate().
  BeilinsonRep(PrimeField field, int n, int r, std::vector<std::size_t> dims,
               std::vector<std::vector<Matrix>> maps);
  /// All maps zero.
  static BeilinsonRep zero_maps(PrimeField field, int n, int r, std::vector<std::size_t> dims);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int r() const noexcept { return r_; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  [[nodiscard]] std::size_t dim(int vertex) const { return dims_.at(static_cast<std::size_t>(vertex)); }
  [[nodiscard]] std::size_t total_dim() const noexcept;
  [[nodiscard]] const Matrix& map(int level, int arrow) const {
    return maps_.at(static_cast<std::size_t>(level)).at(static_cast<std::size_t>(arrow));
  }
  [[nodiscard]] const std::vector<std::vector<Matrix>>& maps() const noexcept { return maps_; }
  [[nodiscard]] bool is_zero() const noexcept { return total_dim() == 0; }

  friend bool operator==(const BeilinsonRep&, const BeilinsonRep&) = default;

 private:
  PrimeField field_;
  int n_;
  int r_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<Matrix>> maps_;
};

/// A failed commutativity relation at `level`: maps[level+1][a] maps[level][b]
/// differs from maps[level+1][b] maps[level][a].
struct Violation {
  int level;
  int arrow_a;
  int arrow_b;
  friend bool operator==(const Violation&, const Violation&) = default;
};

[[nodiscard]] std::vector<Violation> validate(const BeilinsonRep& rep);
/// Throws ParameterError naming the first violated relation.
void require_valid(const BeilinsonRep& rep);

// ---------------------------------------------------------------------------
// Monomial bases. Degree-k monomials in r variables are ordered
// graded-lexicographically: x_1^k first, x_r^k last.

[[nodiscard]] std::vector<std::vector<int>> monomials(int r, int degree);
[[nodiscard]] std::size_t monomial_count(int r, int degree);
/// Multiplication by x_var from degree `degree` to degree + 1.
[[nodiscard]] Matrix multiplication_matrix(const PrimeField& field, int r, int degree, int var);
[[nodiscard]] std::size_t binomial(int n, int k);

// ---------------------------------------------------------------------------
// Distinguished families.

[[nodiscard]] BeilinsonRep projective(const PrimeField& field, int n, int r, int i);
[[nodiscard]] BeilinsonRep injective(const PrimeField& field, int n, int r, int i);
[[nodiscard]] BeilinsonRep simple(const PrimeField& field, int n, int r, int i);
/// The truncated polynomial module I^{m-d}/I^m placed on vertices [n-d, n-1].
/// Requires 2 <= d <= n <= p and d <= m.
[[nodiscard]] BeilinsonRep m_module(const PrimeField& field, int n, int r, int m, int d);
/// Dual of m_module, supported on [0, d-1].
[[nodiscard]] BeilinsonRep w_module(const PrimeField& field, int n, int r, int m, int d);
/// Cokernel of multiplication by (sum_l alpha_l x_l)^j from P(i+j) into P(i).
/// Requires 0 <= i <= n-2 and 1 <= j <= n-1-i.
[[nodiscard]] BeilinsonRep x_module(const PrimeField& field, int n, int r, const ProjPoint& alpha,
                                    int i, int j);

// ---------------------------------------------------------------------------
// Structural operations.

/// Reverse the vertices and transpose every map.
[[nodiscard]] BeilinsonRep dualize(const BeilinsonRep& rep);
[[nodiscard]] BeilinsonRep direct_sum(const BeilinsonRep& x, const BeilinsonRep& y);
/// Vertices with nonzero dimension, ascending.
[[nodiscard]] std::vector<int> support(const BeilinsonRep& rep);
/// Generated by the component at min(support).
[[nodiscard]] bool is_standardly_graded(const BeilinsonRep& rep);
/// Cogenerated by the component at max(support).
[[nodiscard]] bool is_costandardly_graded(const BeilinsonRep& rep);

/// step_i = sum_l alpha_l maps[i][l], for i = 0..n-2.
[[nodiscard]] std::vector<Matrix> alpha_operator(const BeilinsonRep& rep, const ProjPoint& alpha);
/// rank (alpha_M)^j = sum_i rank(step_{i+j-1} ... step_i).
[[nodiscard]] std::size_t alpha_power_rank(const BeilinsonRep& rep, const ProjPoint& alpha, int j);

/// A morphism of representations: one matrix per vertex.
struct Morphism {
  std::vector<Matrix> components;
  friend bool operator==(const Morphism&, const Morphism&) = default;
};

void require_same_config(const BeilinsonRep& x, const BeilinsonRep& y, const char* what);

/// Basis of Hom(X, Y), the solutions of phi_{v+1} X_l = Y_l phi_v.
[[nodiscard]] std::vector<Morphism> hom_space(const BeilinsonRep& x, const BeilinsonRep& y);
[[nodiscard]] std::size_t hom_dim(const BeilinsonRep& x, const BeilinsonRep& y);
[[nodiscard]] bool is_morphism(const BeilinsonRep& x, const BeilinsonRep& y, const Morphism& phi);
[[nodiscard]] Morphism combine(const std::vector<Morphism>& basis, std::span<const Scalar> coeffs);

/// Per-vertex column bases of a subspace family.
using Subspaces = std::vector<Matrix>;

/// True when the subspaces are stable under every arrow.
[[nodiscard]] bool is_subrepresentation(const BeilinsonRep& rep, const Subspaces& sub);
/// The subrepresentation with the given per-vertex bases (must be stable).
[[nodiscard]] BeilinsonRep subrepresentation(const BeilinsonRep& rep, const Subspaces& sub);
/// rep / sub, with quotient bases given by the non-pivot coordinates.
[[nodiscard]] BeilinsonRep quotient(const BeilinsonRep& rep, const Subspaces& sub);
/// im(phi) as a subrepresentation of Y.
[[nodiscard]] Subspaces image_subspaces(const Morphism& phi);
[[nodiscard]] Subspaces kernel_subspaces(const Morphism& phi);
[[nodiscard]] BeilinsonRep image(const BeilinsonRep& y, const Morphism& phi);

[[nodiscard]] std::string describe(const BeilinsonRep& rep);

}  // namespace eip
