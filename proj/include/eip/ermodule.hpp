#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eip/rep.hpp"

namespace eip {

/// A module over kE_r = k[x_1..x_r]/(x_i^p): r pairwise commuting operators
/// with x_i^p = 0 on a `dim`-dimensional space.
class ErModule {
 public:
  /// Checks shapes only; see validate() for the module axioms.
  ErModule(PrimeField field, int r, std::size_t dim, std::vector<Matrix> ops);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] int r() const noexcept { return r_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Matrix& op(int l) const { return ops_.at(static_cast<std::size_t>(l)); }
  [[nodiscard]] const std::vector<Matrix>& ops() const noexcept { return ops_; }

  friend bool operator==(const ErModule&, const ErModule&) = default;

 private:
  PrimeField field_;
  int r_;
  std::size_t dim_;
  std::vector<Matrix> ops_;
};

/// Human-readable list of failed axioms (empty when valid).
[[nodiscard]] std::vector<std::string> validate(const ErModule& m);

/// Multiplicities a_1..a_p of Jordan blocks of sizes 1..p.
struct JordanType {
  /// counts[i-1] = a_i; trailing zeros trimmed.
  std::vector<std::size_t> counts;

  static JordanType from_counts(std::vector<std::size_t> counts);
  [[nodiscard]] std::size_t total_dim() const noexcept;
  [[nodiscard]] std::size_t count(std::size_t block) const noexcept {
    return block >= 1 && block <= counts.size() ? counts[block - 1] : 0;
  }
  /// "3[2]+3[1]", largest blocks first; "0" for the zero module.
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const JordanType&, const JordanType&) = default;
};

/// Underlying kE_r-module: x_l acts block-subdiagonally by the level maps.
/// Throws ParameterError when p < n.
[[nodiscard]] ErModule forget(const BeilinsonRep& rep);
/// k^m with every x_l acting as zero.
[[nodiscard]] ErModule trivial_module(const PrimeField& field, int r, std::size_t m);
/// Linear dual with transposed action.
[[nodiscard]] ErModule dual(const ErModule& m);
[[nodiscard]] ErModule direct_sum(const ErModule& a, const ErModule& b);

/// The nilpotent operator sum_l alpha_l x_l.
[[nodiscard]] Matrix point_operator(const ErModule& m, const ProjPoint& alpha);
/// Block sizes from the rank sequence of the point operator.
[[nodiscard]] JordanType jordan_type(const ErModule& m, const ProjPoint& alpha);
/// Closed-form Jordan type of I^{n-d}/I^n; requires 1 <= d <= n.
[[nodiscard]] JordanType jt_formula(int n, int d, int r);

/// rad M = sum_l im(x_l), as a column basis.
[[nodiscard]] Matrix radical(const ErModule& m);
/// soc M = intersection of ker(x_l), as a column basis.
[[nodiscard]] Matrix socle(const ErModule& m);
/// rad^0 M = M, rad^1 M, ... down to and including 0.
[[nodiscard]] std::vector<Matrix> radical_series(const ErModule& m);
/// soc^0 = 0, soc^1, ... up to and including M.
[[nodiscard]] std::vector<Matrix> socle_series(const ErModule& m);
[[nodiscard]] std::size_t loewy_length(const ErModule& m);

/// rad^s(kE_r) in the monomial basis; requires 0 <= s <= r(p-1)+1.
[[nodiscard]] ErModule group_algebra_radical_power(const PrimeField& field, int r, int s);

/// x'_l = sum_m (g^{-1})_{ml} x_m. Throws ParameterError when g is singular.
[[nodiscard]] ErModule twist(const ErModule& m, const Matrix& g);

/// Basis of Hom_{kE_r}(M, N) as dim(N) x dim(M) matrices.
[[nodiscard]] std::vector<Matrix> module_hom_space(const ErModule& m, const ErModule& n);

void require_same_config(const ErModule& a, const ErModule& b, const char* what);

// ---------------------------------------------------------------------------
// Semi-decision procedures. Positive answers are certified by a witness;
// negative answers are certified only by an invariant mismatch or an
// exhausted enumeration.

struct SearchOptions {
  std::uint64_t seed = 0x5eed;
  /// Random combinations tried before giving up (or before enumerating).
  std::size_t trials = 64;
  /// Enumerate the whole span when p^dim is at most this.
  std::uint64_t exhaustive_limit = 1'000'000;
};

enum class IsoVerdict { yes, no, probably_not };
[[nodiscard]] std::string to_string(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict;
  /// Set when verdict == yes: an invertible intertwiner M -> N.
  std::optional<Matrix> witness;
  std::string reason;
};

[[nodiscard]] IsoResult is_isomorphic(const ErModule& m, const ErModule& n,
                                      const SearchOptions& opts = {});
/// Graded isomorphism of B(n, r)-representations.
[[nodiscard]] IsoResult is_isomorphic(const BeilinsonRep& x, const BeilinsonRep& y,
                                      const SearchOptions& opts = {});

enum class LocalityRegime { exhaustive, frobenius, heuristic };
[[nodiscard]] std::string to_string(LocalityRegime r);

struct EndAlgebra {
  std::vector<Matrix> basis;
  bool commutative;
  bool local;
  /// exhaustive: every element checked to be invertible or nilpotent.
  /// frobenius: commutative, and x -> x^p has a one-dimensional fixed space,
  ///   which counts the local factors exactly.
  /// heuristic: randomized Fitting search found no idempotent.
  LocalityRegime regime;
  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
};

/// Algebra spanned by `basis` (square matrices closed under product).
[[nodiscard]] EndAlgebra analyze_algebra(std::vector<Matrix> basis, const SearchOptions& opts = {});
[[nodiscard]] EndAlgebra end_algebra(const ErModule& m, const SearchOptions& opts = {});

enum class IndecVerdict { yes, decomposable, probably_yes };
[[nodiscard]] std::string to_string(IndecVerdict v);

struct IndecResult {
  IndecVerdict verdict;
  /// For decomposable: complementary idempotents in End(M) (summand projectors).
  std::vector<Matrix> projectors;
  std::string reason;
};

[[nodiscard]] IndecResult is_indecomposable(const ErModule& m, const SearchOptions& opts = {});
/// Uses graded endomorphisms; projectors are block diagonal over vertices.
[[nodiscard]] IndecResult is_indecomposable(const BeilinsonRep& rep, const SearchOptions& opts = {});

/// Block-diagonal matrix of a graded morphism on the total spaces.
[[nodiscard]] Matrix total_matrix(const Morphism& phi);

}  // namespace eip
