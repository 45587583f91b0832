#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eip/ermodule.hpp"
#include "eip/property.hpp"

namespace eip {

/// Result of a translate together with the summands that were discarded:
/// projective summands P(0), P(1) for tau, injective I(0), I(1) for tau_inv.
struct TauResult {
  BeilinsonRep module;
  std::array<std::size_t, 2> stripped{0, 0};
};

/// Auslander-Reiten translate over K_r = B(2, r) via the transpose of a
/// minimal projective presentation. Throws Unsupported unless n = 2.
[[nodiscard]] TauResult tau_detail(const BeilinsonRep& m);
[[nodiscard]] TauResult tau_inv_detail(const BeilinsonRep& m);
[[nodiscard]] BeilinsonRep tau(const BeilinsonRep& m);
[[nodiscard]] BeilinsonRep tau_inv(const BeilinsonRep& m);

/// Dimension vector predicted for tau (and tau^{-1}) of a non-projective
/// (non-injective) indecomposable.
[[nodiscard]] std::array<std::int64_t, 2> coxeter_dims(int r, std::int64_t d0, std::int64_t d1);
[[nodiscard]] std::array<std::int64_t, 2> coxeter_inv_dims(int r, std::int64_t d0, std::int64_t d1);

/// q(d) = d0^2 + d1^2 - r d0 d1.
[[nodiscard]] std::int64_t tits_form(int r, std::int64_t d0, std::int64_t d1);

/// Dimension vector (1, 1) with arrow l acting by lambda_l.
[[nodiscard]] BeilinsonRep e_lambda(const PrimeField& field, int r, const std::vector<std::int64_t>& lambda);

enum class OrbitClass { preprojective, preinjective, regular, decomposable };
[[nodiscard]] std::string to_string(OrbitClass c);

struct Classification {
  OrbitClass kind;
  /// tau^k M projective (or tau^{-k} M injective); for regular, the bound reached.
  int exponent = 0;
  std::int64_t tits = 0;
  IndecResult indecomposability;
  std::vector<std::string> notes;
};

struct OrbitOptions {
  int k_max = 8;
  /// Translates whose total dimension exceeds this are not computed.
  std::size_t dim_cap = 2000;
  CheckOptions check{};
  SearchOptions search{};
};

[[nodiscard]] Classification classify(const BeilinsonRep& m, const OrbitOptions& opts = {});

struct OrbitStep {
  int m;
  std::vector<std::size_t> dims;
  bool eip;
  bool ekp;
  /// tau of this module vanished (resp. tau^{-1}).
  bool hit_projective = false;
  bool hit_injective = false;
  /// dims agree with the Coxeter transform of the neighbour it was computed from.
  bool coxeter = true;
};

struct TauOrbitReport {
  std::string base;
  /// Sorted by exponent.
  std::vector<OrbitStep> shifts;
  std::optional<int> m0;
  std::optional<int> m1;
  std::optional<int> width;
  int k_max;
  std::size_t dim_cap;
  std::vector<std::string> notes;
};

/// Scans tau^m M upward until EIP and downward until EKP (one step past each
/// boundary when the cap allows), within |m| <= k_max.
[[nodiscard]] TauOrbitReport tau_orbit(const BeilinsonRep& m, const OrbitOptions& opts = {});
/// tau_orbit with the width filled in; M is assumed quasi-simple.
[[nodiscard]] TauOrbitReport width(const BeilinsonRep& m, const OrbitOptions& opts = {});

/// tau(M_{m,2}) is EIP and tau^{-1}(W_{m,2}) is EKP. Requires r >= 3, m > 2.
[[nodiscard]] bool wmod_shift_check(const PrimeField& field, int r, int m);

/// Graphviz rendering of the scanned orbit segment.
[[nodiscard]] std::string to_dot(const TauOrbitReport& report);

}  // namespace eip
