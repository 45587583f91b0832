#pragma once

#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include <omp.h>

#include "eip/rep.hpp"

namespace eip {

enum class Property { eip, ekp, constant_rank, constant_jordan_type };

[[nodiscard]] std::string to_string(Property p);
/// Accepts "eip", "ekp", "cr", "cjt".
[[nodiscard]] Property parse_property(const std::string& s);

struct Witness {
  ProjPoint alpha;
  /// The failing level for EIP/EKP; the power j for rank checks.
  int level;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PointProfile {
  ProjPoint alpha;
  /// Step ranks (EIP/EKP), or rank (alpha_M)^j for j = 1.. (rank checks).
  std::vector<std::size_t> ranks;
  friend bool operator==(const PointProfile&, const PointProfile&) = default;
};

struct PropertyReport {
  Property property;
  /// Power for constant_rank; 0 otherwise.
  int j = 0;
  bool verdict = true;
  std::vector<Witness> witnesses;
  std::vector<PointProfile> profile;
  /// Which points were checked, e.g. "F_5, all 31 points of P^2".
  std::string field_tag;
  /// "definition" or "hom".
  std::string route;
};

struct CheckOptions {
  /// OpenMP threads for the point loop; 0 keeps the runtime default.
  int jobs = 0;
  /// When nonzero, check this many random points of P^{r-1}(F_p) instead of all.
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  bool keep_profile = false;
  std::size_t max_witnesses = 8;
};

/// The points a check runs over, with the matching field tag.
[[nodiscard]] std::vector<ProjPoint> check_points(const PrimeField& field, int r, const CheckOptions& opts,
                                                  std::string* tag = nullptr);

/// Applies f to every point; results are stored in enumeration order whatever
/// the thread count. Exceptions from f are rethrown on the calling thread.
template <class T, class F>
std::vector<T> map_points(const std::vector<ProjPoint>& pts, F&& f, int jobs = 0) {
  std::vector<T> out(pts.size());
  std::exception_ptr err;
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1 && n > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(pts[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical(eip_map_points)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

namespace serial {
template <class T, class F>
std::vector<T> map_points(const std::vector<ProjPoint>& pts, F&& f) {
  std::vector<T> out;
  out.reserve(pts.size());
  for (const auto& a : pts) out.push_back(f(a));
  return out;
}
}  // namespace serial

/// Every step sum_l alpha_l M_l surjective at every checked alpha.
[[nodiscard]] PropertyReport is_eip_def(const BeilinsonRep& m, const CheckOptions& opts = {});
/// Every step injective at every checked alpha.
[[nodiscard]] PropertyReport is_ekp_def(const BeilinsonRep& m, const CheckOptions& opts = {});
/// Ext^1(X_alpha^{i,1}, M) = 0 for all i, computed as
/// dim Hom(X_alpha^{i,1}, M) - dim M_i + dim M_{i+1} from 0 -> P(i+1) -> P(i) -> X -> 0.
[[nodiscard]] PropertyReport is_eip_hom(const BeilinsonRep& m, const CheckOptions& opts = {});
/// Hom(X_alpha^{i,1}, M) = 0 for all i.
[[nodiscard]] PropertyReport is_ekp_hom(const BeilinsonRep& m, const CheckOptions& opts = {});
/// rank (alpha_M)^j independent of alpha; requires 1 <= j <= n-1.
[[nodiscard]] PropertyReport constant_rank(const BeilinsonRep& m, int j, const CheckOptions& opts = {});
/// Constant j-rank for every j = 1..n-1.
[[nodiscard]] PropertyReport constant_jordan_type(const BeilinsonRep& m, const CheckOptions& opts = {});

/// Dispatch by tag; the "definition" route for EIP/EKP.
[[nodiscard]] PropertyReport check_property(const BeilinsonRep& m, Property p, int j = 0,
                                            const CheckOptions& opts = {});

/// Hom(M, N) = 0.
[[nodiscard]] bool no_maps_check(const BeilinsonRep& m, const BeilinsonRep& n);

}  // namespace eip
