#include "eip/property.hpp"

#include <functional>
#include <optional>

namespace eip {

std::string to_string(Property p) {
  switch (p) {
    case Property::eip: return "eip";
    case Property::ekp: return "ekp";
    case Property::constant_rank: return "cr";
    case Property::constant_jordan_type: return "cjt";
  }
  return "?";
}

Property parse_property(const std::string& s) {
  if (s == "eip") return Property::eip;
  if (s == "ekp") return Property::ekp;
  if (s == "cr") return Property::constant_rank;
  if (s == "cjt") return Property::constant_jordan_type;
  throw ParameterError("unknown property '" + s + "' (expected eip, ekp, cr or cjt)");
}

std::vector<ProjPoint> check_points(const PrimeField& field, int r, const CheckOptions& opts,
                                    std::string* tag) {
  std::vector<ProjPoint> pts = opts.samples > 0 ? sample_points(field, r, opts.samples, opts.seed)
                                                : projective_points(field, r);
  if (tag) {
    *tag = "F_" + std::to_string(field.p()) + ", " +
           (opts.samples > 0 ? std::to_string(pts.size()) + " sampled points"
                             : "all " + std::to_string(pts.size()) + " points") +
           " of P^" + std::to_string(r - 1);
  }
  return pts;
}

namespace {

struct PointResult {
  std::vector<std::size_t> ranks;
  /// Failing level (or power), if any.
  std::optional<int> failure;
};

PropertyReport run(const BeilinsonRep& m, Property prop, int j, const char* route,
                   const CheckOptions& opts, const std::function<PointResult(const ProjPoint&)>& at) {
  PropertyReport rep{prop, j, true, {}, {}, {}, route};
  const auto pts = check_points(m.field(), m.r(), opts, &rep.field_tag);
  const auto results = map_points<PointResult>(pts, at, opts.jobs);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (results[k].failure) {
      rep.verdict = false;
      if (rep.witnesses.size() < std::max<std::size_t>(opts.max_witnesses, 1))
        rep.witnesses.push_back({pts[k], *results[k].failure});
    }
    if (opts.keep_profile) rep.profile.push_back({pts[k], results[k].ranks});
  }
  return rep;
}

// Constant-rank checks compare every point against the first one.
PropertyReport run_constant(const BeilinsonRep& m, Property prop, int j, int j_lo, int j_hi,
                            const CheckOptions& opts) {
  if (j_lo < 1 || j_hi > m.n() - 1 || j_lo > j_hi)
    throw ParameterError("rank power j must satisfy 1 <= j <= n-1 = " + std::to_string(m.n() - 1));
  PropertyReport rep{prop, j, true, {}, {}, {}, "definition"};
  const auto pts = check_points(m.field(), m.r(), opts, &rep.field_tag);
  const auto ranks = map_points<std::vector<std::size_t>>(
      pts,
      [&](const ProjPoint& a) {
        std::vector<std::size_t> out;
        for (int t = j_lo; t <= j_hi; ++t) out.push_back(alpha_power_rank(m, a, t));
        return out;
      },
      opts.jobs);
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (std::size_t t = 0; t < ranks[k].size(); ++t)
      if (ranks[k][t] != ranks[0][t]) {
        rep.verdict = false;
        if (rep.witnesses.size() < std::max<std::size_t>(opts.max_witnesses, 1))
          rep.witnesses.push_back({pts[k], j_lo + static_cast<int>(t)});
        break;
      }
    if (opts.keep_profile) rep.profile.push_back({pts[k], ranks[k]});
  }
  return rep;
}

}  // namespace

PropertyReport is_eip_def(const BeilinsonRep& m, const CheckOptions& opts) {
  return run(m, Property::eip, 0, "definition", opts, [&](const ProjPoint& a) {
    PointResult res;
    const auto steps = alpha_operator(m, a);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      res.ranks.push_back(rank(steps[i]));
      if (!res.failure && res.ranks.back() != m.dims()[i + 1]) res.failure = static_cast<int>(i);
    }
    return res;
  });
}

PropertyReport is_ekp_def(const BeilinsonRep& m, const CheckOptions& opts) {
  return run(m, Property::ekp, 0, "definition", opts, [&](const ProjPoint& a) {
    PointResult res;
    const auto steps = alpha_operator(m, a);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      res.ranks.push_back(rank(steps[i]));
      if (!res.failure && res.ranks.back() != m.dims()[i]) res.failure = static_cast<int>(i);
    }
    return res;
  });
}

PropertyReport is_eip_hom(const BeilinsonRep& m, const CheckOptions& opts) {
  return run(m, Property::eip, 0, "hom", opts, [&](const ProjPoint& a) {
    PointResult res;
    for (int i = 0; i + 1 < m.n(); ++i) {
      const auto x = x_module(m.field(), m.n(), m.r(), a, i, 1);
      const std::size_t hom = hom_dim(x, m);
      const std::size_t ext = hom + m.dim(i + 1) - m.dim(i);
      res.ranks.push_back(ext);
      if (!res.failure && ext != 0) res.failure = i;
    }
    return res;
  });
}

PropertyReport is_ekp_hom(const BeilinsonRep& m, const CheckOptions& opts) {
  return run(m, Property::ekp, 0, "hom", opts, [&](const ProjPoint& a) {
    PointResult res;
    for (int i = 0; i + 1 < m.n(); ++i) {
      const std::size_t hom = hom_dim(x_module(m.field(), m.n(), m.r(), a, i, 1), m);
      res.ranks.push_back(hom);
      if (!res.failure && hom != 0) res.failure = i;
    }
    return res;
  });
}

PropertyReport constant_rank(const BeilinsonRep& m, int j, const CheckOptions& opts) {
  return run_constant(m, Property::constant_rank, j, j, j, opts);
}

PropertyReport constant_jordan_type(const BeilinsonRep& m, const CheckOptions& opts) {
  return run_constant(m, Property::constant_jordan_type, 0, 1, m.n() - 1, opts);
}

PropertyReport check_property(const BeilinsonRep& m, Property p, int j, const CheckOptions& opts) {
  switch (p) {
    case Property::eip: return is_eip_def(m, opts);
    case Property::ekp: return is_ekp_def(m, opts);
    case Property::constant_rank: return constant_rank(m, j, opts);
    case Property::constant_jordan_type: return constant_jordan_type(m, opts);
  }
  throw ParameterError("unknown property");
}

bool no_maps_check(const BeilinsonRep& m, const BeilinsonRep& n) { return hom_dim(m, n) == 0; }

}  // namespace eip
