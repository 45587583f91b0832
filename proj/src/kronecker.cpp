#include "eip/kronecker.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eip {

namespace {

void require_kronecker(const BeilinsonRep& m, const char* what) {
  if (m.n() != 2)
    throw Unsupported(std::string(what) + " is implemented for n = 2 only (got n = " + std::to_string(m.n()) + ")");
}

}  // namespace

TauResult tau_detail(const BeilinsonRep& m) {
  require_kronecker(m, "tau");
  const PrimeField& f = m.field();
  const std::size_t d0 = m.dim(0), d1 = m.dim(1);
  const auto r = static_cast<std::size_t>(m.r());

  // Columns l*d0 + b of the combined arrow map are A_l e_b.
  Matrix acomb(f, d1, 0);
  for (int l = 0; l < m.r(); ++l) acomb = hstack(acomb, m.map(0, l));
  const std::size_t t = d1 - rank(acomb);
  const Matrix syz = kernel_basis(acomb);
  const std::size_t s = syz.cols();

  // Transpose of the presentation: K[(a, l), b] = component (l, b) of syzygy a.
  Matrix k(f, r * s, d0);
  for (std::size_t a = 0; a < s; ++a)
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t b = 0; b < d0; ++b) k.set(a * r + l, b, syz(l * d0 + b, a));
  const std::size_t rk = rank(k);
  const Cokernel c = cokernel_projection(k);

  std::vector<Matrix> arrows;
  for (std::size_t l = 0; l < r; ++l) {
    Matrix qr(f, c.dim, s);
    for (std::size_t a = 0; a < s; ++a)
      for (std::size_t e = 0; e < c.dim; ++e) qr.set(e, a, c.projector(e, a * r + l));
    arrows.push_back(transpose(qr));
  }
  BeilinsonRep out(f, 2, m.r(), {c.dim, s}, {std::move(arrows)});
  return {std::move(out), {d0 - rk, t}};
}

TauResult tau_inv_detail(const BeilinsonRep& m) {
  require_kronecker(m, "tau_inv");
  TauResult d = tau_detail(dualize(m));
  return {dualize(d.module), {d.stripped[1], d.stripped[0]}};
}

BeilinsonRep tau(const BeilinsonRep& m) { return tau_detail(m).module; }
BeilinsonRep tau_inv(const BeilinsonRep& m) { return tau_inv_detail(m).module; }

std::array<std::int64_t, 2> coxeter_dims(int r, std::int64_t d0, std::int64_t d1) {
  const std::int64_t R = r;
  return {(R * R - 1) * d0 - R * d1, R * d0 - d1};
}

std::array<std::int64_t, 2> coxeter_inv_dims(int r, std::int64_t d0, std::int64_t d1) {
  const std::int64_t R = r;
  return {-d0 + R * d1, -R * d0 + (R * R - 1) * d1};
}

std::int64_t tits_form(int r, std::int64_t d0, std::int64_t d1) { return d0 * d0 + d1 * d1 - r * d0 * d1; }

BeilinsonRep e_lambda(const PrimeField& field, int r, const std::vector<std::int64_t>& lambda) {
  if (lambda.size() != static_cast<std::size_t>(r))
    throw DimensionError("lambda needs " + std::to_string(r) + " entries");
  std::vector<Matrix> arrows;
  bool nonzero = false;
  for (auto v : lambda) {
    const Scalar x = field.reduce(v);
    nonzero = nonzero || x != 0;
    Matrix a(field, 1, 1);
    a.set(0, 0, x);
    arrows.push_back(std::move(a));
  }
  if (!nonzero) throw ParameterError("e_lambda requires lambda != 0");
  return BeilinsonRep(field, 2, r, {1, 1}, {std::move(arrows)});
}

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::preprojective: return "preprojective";
    case OrbitClass::preinjective: return "preinjective";
    case OrbitClass::regular: return "regular";
    case OrbitClass::decomposable: return "decomposable";
  }
  return "?";
}

Classification classify(const BeilinsonRep& m, const OrbitOptions& opts) {
  require_kronecker(m, "classify");
  Classification out{OrbitClass::regular, 0,
                     tits_form(m.r(), static_cast<std::int64_t>(m.dim(0)), static_cast<std::int64_t>(m.dim(1))),
                     is_indecomposable(m, opts.search), {}};
  if (out.indecomposability.verdict == IndecVerdict::decomposable) {
    out.kind = OrbitClass::decomposable;
    return out;
  }
  if (out.indecomposability.verdict == IndecVerdict::probably_yes)
    out.notes.push_back("indecomposability not certified: " + out.indecomposability.reason);

  auto walk = [&](bool forward) -> std::optional<int> {
    BeilinsonRep x = m;
    for (int k = 0; k <= opts.k_max; ++k) {
      BeilinsonRep next = forward ? tau(x) : tau_inv(x);
      if (next.is_zero()) return k;
      if (next.total_dim() > opts.dim_cap) {
        out.notes.push_back(std::string(forward ? "tau" : "tau^-1") + "^" + std::to_string(k + 1) +
                            " exceeds the dimension cap");
        break;
      }
      x = std::move(next);
    }
    return std::nullopt;
  };
  if (auto k = walk(true)) {
    out.kind = OrbitClass::preprojective;
    out.exponent = *k;
  } else if (auto k2 = walk(false)) {
    out.kind = OrbitClass::preinjective;
    out.exponent = *k2;
  } else {
    out.exponent = opts.k_max;
    out.notes.push_back("regular within the scanned bound");
    if (out.tits <= 0) out.notes.push_back("q(d) <= 0 corroborates regularity");
  }
  return out;
}

TauOrbitReport tau_orbit(const BeilinsonRep& m, const OrbitOptions& opts) {
  require_kronecker(m, "tau_orbit");
  TauOrbitReport rep{describe(m), {}, std::nullopt, std::nullopt, std::nullopt, opts.k_max, opts.dim_cap, {}};
  std::map<int, OrbitStep> steps;
  auto record = [&](int e, const BeilinsonRep& x) {
    steps[e] = OrbitStep{e, x.dims(), is_eip_def(x, opts.check).verdict, is_ekp_def(x, opts.check).verdict};
  };
  record(0, m);

  auto scan = [&](bool up) {
    const int sign = up ? 1 : -1;
    std::optional<int> boundary;
    if (up ? steps[0].eip : steps[0].ekp) boundary = 0;
    BeilinsonRep x = m;
    for (int k = 1; k <= opts.k_max; ++k) {
      if (boundary && k > std::abs(*boundary) + 1) break;
      const int prev = sign * (k - 1);
      TauResult t = up ? tau_detail(x) : tau_inv_detail(x);
      const char* name = up ? "tau" : "tau^-1";
      if (t.module.is_zero()) {
        (up ? steps[prev].hit_projective : steps[prev].hit_injective) = true;
        rep.notes.push_back(std::string(name) + " of the module at m = " + std::to_string(prev) + " vanishes");
        break;
      }
      if (t.module.total_dim() > opts.dim_cap) {
        rep.notes.push_back("stopped before m = " + std::to_string(sign * k) + ": dimension " +
                            std::to_string(t.module.total_dim()) + " exceeds the cap");
        break;
      }
      if (t.stripped[0] + t.stripped[1] != 0)
        rep.notes.push_back(std::string(name) + " at m = " + std::to_string(prev) + " discarded " +
                            std::to_string(t.stripped[0] + t.stripped[1]) +
                            (up ? " projective" : " injective") + " summands");
      const auto d0 = static_cast<std::int64_t>(x.dim(0)), d1 = static_cast<std::int64_t>(x.dim(1));
      const auto want = up ? coxeter_dims(x.r(), d0, d1) : coxeter_inv_dims(x.r(), d0, d1);
      x = std::move(t.module);
      const int e = sign * k;
      record(e, x);
      steps[e].coxeter = want[0] == static_cast<std::int64_t>(x.dim(0)) && want[1] == static_cast<std::int64_t>(x.dim(1));
      if (!boundary && (up ? steps[e].eip : steps[e].ekp)) boundary = e;
    }
  };
  scan(true);
  scan(false);

  for (auto& [e, st] : steps) {
    if (st.eip && !rep.m0) rep.m0 = e;
    if (st.ekp) rep.m1 = e;
    rep.shifts.push_back(st);
  }
  if (rep.m0 && rep.m1) rep.width = *rep.m0 - *rep.m1 - 1;
  return rep;
}

TauOrbitReport width(const BeilinsonRep& m, const OrbitOptions& opts) {
  TauOrbitReport rep = tau_orbit(m, opts);
  rep.notes.push_back("base module assumed quasi-simple");
  bool zero_arrow = false;
  for (int l = 0; l < m.r(); ++l) zero_arrow = zero_arrow || m.map(0, l).is_zero();
  if (m.dims() == std::vector<std::size_t>{1, 1} && zero_arrow)
    rep.notes.push_back("some arrow acts by zero; quasi-simplicity is not established for this case");
  if (!rep.width) rep.notes.push_back("a boundary was not reached within the bounds; width unknown");
  return rep;
}

bool wmod_shift_check(const PrimeField& field, int r, int m) {
  if (r == 2)
    throw ParameterError("the shift check requires r >= 3; for r = 2, tau(M_{m,2}) is EKP instead");
  if (r < 3) throw ParameterError("wmod_shift_check requires r >= 3");
  if (m <= 2) throw ParameterError("wmod_shift_check requires m > 2");
  return is_eip_def(tau(m_module(field, 2, r, m, 2))).verdict &&
         is_ekp_def(tau_inv(w_module(field, 2, r, m, 2))).verdict;
}

std::string to_dot(const TauOrbitReport& report) {
  std::ostringstream os;
  os << "digraph orbit {\n  rankdir=LR;\n  node [shape=box];\n";
  for (const auto& st : report.shifts) {
    os << "  \"m" << st.m << "\" [label=\"tau^" << st.m << "\\n(";
    for (std::size_t i = 0; i < st.dims.size(); ++i) os << (i ? "," : "") << st.dims[i];
    os << ')';
    if (st.eip) os << " \xE2\x88\x87";
    if (st.ekp) os << " \xCE\x94";
    os << '"';
    if (st.eip || st.ekp) os << ", style=filled, fillcolor=\"" << (st.eip ? "lightblue" : "lightyellow") << '"';
    os << "];\n";
  }
  for (std::size_t k = 0; k + 1 < report.shifts.size(); ++k)
    os << "  \"m" << report.shifts[k].m << "\" -> \"m" << report.shifts[k + 1].m << "\" [label=\"tau\", style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace eip
