#include "eip/ermodule.hpp"

#include <algorithm>
#include <sstream>

namespace eip {

ErModule::ErModule(PrimeField field, int r, std::size_t dim, std::vector<Matrix> ops)
    : field_(field), r_(r), dim_(dim), ops_(std::move(ops)) {
  if (r_ < 1) throw ParameterError("kE_r-module requires r >= 1");
  if (ops_.size() != static_cast<std::size_t>(r_))
    throw DimensionError("expected " + std::to_string(r_) + " operators, got " +
                         std::to_string(ops_.size()));
  for (const auto& op : ops_) {
    if (!(op.field() == field_)) throw ConfigError("operator over a different field");
    if (op.rows() != dim_ || op.cols() != dim_)
      throw DimensionError("operator of shape " + std::to_string(op.rows()) + "x" +
                           std::to_string(op.cols()) + " on a " + std::to_string(dim_) +
                           "-dimensional module");
  }
}

std::vector<std::string> validate(const ErModule& m) {
  std::vector<std::string> out;
  for (int a = 0; a < m.r(); ++a)
    for (int b = a + 1; b < m.r(); ++b)
      if (!(m.op(a) * m.op(b) == m.op(b) * m.op(a)))
        out.push_back("x_" + std::to_string(a) + " and x_" + std::to_string(b) + " do not commute");
  const std::uint64_t e = std::min<std::uint64_t>(m.field().p(), std::max<std::size_t>(m.dim(), 1));
  for (int a = 0; a < m.r(); ++a)
    if (!power(m.op(a), e).is_zero())
      out.push_back("x_" + std::to_string(a) + "^p is nonzero");
  return out;
}

JordanType JordanType::from_counts(std::vector<std::size_t> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return JordanType{std::move(counts)};
}

std::size_t JordanType::total_dim() const noexcept {
  std::size_t s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) s += (i + 1) * counts[i];
  return s;
}

std::string JordanType::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = counts.size(); i-- > 0;) {
    if (counts[i] == 0) continue;
    os << (first ? "" : "+");
    if (counts[i] != 1) os << counts[i];
    os << '[' << i + 1 << ']';
    first = false;
  }
  return first ? "0" : os.str();
}

ErModule forget(const BeilinsonRep& rep) {
  if (static_cast<std::uint64_t>(rep.n()) > rep.field().p())
    throw ParameterError("forgetful functor requires n <= p (got n = " + std::to_string(rep.n()) +
                         ", p = " + std::to_string(rep.field().p()) + ")");
  const PrimeField& f = rep.field();
  std::vector<std::size_t> offset{0};
  for (auto d : rep.dims()) offset.push_back(offset.back() + d);
  const std::size_t dim = offset.back();
  std::vector<Matrix> ops;
  for (int l = 0; l < rep.r(); ++l) {
    Matrix x(f, dim, dim);
    for (int v = 0; v + 1 < rep.n(); ++v) {
      const Matrix& m = rep.map(v, l);
      const std::size_t r0 = offset[static_cast<std::size_t>(v) + 1], c0 = offset[static_cast<std::size_t>(v)];
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) x.set(r0 + a, c0 + b, m(a, b));
    }
    ops.push_back(std::move(x));
  }
  return ErModule(f, rep.r(), dim, std::move(ops));
}

ErModule trivial_module(const PrimeField& field, int r, std::size_t m) {
  return ErModule(field, r, m, std::vector<Matrix>(static_cast<std::size_t>(r), Matrix(field, m, m)));
}

ErModule dual(const ErModule& m) {
  std::vector<Matrix> ops;
  for (const auto& op : m.ops()) ops.push_back(transpose(op));
  return ErModule(m.field(), m.r(), m.dim(), std::move(ops));
}

void require_same_config(const ErModule& a, const ErModule& b, const char* what) {
  if (!(a.field() == b.field()) || a.r() != b.r())
    throw ConfigError(std::string(what) + ": modules for E_" + std::to_string(a.r()) + " over F_" +
                      std::to_string(a.field().p()) + " and E_" + std::to_string(b.r()) +
                      " over F_" + std::to_string(b.field().p()));
}

ErModule direct_sum(const ErModule& a, const ErModule& b) {
  require_same_config(a, b, "direct_sum");
  std::vector<Matrix> ops;
  for (int l = 0; l < a.r(); ++l) {
    std::vector<Matrix> blocks{a.op(l), b.op(l)};
    ops.push_back(block_diag(blocks));
  }
  return ErModule(a.field(), a.r(), a.dim() + b.dim(), std::move(ops));
}

Matrix point_operator(const ErModule& m, const ProjPoint& alpha) {
  if (alpha.r() != static_cast<std::size_t>(m.r())) throw ParameterError("point dimension does not match r");
  Matrix n(m.field(), m.dim(), m.dim());
  for (int l = 0; l < m.r(); ++l)
    if (alpha[static_cast<std::size_t>(l)] != 0) n = n + scale(m.op(l), alpha[static_cast<std::size_t>(l)]);
  return n;
}

JordanType jordan_type(const ErModule& m, const ProjPoint& alpha) {
  const Matrix n = point_operator(m, alpha);
  // ranks[j] = rank(N^j); stop once it reaches zero.
  std::vector<std::size_t> ranks{m.dim()};
  Matrix pw = Matrix::identity(m.field(), m.dim());
  while (ranks.back() != 0) {
    pw = n * pw;
    ranks.push_back(rank(pw));
    if (ranks.size() > m.dim() + 1) break;
  }
  ranks.push_back(0);
  std::vector<std::size_t> counts;
  for (std::size_t i = 1; i + 1 < ranks.size(); ++i)
    counts.push_back(ranks[i - 1] + ranks[i + 1] - 2 * ranks[i]);
  return JordanType::from_counts(std::move(counts));
}

JordanType jt_formula(int n, int d, int r) {
  if (d < 1 || d > n) throw ParameterError("jt_formula requires 1 <= d <= n");
  std::vector<std::size_t> counts(static_cast<std::size_t>(d), 0);
  counts[static_cast<std::size_t>(d) - 1] = binomial(r + n - d - 1, n - d);
  for (int i = 1; i < d; ++i) counts[static_cast<std::size_t>(i) - 1] = binomial(r + n - 2 - i, n - i);
  return JordanType::from_counts(std::move(counts));
}

Matrix radical(const ErModule& m) {
  Matrix all(m.field(), m.dim(), 0);
  for (const auto& op : m.ops()) all = hstack(all, op);
  return image_basis(all);
}

Matrix socle(const ErModule& m) {
  Matrix all(m.field(), 0, m.dim());
  for (const auto& op : m.ops()) all = vstack(all, op);
  return kernel_basis(all);
}

std::vector<Matrix> radical_series(const ErModule& m) {
  std::vector<Matrix> series{Matrix::identity(m.field(), m.dim())};
  while (series.back().cols() != 0) {
    Matrix next(m.field(), m.dim(), 0);
    for (const auto& op : m.ops()) next = hstack(next, op * series.back());
    series.push_back(image_basis(next));
  }
  return series;
}

std::vector<Matrix> socle_series(const ErModule& m) {
  std::vector<Matrix> series{Matrix(m.field(), m.dim(), 0)};
  while (series.back().cols() != m.dim()) {
    Cokernel c = cokernel_projection(series.back());
    Matrix stacked(m.field(), 0, m.dim());
    for (const auto& op : m.ops()) stacked = vstack(stacked, c.projector * op);
    Matrix next = kernel_basis(stacked);
    if (next.cols() == series.back().cols()) throw Error("socle series stalled: operators not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t loewy_length(const ErModule& m) { return radical_series(m).size() - 1; }

ErModule group_algebra_radical_power(const PrimeField& field, int r, int s) {
  const int p = static_cast<int>(field.p());
  const int top = r * (p - 1);
  if (s < 0 || s > top + 1)
    throw ParameterError("radical power s must lie in [0, r(p-1)+1] = [0, " + std::to_string(top + 1) +
                         "] (got " + std::to_string(s) + ")");
  std::vector<std::vector<int>> basis;
  for (int deg = s; deg <= top; ++deg)
    for (auto& e : monomials(r, deg))
      if (std::all_of(e.begin(), e.end(), [p](int x) { return x <= p - 1; })) basis.push_back(e);
  std::vector<Matrix> ops;
  for (int l = 0; l < r; ++l) {
    Matrix x(field, basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      auto e = basis[k];
      if (++e[static_cast<std::size_t>(l)] > p - 1) continue;
      auto it = std::find(basis.begin(), basis.end(), e);
      x.set(static_cast<std::size_t>(it - basis.begin()), k, 1);
    }
    ops.push_back(std::move(x));
  }
  return ErModule(field, r, basis.size(), std::move(ops));
}

ErModule twist(const ErModule& m, const Matrix& g) {
  if (g.rows() != static_cast<std::size_t>(m.r()) || g.cols() != static_cast<std::size_t>(m.r()))
    throw DimensionError("twist needs an r x r matrix");
  auto h = inverse(g);
  if (!h) throw ParameterError("twist by a singular matrix");
  std::vector<Matrix> ops;
  for (int l = 0; l < m.r(); ++l) {
    Matrix x(m.field(), m.dim(), m.dim());
    for (int k = 0; k < m.r(); ++k) {
      const Scalar c = (*h)(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
      if (c != 0) x = x + scale(m.op(k), c);
    }
    ops.push_back(std::move(x));
  }
  return ErModule(m.field(), m.r(), m.dim(), std::move(ops));
}

std::vector<Matrix> module_hom_space(const ErModule& m, const ErModule& n) {
  require_same_config(m, n, "module_hom_space");
  const PrimeField& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  // phi(a, b) at a*dm + b; equations (N_l phi - phi M_l)(a, b) = 0.
  Matrix system(f, static_cast<std::size_t>(m.r()) * dn * dm, dn * dm);
  std::size_t eq = 0;
  for (int l = 0; l < m.r(); ++l) {
    const Matrix& ml = m.op(l);
    const Matrix& nl = n.op(l);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b, ++eq) {
        for (std::size_t c = 0; c < dn; ++c)
          if (nl(a, c) != 0) system.set(eq, c * dm + b, nl(a, c));
        for (std::size_t c = 0; c < dm; ++c)
          if (ml(c, b) != 0) system.set(eq, a * dm + c, f.sub(system(eq, a * dm + c), ml(c, b)));
      }
  }
  Matrix k = kernel_basis(system);
  std::vector<Matrix> basis;
  for (std::size_t t = 0; t < k.cols(); ++t) {
    Matrix phi(f, dn, dm);
    for (std::size_t a = 0; a < dn; ++a)
      for (std::size_t b = 0; b < dm; ++b) phi.set(a, b, k(a * dm + b, t));
    basis.push_back(std::move(phi));
  }
  return basis;
}

Matrix total_matrix(const Morphism& phi) { return block_diag(phi.components); }

}  // namespace eip
