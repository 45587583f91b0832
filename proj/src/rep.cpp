#include "eip/rep.hpp"

#include <map>
#include <sstream>

namespace eip {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

BeilinsonRep::BeilinsonRep(PrimeField field, int n, int r, std::vector<std::size_t> dims,
                           std::vector<std::vector<Matrix>> maps)
    : field_(field), n_(n), r_(r), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (n_ < 2) throw ParameterError("B(n,r) requires n >= 2");
  if (r_ < 1) throw ParameterError("B(n,r) requires r >= 1");
  if (dims_.size() != static_cast<std::size_t>(n_))
    throw DimensionError("expected " + std::to_string(n_) + " vertex dimensions, got " +
                         std::to_string(dims_.size()));
  if (maps_.size() != static_cast<std::size_t>(n_ - 1))
    throw DimensionError("expected " + std::to_string(n_ - 1) + " levels of maps, got " +
                         std::to_string(maps_.size()));
  for (std::size_t lvl = 0; lvl < maps_.size(); ++lvl) {
    if (maps_[lvl].size() != static_cast<std::size_t>(r_))
      throw DimensionError("level " + std::to_string(lvl) + " has " +
                           std::to_string(maps_[lvl].size()) + " arrows, expected " +
                           std::to_string(r_));
    for (std::size_t l = 0; l < maps_[lvl].size(); ++l) {
      const Matrix& m = maps_[lvl][l];
      if (!(m.field() == field_)) throw ConfigError("map over a different field");
      if (m.rows() != dims_[lvl + 1] || m.cols() != dims_[lvl])
        throw DimensionError("map at level " + std::to_string(lvl) + " arrow " +
                             std::to_string(l) + " has shape " + shape(m) + ", expected " +
                             std::to_string(dims_[lvl + 1]) + "x" + std::to_string(dims_[lvl]));
    }
  }
}

BeilinsonRep BeilinsonRep::zero_maps(PrimeField field, int n, int r,
                                     std::vector<std::size_t> dims) {
  if (n < 2) throw ParameterError("B(n,r) requires n >= 2");
  if (dims.size() != static_cast<std::size_t>(n)) throw DimensionError("dims length != n");
  std::vector<std::vector<Matrix>> maps;
  for (int lvl = 0; lvl + 1 < n; ++lvl)
    maps.emplace_back(static_cast<std::size_t>(r),
                      Matrix(field, dims[static_cast<std::size_t>(lvl) + 1],
                             dims[static_cast<std::size_t>(lvl)]));
  return BeilinsonRep(field, n, r, std::move(dims), std::move(maps));
}

std::size_t BeilinsonRep::total_dim() const noexcept {
  std::size_t s = 0;
  for (auto d : dims_) s += d;
  return s;
}

std::vector<Violation> validate(const BeilinsonRep& rep) {
  std::vector<Violation> out;
  for (int lvl = 0; lvl + 2 < rep.n(); ++lvl)
    for (int a = 0; a < rep.r(); ++a)
      for (int b = a + 1; b < rep.r(); ++b)
        if (!(rep.map(lvl + 1, a) * rep.map(lvl, b) == rep.map(lvl + 1, b) * rep.map(lvl, a)))
          out.push_back({lvl, a, b});
  return out;
}

void require_valid(const BeilinsonRep& rep) {
  auto v = validate(rep);
  if (!v.empty())
    throw ParameterError("commutativity relation fails at level " + std::to_string(v[0].level) +
                         " for arrows " + std::to_string(v[0].arrow_a) + "," +
                         std::to_string(v[0].arrow_b));
}

// ---------------------------------------------------------------------------

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t result = 1;
  for (int t = 1; t <= k; ++t) result = result * static_cast<std::size_t>(n - k + t) / static_cast<std::size_t>(t);
  return result;
}

std::size_t monomial_count(int r, int degree) {
  if (degree < 0) return 0;
  return binomial(r + degree - 1, degree);
}

std::vector<std::vector<int>> monomials(int r, int degree) {
  std::vector<std::vector<int>> out;
  if (degree < 0 || r < 1) return out;
  if (r == 1) return {{degree}};
  for (int e = degree; e >= 0; --e)
    for (auto& rest : monomials(r - 1, degree - e)) {
      std::vector<int> m{e};
      m.insert(m.end(), rest.begin(), rest.end());
      out.push_back(std::move(m));
    }
  return out;
}

Matrix multiplication_matrix(const PrimeField& field, int r, int degree, int var) {
  auto src = monomials(r, degree);
  auto dst = monomials(r, degree + 1);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < dst.size(); ++k) index.emplace(dst[k], k);
  Matrix m(field, dst.size(), src.size());
  for (std::size_t k = 0; k < src.size(); ++k) {
    auto e = src[k];
    ++e[static_cast<std::size_t>(var)];
    m.set(index.at(e), k, 1);
  }
  return m;
}

namespace {

// Representation whose vertex v carries the degree-deg(v) monomials (zero when
// deg(v) is nullopt) with arrows acting by variable multiplication.
template <class DegreeOf>
BeilinsonRep monomial_rep(const PrimeField& field, int n, int r, DegreeOf degree_of) {
  std::vector<std::size_t> dims;
  for (int v = 0; v < n; ++v) {
    auto deg = degree_of(v);
    dims.push_back(deg ? monomial_count(r, *deg) : 0);
  }
  std::vector<std::vector<Matrix>> maps;
  for (int v = 0; v + 1 < n; ++v) {
    std::vector<Matrix> level;
    auto deg = degree_of(v);
    for (int l = 0; l < r; ++l) {
      if (deg && degree_of(v + 1))
        level.push_back(multiplication_matrix(field, r, *deg, l));
      else
        level.emplace_back(field, dims[static_cast<std::size_t>(v) + 1],
                           dims[static_cast<std::size_t>(v)]);
    }
    maps.push_back(std::move(level));
  }
  return BeilinsonRep(field, n, r, std::move(dims), std::move(maps));
}

void check_vertex(int n, int i, const char* what) {
  if (i < 0 || i >= n)
    throw ParameterError(std::string(what) + ": vertex " + std::to_string(i) +
                         " outside [0, " + std::to_string(n - 1) + "]");
}

}  // namespace

BeilinsonRep projective(const PrimeField& field, int n, int r, int i) {
  check_vertex(n, i, "projective");
  return monomial_rep(field, n, r, [i](int v) -> std::optional<int> {
    if (v < i) return std::nullopt;
    return v - i;
  });
}

BeilinsonRep injective(const PrimeField& field, int n, int r, int i) {
  check_vertex(n, i, "injective");
  return dualize(projective(field, n, r, n - 1 - i));
}

BeilinsonRep simple(const PrimeField& field, int n, int r, int i) {
  check_vertex(n, i, "simple");
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  dims[static_cast<std::size_t>(i)] = 1;
  return BeilinsonRep::zero_maps(field, n, r, std::move(dims));
}

namespace {

void check_module_params(const PrimeField& field, int n, int m, int d) {
  if (d < 2) throw ParameterError("M/W-module requires d >= 2 (got d = " + std::to_string(d) + ")");
  if (d > n)
    throw ParameterError("M/W-module requires d <= n (got d = " + std::to_string(d) +
                         ", n = " + std::to_string(n) + ")");
  if (static_cast<std::uint64_t>(n) > field.p())
    throw ParameterError("M/W-module requires n <= p (got n = " + std::to_string(n) +
                         ", p = " + std::to_string(field.p()) + ")");
  if (d > m)
    throw ParameterError("M/W-module requires d <= m (got d = " + std::to_string(d) +
                         ", m = " + std::to_string(m) + ")");
}

}  // namespace

BeilinsonRep m_module(const PrimeField& field, int n, int r, int m, int d) {
  check_module_params(field, n, m, d);
  return monomial_rep(field, n, r, [=](int v) -> std::optional<int> {
    if (v < n - d) return std::nullopt;
    return m - n + v;
  });
}

BeilinsonRep w_module(const PrimeField& field, int n, int r, int m, int d) {
  return dualize(m_module(field, n, r, m, d));
}

BeilinsonRep x_module(const PrimeField& field, int n, int r, const ProjPoint& alpha, int i,
                      int j) {
  if (i < 0 || i > n - 2)
    throw ParameterError("x_module requires 0 <= i <= n-2 (got i = " + std::to_string(i) + ")");
  if (j < 1 || j > n - 1 - i)
    throw ParameterError("x_module requires 1 <= j <= n-1-i (got j = " + std::to_string(j) + ")");
  if (alpha.r() != static_cast<std::size_t>(r))
    throw ParameterError("x_module: point has " + std::to_string(alpha.r()) +
                         " coordinates, expected r = " + std::to_string(r));
  BeilinsonRep proj = projective(field, n, r, i);
  Subspaces sub;
  for (int v = 0; v < n; ++v) {
    const std::size_t dv = proj.dim(v);
    if (v < i + j) {
      sub.emplace_back(field, dv, 0);
      continue;
    }
    // Multiplication by the linear form, j times, from degree v-i-j to v-i.
    const int start = v - i - j;
    Matrix acc = Matrix::identity(field, monomial_count(r, start));
    for (int k = start; k < v - i; ++k) {
      Matrix form(field, monomial_count(r, k + 1), monomial_count(r, k));
      for (int l = 0; l < r; ++l)
        form = form + scale(multiplication_matrix(field, r, k, l), alpha[static_cast<std::size_t>(l)]);
      acc = form * acc;
    }
    sub.push_back(image_basis(acc));
  }
  if (!is_subrepresentation(proj, sub))
    throw Error("x_module: image of the linear form is not a subrepresentation");
  return quotient(proj, sub);
}

// ---------------------------------------------------------------------------

BeilinsonRep dualize(const BeilinsonRep& rep) {
  const int n = rep.n();
  std::vector<std::size_t> dims(rep.dims().rbegin(), rep.dims().rend());
  std::vector<std::vector<Matrix>> maps;
  for (int lvl = 0; lvl + 1 < n; ++lvl) {
    std::vector<Matrix> level;
    for (int l = 0; l < rep.r(); ++l) level.push_back(transpose(rep.map(n - 2 - lvl, l)));
    maps.push_back(std::move(level));
  }
  return BeilinsonRep(rep.field(), n, rep.r(), std::move(dims), std::move(maps));
}

void require_same_config(const BeilinsonRep& x, const BeilinsonRep& y, const char* what) {
  if (!(x.field() == y.field()) || x.n() != y.n() || x.r() != y.r())
    throw ConfigError(std::string(what) + ": representations of B(" + std::to_string(x.n()) +
                      "," + std::to_string(x.r()) + ") over F_" + std::to_string(x.field().p()) +
                      " and B(" + std::to_string(y.n()) + "," + std::to_string(y.r()) +
                      ") over F_" + std::to_string(y.field().p()));
}

BeilinsonRep direct_sum(const BeilinsonRep& x, const BeilinsonRep& y) {
  require_same_config(x, y, "direct_sum");
  std::vector<std::size_t> dims;
  for (int v = 0; v < x.n(); ++v) dims.push_back(x.dim(v) + y.dim(v));
  std::vector<std::vector<Matrix>> maps;
  for (int lvl = 0; lvl + 1 < x.n(); ++lvl) {
    std::vector<Matrix> level;
    for (int l = 0; l < x.r(); ++l) {
      std::vector<Matrix> blocks{x.map(lvl, l), y.map(lvl, l)};
      level.push_back(block_diag(blocks));
    }
    maps.push_back(std::move(level));
  }
  return BeilinsonRep(x.field(), x.n(), x.r(), std::move(dims), std::move(maps));
}

std::vector<int> support(const BeilinsonRep& rep) {
  std::vector<int> out;
  for (int v = 0; v < rep.n(); ++v)
    if (rep.dim(v) != 0) out.push_back(v);
  return out;
}

bool is_standardly_graded(const BeilinsonRep& rep) {
  auto supp = support(rep);
  if (supp.empty()) return true;
  const PrimeField& f = rep.field();
  Matrix generated = Matrix::identity(f, rep.dim(supp.front()));
  for (int v = supp.front(); v + 1 < rep.n(); ++v) {
    Matrix next(f, rep.dim(v + 1), 0);
    for (int l = 0; l < rep.r(); ++l) next = hstack(next, rep.map(v, l) * generated);
    generated = image_basis(next);
    if (generated.cols() != rep.dim(v + 1)) return false;
  }
  return true;
}

bool is_costandardly_graded(const BeilinsonRep& rep) { return is_standardly_graded(dualize(rep)); }

std::vector<Matrix> alpha_operator(const BeilinsonRep& rep, const ProjPoint& alpha) {
  if (alpha.r() != static_cast<std::size_t>(rep.r()))
    throw ParameterError("point dimension does not match r");
  std::vector<Matrix> steps;
  for (int lvl = 0; lvl + 1 < rep.n(); ++lvl) {
    Matrix s(rep.field(), rep.dim(lvl + 1), rep.dim(lvl));
    for (int l = 0; l < rep.r(); ++l)
      if (alpha[static_cast<std::size_t>(l)] != 0)
        s = s + scale(rep.map(lvl, l), alpha[static_cast<std::size_t>(l)]);
    steps.push_back(std::move(s));
  }
  return steps;
}

std::size_t alpha_power_rank(const BeilinsonRep& rep, const ProjPoint& alpha, int j) {
  if (j < 1 || j > rep.n() - 1) throw ParameterError("power j must lie in [1, n-1]");
  auto steps = alpha_operator(rep, alpha);
  std::size_t total = 0;
  for (int i = 0; i + j < rep.n(); ++i) {
    Matrix comp = steps[static_cast<std::size_t>(i)];
    for (int k = 1; k < j; ++k) comp = steps[static_cast<std::size_t>(i + k)] * comp;
    total += rank(comp);
  }
  return total;
}

// ---------------------------------------------------------------------------

std::vector<Morphism> hom_space(const BeilinsonRep& x, const BeilinsonRep& y) {
  require_same_config(x, y, "hom_space");
  const PrimeField& f = x.field();
  const int n = x.n();
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + y.dim(v) * x.dim(v);
  const std::size_t unknowns = offset.back();
  std::size_t equations = 0;
  for (int v = 0; v + 1 < n; ++v) equations += static_cast<std::size_t>(x.r()) * y.dim(v + 1) * x.dim(v);

  // phi_v is stored row-major at offset[v]: entry (a, b) -> offset[v] + a*dimX_v + b.
  Matrix system(f, equations, unknowns);
  std::size_t eq = 0;
  for (int v = 0; v + 1 < n; ++v) {
    const std::size_t xv = x.dim(v), xw = x.dim(v + 1), yv = y.dim(v), yw = y.dim(v + 1);
    const std::size_t ov = offset[static_cast<std::size_t>(v)], ow = offset[static_cast<std::size_t>(v) + 1];
    for (int l = 0; l < x.r(); ++l) {
      const Matrix& mx = x.map(v, l);
      const Matrix& my = y.map(v, l);
      for (std::size_t a = 0; a < yw; ++a)
        for (std::size_t b = 0; b < xv; ++b, ++eq) {
          // (phi_{v+1} X_l)[a,b] - (Y_l phi_v)[a,b]
          for (std::size_t c = 0; c < xw; ++c)
            if (mx(c, b) != 0) system.set(eq, ow + a * xw + c, mx(c, b));
          for (std::size_t c = 0; c < yv; ++c)
            if (my(a, c) != 0)
              system.set(eq, ov + c * xv + b, f.sub(system(eq, ov + c * xv + b), my(a, c)));
        }
    }
  }
  Matrix kernel = kernel_basis(system);
  std::vector<Morphism> basis;
  for (std::size_t t = 0; t < kernel.cols(); ++t) {
    Morphism phi;
    for (int v = 0; v < n; ++v) {
      Matrix c(f, y.dim(v), x.dim(v));
      for (std::size_t a = 0; a < y.dim(v); ++a)
        for (std::size_t b = 0; b < x.dim(v); ++b)
          c.set(a, b, kernel(offset[static_cast<std::size_t>(v)] + a * x.dim(v) + b, t));
      phi.components.push_back(std::move(c));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

std::size_t hom_dim(const BeilinsonRep& x, const BeilinsonRep& y) { return hom_space(x, y).size(); }

bool is_morphism(const BeilinsonRep& x, const BeilinsonRep& y, const Morphism& phi) {
  require_same_config(x, y, "is_morphism");
  if (phi.components.size() != static_cast<std::size_t>(x.n())) return false;
  for (int v = 0; v < x.n(); ++v) {
    const Matrix& c = phi.components[static_cast<std::size_t>(v)];
    if (c.rows() != y.dim(v) || c.cols() != x.dim(v)) return false;
  }
  for (int v = 0; v + 1 < x.n(); ++v)
    for (int l = 0; l < x.r(); ++l)
      if (!(phi.components[static_cast<std::size_t>(v) + 1] * x.map(v, l) ==
            y.map(v, l) * phi.components[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

Morphism combine(const std::vector<Morphism>& basis, std::span<const Scalar> coeffs) {
  if (basis.empty() || coeffs.size() != basis.size())
    throw DimensionError("combine: coefficient count does not match basis");
  Morphism out;
  for (const auto& c : basis.front().components) out.components.emplace_back(c.field(), c.rows(), c.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v)
      out.components[v] = out.components[v] + scale(basis[k].components[v], coeffs[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool is_subrepresentation(const BeilinsonRep& rep, const Subspaces& sub) {
  if (sub.size() != static_cast<std::size_t>(rep.n())) return false;
  for (int v = 0; v + 1 < rep.n(); ++v)
    for (int l = 0; l < rep.r(); ++l)
      if (!contains(sub[static_cast<std::size_t>(v) + 1], rep.map(v, l) * sub[static_cast<std::size_t>(v)]))
        return false;
  return true;
}

BeilinsonRep subrepresentation(const BeilinsonRep& rep, const Subspaces& sub) {
  if (!is_subrepresentation(rep, sub)) throw ParameterError("subspaces are not arrow-stable");
  Subspaces basis;
  for (const auto& s : sub) basis.push_back(image_basis(s));
  std::vector<std::size_t> dims;
  for (const auto& b : basis) dims.push_back(b.cols());
  std::vector<std::vector<Matrix>> maps;
  for (int v = 0; v + 1 < rep.n(); ++v) {
    std::vector<Matrix> level;
    for (int l = 0; l < rep.r(); ++l) {
      auto c = solve(basis[static_cast<std::size_t>(v) + 1], rep.map(v, l) * basis[static_cast<std::size_t>(v)]);
      level.push_back(std::move(*c));
    }
    maps.push_back(std::move(level));
  }
  return BeilinsonRep(rep.field(), rep.n(), rep.r(), std::move(dims), std::move(maps));
}

BeilinsonRep quotient(const BeilinsonRep& rep, const Subspaces& sub) {
  if (!is_subrepresentation(rep, sub)) throw ParameterError("subspaces are not arrow-stable");
  const PrimeField& f = rep.field();
  std::vector<Cokernel> coks;
  std::vector<Matrix> lifts;
  std::vector<std::size_t> dims;
  for (int v = 0; v < rep.n(); ++v) {
    Cokernel c = cokernel_projection(sub[static_cast<std::size_t>(v)]);
    Matrix lift(f, rep.dim(v), c.dim);
    for (std::size_t s = 0; s < c.dim; ++s) lift.set(c.complement[s], s, 1);
    dims.push_back(c.dim);
    coks.push_back(std::move(c));
    lifts.push_back(std::move(lift));
  }
  std::vector<std::vector<Matrix>> maps;
  for (int v = 0; v + 1 < rep.n(); ++v) {
    std::vector<Matrix> level;
    for (int l = 0; l < rep.r(); ++l)
      level.push_back(coks[static_cast<std::size_t>(v) + 1].projector * rep.map(v, l) *
                      lifts[static_cast<std::size_t>(v)]);
    maps.push_back(std::move(level));
  }
  return BeilinsonRep(f, rep.n(), rep.r(), std::move(dims), std::move(maps));
}

Subspaces image_subspaces(const Morphism& phi) {
  Subspaces out;
  for (const auto& c : phi.components) out.push_back(image_basis(c));
  return out;
}

Subspaces kernel_subspaces(const Morphism& phi) {
  Subspaces out;
  for (const auto& c : phi.components) out.push_back(kernel_basis(c));
  return out;
}

BeilinsonRep image(const BeilinsonRep& y, const Morphism& phi) {
  return subrepresentation(y, image_subspaces(phi));
}

std::string describe(const BeilinsonRep& rep) {
  std::ostringstream os;
  os << "B(" << rep.n() << "," << rep.r() << ")-rep over F_" << rep.field().p() << " dims (";
  for (std::size_t v = 0; v < rep.dims().size(); ++v) os << (v ? "," : "") << rep.dims()[v];
  os << ')';
  return os.str();
}

}  // namespace eip
