#include <functional>
#include <random>

#include "eip/ermodule.hpp"

namespace eip {

std::string to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::yes: return "yes";
    case IsoVerdict::no: return "no";
    case IsoVerdict::probably_not: return "probably_not";
  }
  return "?";
}

std::string to_string(LocalityRegime r) {
  switch (r) {
    case LocalityRegime::exhaustive: return "exhaustive";
    case LocalityRegime::frobenius: return "frobenius";
    case LocalityRegime::heuristic: return "heuristic";
  }
  return "?";
}

std::string to_string(IndecVerdict v) {
  switch (v) {
    case IndecVerdict::yes: return "yes";
    case IndecVerdict::decomposable: return "decomposable";
    case IndecVerdict::probably_yes: return "probably_yes";
  }
  return "?";
}

namespace {

// p^k when it does not exceed `limit`.
std::optional<std::uint64_t> bounded_power(std::uint64_t p, std::size_t k, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > limit / p) return std::nullopt;
    v *= p;
  }
  return v;
}

Matrix random_element(const std::vector<Matrix>& basis, std::mt19937_64& rng) {
  const PrimeField& f = basis.front().field();
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p() - 1);
  Matrix x(f, basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) {
    const auto c = static_cast<Scalar>(dist(rng));
    if (c != 0) x = x + scale(b, c);
  }
  return x;
}

// Visits every element of the span except 0, stopping when `visit` returns
// true. Each odometer step adds one basis element, so the running sum is kept
// incrementally (a digit wrapping from p-1 to 0 also adds its element once).
bool enumerate_span(const std::vector<Matrix>& basis, const std::function<bool(const Matrix&)>& visit) {
  const PrimeField& f = basis.front().field();
  std::vector<std::uint64_t> digits(basis.size(), 0);
  Matrix x(f, basis.front().rows(), basis.front().cols());
  while (true) {
    std::size_t i = 0;
    while (i < digits.size()) {
      x = x + basis[i];
      if (++digits[i] < f.p()) break;
      digits[i] = 0;
      ++i;
    }
    if (i == digits.size()) return false;
    if (visit(x)) return true;
  }
}

bool is_nilpotent(const Matrix& x) {
  Scalar tr = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) tr = x.field().add(tr, x(i, i));
  if (tr != 0) return false;
  return power(x, x.rows()).is_zero();
}

bool is_splitter(const Matrix& x) { return !is_invertible(x) && !is_nilpotent(x); }

Matrix vectorize(const std::vector<Matrix>& ms) {
  const std::size_t n = ms.front().rows() * ms.front().cols();
  Matrix v(ms.front().field(), n, ms.size());
  for (std::size_t c = 0; c < ms.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) v.set(i, c, ms[c].data()[i]);
  return v;
}

// Given z with z^p = z and z not scalar, z - c is a splitter for any
// eigenvalue c; eigenvalues are roots of the minimal polynomial, all in F_p.
std::optional<Matrix> splitter_from_semisimple(const Matrix& z) {
  const PrimeField& f = z.field();
  const std::size_t n = z.rows();
  std::vector<Matrix> powers{Matrix::identity(f, n)};
  Vector poly;
  while (true) {
    Matrix next = z * powers.back();
    auto c = solve(vectorize(powers), next.data());
    if (c) {
      poly.resize(c->size() + 1);
      for (std::size_t i = 0; i < c->size(); ++i) poly[i] = f.neg((*c)[i]);
      poly.back() = 1;
      break;
    }
    powers.push_back(std::move(next));
  }
  if (f.p() > (std::uint64_t{1} << 22)) return std::nullopt;
  for (std::uint64_t c = 0; c < f.p(); ++c) {
    Scalar v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = f.add(f.mul(v, static_cast<Scalar>(c)), poly[i]);
    if (v != 0) continue;
    Matrix y = z - scale(Matrix::identity(f, n), static_cast<Scalar>(c));
    if (is_splitter(y)) return y;
  }
  return std::nullopt;
}

std::optional<Matrix> splitter_near(const Matrix& z) {
  if (is_splitter(z)) return z;
  const PrimeField& f = z.field();
  if (f.p() > 64) return std::nullopt;
  for (Scalar c = 1; c < f.p(); ++c) {
    Matrix y = z - scale(Matrix::identity(f, z.rows()), c);
    if (is_splitter(y)) return y;
  }
  return std::nullopt;
}

struct Analysis {
  EndAlgebra alg;
  std::optional<Matrix> splitter;
};

Analysis analyze(std::vector<Matrix> basis, const SearchOptions& opts) {
  if (basis.empty()) throw ParameterError("algebra with empty basis");
  Analysis out{EndAlgebra{std::move(basis), true, true, LocalityRegime::heuristic}, std::nullopt};
  const auto& b = out.alg.basis;
  const PrimeField& f = b.front().field();
  for (std::size_t i = 0; i < b.size() && out.alg.commutative; ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (!(b[i] * b[j] == b[j] * b[i])) {
        out.alg.commutative = false;
        break;
      }

  if (b.size() <= 12 && bounded_power(f.p(), b.size(), opts.exhaustive_limit)) {
    out.alg.regime = LocalityRegime::exhaustive;
    enumerate_span(b, [&](const Matrix& x) {
      if (!is_splitter(x)) return false;
      out.splitter = x;
      return true;
    });
    out.alg.local = !out.splitter;
    return out;
  }

  if (out.alg.commutative) {
    // a -> a^p is F_p-linear on a commutative algebra in characteristic p;
    // its fixed space is F_p^t, t the number of local factors.
    out.alg.regime = LocalityRegime::frobenius;
    const Matrix coords = vectorize(b);
    std::vector<Matrix> images;
    for (const auto& e : b) images.push_back(power(e, f.p()));
    auto fm = solve(coords, vectorize(images));
    if (!fm) throw ParameterError("basis does not span a subalgebra");
    Matrix fixed = kernel_basis(*fm - Matrix::identity(f, b.size()));
    out.alg.local = fixed.cols() == 1;
    if (!out.alg.local) {
      for (std::size_t t = 0; t < fixed.cols() && !out.splitter; ++t) {
        Matrix z(f, b.front().rows(), b.front().cols());
        for (std::size_t i = 0; i < b.size(); ++i)
          if (fixed(i, t) != 0) z = z + scale(b[i], fixed(i, t));
        out.splitter = splitter_from_semisimple(z);
      }
    }
    return out;
  }

  // A local algebra has no element that is neither invertible nor nilpotent.
  out.alg.regime = LocalityRegime::heuristic;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials && !out.splitter; ++t) out.splitter = splitter_near(random_element(b, rng));
  out.alg.local = !out.splitter;
  return out;
}

// Complementary idempotents from the Fitting decomposition of a splitter.
std::vector<Matrix> fitting_projectors(const Matrix& phi) {
  const PrimeField& f = phi.field();
  const std::size_t n = phi.rows();
  const Matrix psi = power(phi, n);
  const Matrix im = image_basis(psi);
  const Matrix ker = kernel_basis(psi);
  const Matrix basis = hstack(im, ker);
  auto inv = inverse(basis);
  if (!inv) throw Error("Fitting decomposition failed");
  Matrix d(f, n, n);
  for (std::size_t i = 0; i < im.cols(); ++i) d.set(i, i, 1);
  Matrix e = basis * d * *inv;
  return {e, Matrix::identity(f, n) - e};
}

IndecResult indecomposability(std::vector<Matrix> basis, const SearchOptions& opts) {
  if (basis.size() == 1)
    return {IndecVerdict::yes, {}, "End is one-dimensional"};
  Analysis a = analyze(std::move(basis), opts);
  const std::string regime = to_string(a.alg.regime);
  if (a.splitter)
    return {IndecVerdict::decomposable, fitting_projectors(*a.splitter),
            "endomorphism neither invertible nor nilpotent (" + regime + ")"};
  if (a.alg.local && a.alg.regime != LocalityRegime::heuristic)
    return {IndecVerdict::yes, {}, "End is local (" + regime + ")"};
  if (!a.alg.local)
    return {IndecVerdict::decomposable, {}, "End has several local factors (" + regime + ")"};
  return {IndecVerdict::probably_yes, {},
          "no idempotent found in " + std::to_string(opts.trials) + " random trials"};
}

IsoResult search_invertible(const std::vector<Matrix>& basis, const SearchOptions& opts) {
  if (basis.empty()) return {IsoVerdict::no, std::nullopt, "Hom is zero"};
  std::mt19937_64 rng(opts.seed);
  for (std::size_t t = 0; t < opts.trials; ++t) {
    Matrix x = random_element(basis, rng);
    if (is_invertible(x)) return {IsoVerdict::yes, x, "invertible homomorphism found"};
  }
  if (bounded_power(basis.front().field().p(), basis.size(), opts.exhaustive_limit)) {
    std::optional<Matrix> found;
    enumerate_span(basis, [&](const Matrix& x) {
      if (!is_invertible(x)) return false;
      found = x;
      return true;
    });
    if (found) return {IsoVerdict::yes, found, "invertible homomorphism found by enumeration"};
    return {IsoVerdict::no, std::nullopt, "Hom enumerated: no invertible element"};
  }
  return {IsoVerdict::probably_not, std::nullopt,
          "no invertible element in " + std::to_string(opts.trials) + " random trials"};
}

std::vector<std::size_t> series_dims(const std::vector<Matrix>& s) {
  std::vector<std::size_t> out;
  for (const auto& m : s) out.push_back(m.cols());
  return out;
}

std::vector<ProjPoint> probe_points(const PrimeField& f, int r, std::uint64_t seed) {
  std::uint64_t count = 0;
  if (auto pr = bounded_power(f.p(), static_cast<std::size_t>(r), 64 * f.p())) count = (*pr - 1) / (f.p() - 1);
  if (count != 0 && count <= 64) return projective_points(f, r);
  return sample_points(f, r, 32, seed);
}

}  // namespace

EndAlgebra analyze_algebra(std::vector<Matrix> basis, const SearchOptions& opts) {
  return analyze(std::move(basis), opts).alg;
}

EndAlgebra end_algebra(const ErModule& m, const SearchOptions& opts) {
  if (m.dim() == 0) throw ParameterError("End of the zero module");
  return analyze_algebra(module_hom_space(m, m), opts);
}

IndecResult is_indecomposable(const ErModule& m, const SearchOptions& opts) {
  if (m.dim() == 0) throw ParameterError("the zero module is not indecomposable");
  return indecomposability(module_hom_space(m, m), opts);
}

IndecResult is_indecomposable(const BeilinsonRep& rep, const SearchOptions& opts) {
  if (rep.is_zero()) throw ParameterError("the zero representation is not indecomposable");
  std::vector<Matrix> basis;
  for (const auto& phi : hom_space(rep, rep)) basis.push_back(total_matrix(phi));
  return indecomposability(std::move(basis), opts);
}

IsoResult is_isomorphic(const ErModule& m, const ErModule& n, const SearchOptions& opts) {
  require_same_config(m, n, "is_isomorphic");
  if (m.dim() != n.dim()) return {IsoVerdict::no, std::nullopt, "dimensions differ"};
  if (m.dim() == 0) return {IsoVerdict::yes, Matrix(m.field(), 0, 0), "zero modules"};
  if (series_dims(radical_series(m)) != series_dims(radical_series(n)))
    return {IsoVerdict::no, std::nullopt, "radical series differ"};
  if (series_dims(socle_series(m)) != series_dims(socle_series(n)))
    return {IsoVerdict::no, std::nullopt, "socle series differ"};
  for (const auto& a : probe_points(m.field(), m.r(), opts.seed))
    if (!(jordan_type(m, a) == jordan_type(n, a)))
      return {IsoVerdict::no, std::nullopt, "Jordan types differ at " + a.to_string()};
  return search_invertible(module_hom_space(m, n), opts);
}

IsoResult is_isomorphic(const BeilinsonRep& x, const BeilinsonRep& y, const SearchOptions& opts) {
  require_same_config(x, y, "is_isomorphic");
  if (x.dims() != y.dims()) return {IsoVerdict::no, std::nullopt, "dimension vectors differ"};
  if (x.is_zero()) return {IsoVerdict::yes, Matrix(x.field(), 0, 0), "zero representations"};
  for (const auto& a : probe_points(x.field(), x.r(), opts.seed)) {
    auto sx = alpha_operator(x, a), sy = alpha_operator(y, a);
    for (std::size_t i = 0; i < sx.size(); ++i)
      if (rank(sx[i]) != rank(sy[i]))
        return {IsoVerdict::no, std::nullopt, "ranks differ at " + a.to_string()};
  }
  std::vector<Matrix> basis;
  for (const auto& phi : hom_space(x, y)) basis.push_back(total_matrix(phi));
  return search_invertible(basis, opts);
}

}  // namespace eip
