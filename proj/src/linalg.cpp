#include "eip/linalg.hpp"

#include <algorithm>
#include <utility>

namespace eip {

namespace {

// Gauss-Jordan elimination in place. With `reduce_above` false only the rows
// below each pivot are cleared (enough for rank). Row updates for a pivot are
// independent and run in parallel once the trailing block is large enough.
std::vector<std::size_t> eliminate(Matrix& m, bool reduce_above) {
  const PrimeField& f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < nc && prow < nr; ++c) {
    std::size_t sel = prow;
    while (sel < nr && m(sel, c) == 0) ++sel;
    if (sel == nr) continue;
    if (sel != prow) std::swap_ranges(m.row_mut(sel).begin(), m.row_mut(sel).end(),
                                      m.row_mut(prow).begin());
    {
      auto pr = m.row_mut(prow);
      const Scalar iv = f.inv(pr[c]);
      for (std::size_t j = c; j < nc; ++j) pr[j] = f.mul(pr[j], iv);
    }
    const auto pr = m.row(prow);
    const std::size_t first = reduce_above ? 0 : prow + 1;
    const bool parallel = (nr - first) * (nc - c) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t si = static_cast<std::ptrdiff_t>(first);
         si < static_cast<std::ptrdiff_t>(nr); ++si) {
      const auto i = static_cast<std::size_t>(si);
      if (i == prow) continue;
      auto row = m.row_mut(i);
      const Scalar factor = row[c];
      if (factor == 0) continue;
      const Scalar nf = f.neg(factor);
      for (std::size_t j = c; j < nc; ++j)
        if (pr[j] != 0) row[j] = f.add(row[j], f.mul(nf, pr[j]));
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

}  // namespace

Echelon rref(Matrix m) {
  auto pivots = eliminate(m, true);
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  Matrix work = m.rows() <= m.cols() ? m : transpose(m);
  return eliminate(work, false).size();
}

Matrix kernel_basis(const Matrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free.push_back(c);
  const PrimeField& f = m.field();
  Matrix k(f, nc, free.size());
  for (std::size_t t = 0; t < free.size(); ++t) {
    k.set(free[t], t, 1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      k.set(e.pivots[r], t, f.neg(e.reduced(r, free[t])));
  }
  return k;
}

Matrix image_basis(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix(m.field(), m.rows(), 0);
  auto pivots = rref(m).pivots;
  return select_columns(m, pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve");
  if (a.rows() != b.rows()) throw DimensionError("solve: right-hand side has wrong length");
  Echelon e = rref(hstack(a, b));
  const std::size_t n = a.cols();
  Matrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t t = 0; t < b.cols(); ++t) x.set(e.pivots[r], t, e.reduced(r, n + t));
  }
  return x;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  auto x = solve(a, Matrix::column(a.field(), b));
  if (!x) return std::nullopt;
  return x->col(0);
}

Cokernel cokernel_projection(const Matrix& m) {
  const std::size_t nr = m.rows();
  const PrimeField& f = m.field();
  Echelon e = rref(transpose(m));
  std::vector<std::ptrdiff_t> pivot_row(nr, -1);
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    pivot_row[e.pivots[k]] = static_cast<std::ptrdiff_t>(k);
  std::vector<std::size_t> nonpivot;
  for (std::size_t t = 0; t < nr; ++t)
    if (pivot_row[t] < 0) nonpivot.push_back(t);
  Matrix q(f, nonpivot.size(), nr);
  for (std::size_t s = 0; s < nonpivot.size(); ++s) q.set(s, nonpivot[s], 1);
  for (std::size_t t = 0; t < nr; ++t) {
    if (pivot_row[t] < 0) continue;
    auto row = e.reduced.row(static_cast<std::size_t>(pivot_row[t]));
    for (std::size_t s = 0; s < nonpivot.size(); ++s) q.set(s, t, f.neg(row[nonpivot[s]]));
  }
  const std::size_t dim = nonpivot.size();
  return {std::move(q), dim, std::move(nonpivot)};
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Echelon e = rref(hstack(m, Matrix::identity(m.field(), n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return submatrix(e.reduced, 0, n, n, n);
}

Matrix intersect(const Matrix& u, const Matrix& v) {
  require_same_field(u, v, "intersect");
  if (u.rows() != v.rows()) throw DimensionError("intersect: ambient dimensions differ");
  // u x = v y  <=>  [u | -v] (x; y) = 0.
  Matrix k = kernel_basis(hstack(u, scale(v, v.field().p() - 1)));
  Matrix x = submatrix(k, 0, u.cols(), 0, k.cols());
  return image_basis(u * x);
}

Matrix span_sum(const Matrix& u, const Matrix& v) { return image_basis(hstack(u, v)); }

bool contains(const Matrix& u, const Matrix& v) {
  if (v.cols() == 0) return true;
  return rank(hstack(u, v)) == rank(u);
}

namespace serial {

Echelon rref(Matrix m) {
  const PrimeField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar t = m(sel, j);
      m.set(sel, j, m(prow, j));
      m.set(prow, j, t);
    }
    Scalar iv = f.inv(m(prow, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m.set(prow, j, f.mul(m(prow, j), iv));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == prow || m(i, c) == 0) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.set(i, j, f.sub(m(i, j), f.mul(factor, m(prow, j))));
    }
    pivots.push_back(c);
    ++prow;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(Matrix m) { return serial::rref(std::move(m)).pivots.size(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("serial::multiply shape");
  const PrimeField& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c.set(i, j, s);
    }
  return c;
}

}  // namespace serial

}  // namespace eip
