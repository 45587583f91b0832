#include "eip/matrix.hpp"

#include <limits>
#include <sstream>

#include "eip/linalg.hpp"

namespace eip {

Matrix Matrix::from_values(PrimeField field, std::size_t rows, std::size_t cols,
                           std::span<const std::int64_t> values) {
  if (values.size() != rows * cols)
    throw DimensionError("matrix of shape " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " given " + std::to_string(values.size()) +
                         " entries");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < values.size(); ++k) m.data_[k] = field.reduce(values[k]);
  return m;
}

Matrix Matrix::from_rows(PrimeField field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  std::vector<std::int64_t> flat;
  flat.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw DimensionError("ragged row list");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_values(field, nr, nc, flat);
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::column(PrimeField field, std::span<const Scalar> v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

bool Matrix::is_zero() const noexcept {
  for (Scalar v : data_)
    if (v != 0) return false;
  return true;
}

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (!(a.field() == b.field()))
    throw ConfigError(std::string(what) + ": operands over F_" + std::to_string(a.field().p()) +
                      " and F_" + std::to_string(b.field().p()));
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set(j, i, m(i, j));
  return t;
}

namespace {

// Number of (p-1)^2 terms that can be summed in a uint64 before reducing.
std::uint64_t accumulation_budget(Scalar p) {
  std::uint64_t q = std::uint64_t{p - 1} * (p - 1);
  if (q == 0) return std::numeric_limits<std::uint64_t>::max();
  return (std::numeric_limits<std::uint64_t>::max() - q) / q;
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix product");
  if (a.cols() != b.rows())
    throw DimensionError("matrix product " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  const Scalar p = a.field().p();
  const std::uint64_t budget = accumulation_budget(p);
  const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
  Matrix c(a.field(), n, m);
  const bool parallel = n * inner * m >= kParallelThreshold * 8;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    std::vector<std::uint64_t> acc(m, 0);
    std::uint64_t pending = 0;
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      if (pending == budget) {
        for (auto& x : acc) x %= p;
        pending = 0;
      }
      auto brow = b.row(k);
      for (std::size_t j = 0; j < m; ++j) acc[j] += aik * brow[j];
      ++pending;
    }
    auto crow = c.row_mut(i);
    for (std::size_t j = 0; j < m; ++j) crow[j] = static_cast<Scalar>(acc[j] % p);
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix sum");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape");
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.field().add(a(i, j), b(i, j)));
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "matrix difference");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matrix difference shape");
  Matrix c(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a.field().sub(a(i, j), b(i, j)));
  return c;
}

Matrix scale(const Matrix& m, Scalar c) {
  Matrix out(m.field(), m.rows(), m.cols());
  c %= m.field().p();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.field().mul(m(i, j), c));
  return out;
}

Vector apply(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionError("matrix-vector product shape");
  const PrimeField& f = m.field();
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar s = 0;
    auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) s = f.add(s, f.mul(row[j], v[j]));
    out[i] = s;
  }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw DimensionError("hstack: row counts differ");
  Matrix c(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, a.cols() + j, b(i, j));
  }
  return c;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.set(a.rows() + i, j, b(i, j));
  return c;
}

Matrix block_diag(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw DimensionError("block_diag of no blocks");
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b, "block_diag");
    nr += b.rows();
    nc += b.cols();
  }
  Matrix out(blocks.front().field(), nr, nc);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(r0 + i, c0 + j, b(i, j));
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t nr, std::size_t c0,
                 std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) throw DimensionError("submatrix out of range");
  Matrix out(m.field(), nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out.set(i, j, m(r0 + i, c0 + j));
  return out;
}

Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols) {
  Matrix out(m.field(), m.rows(), cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= m.cols()) throw DimensionError("select_columns out of range");
    for (std::size_t i = 0; i < m.rows(); ++i) out.set(i, k, m(i, cols[k]));
  }
  return out;
}

Matrix power(const Matrix& m, std::uint64_t k) {
  if (m.rows() != m.cols()) throw DimensionError("power of a non-square matrix");
  Matrix result = Matrix::identity(m.field(), m.rows());
  Matrix base = m;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace eip
