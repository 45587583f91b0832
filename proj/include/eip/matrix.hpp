#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "eip/field.hpp"

namespace eip {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a prime field. Entries are always reduced.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Build from signed integers (reduced mod p), row-major.
  static Matrix from_values(PrimeField field, std::size_t rows, std::size_t cols,
                            std::span<const std::int64_t> values);
  static Matrix from_rows(PrimeField field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix identity(PrimeField field, std::size_t n);
  /// Column matrix holding v.
  static Matrix column(PrimeField field, std::span<const Scalar> v);

  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  [[nodiscard]] Scalar operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  /// Stores v mod p.
  void set(std::size_t i, std::size_t j, Scalar v) noexcept {
    data_[i * cols_ + j] = v % field_.p();
  }

  [[nodiscard]] std::span<const Scalar> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] std::span<Scalar> row_mut(std::size_t i) noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  [[nodiscard]] Vector col(std::size_t j) const;
  [[nodiscard]] std::span<const Scalar> data() const noexcept { return data_; }

  [[nodiscard]] bool is_zero() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

[[nodiscard]] Matrix transpose(const Matrix& m);
[[nodiscard]] Matrix operator*(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator+(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator-(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix scale(const Matrix& m, Scalar c);
[[nodiscard]] Vector apply(const Matrix& m, std::span<const Scalar> v);

/// [a | b]; row counts must agree.
[[nodiscard]] Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]; column counts must agree.
[[nodiscard]] Matrix vstack(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix block_diag(std::span<const Matrix> blocks);
/// Rows [r0, r0+nr), columns [c0, c0+nc).
[[nodiscard]] Matrix submatrix(const Matrix& m, std::size_t r0, std::size_t nr,
                               std::size_t c0, std::size_t nc);
/// Columns listed in `cols`, in order.
[[nodiscard]] Matrix select_columns(const Matrix& m, std::span<const std::size_t> cols);
[[nodiscard]] Matrix power(const Matrix& m, std::uint64_t k);

[[nodiscard]] std::string to_string(const Matrix& m);

void require_same_field(const Matrix& a, const Matrix& b, const char* what);

}  // namespace eip
