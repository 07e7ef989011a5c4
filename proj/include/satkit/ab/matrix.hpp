#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace satkit::ab {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. 0×n and n×0 are allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::size_t cols, const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Integer> row(std::size_t r) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += k * row[source]
  void add_row(std::size_t target, std::size_t source, const Integer& k);
  void add_col(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
// Row vector times matrix.
std::vector<Integer> operator*(const std::vector<Integer>& v, const IntMatrix& m);

// Fraction-free Gaussian elimination; square matrices only.
Integer determinant(const IntMatrix& m);

}  // namespace satkit::ab
