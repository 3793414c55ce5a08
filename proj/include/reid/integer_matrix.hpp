#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace reid {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);
  static IntMatrix diagonal(const std::vector<BigInt>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  /// [A | B]
  IntMatrix hconcat(const IntMatrix& other) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

/// U * M * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SnfResult {
  IntMatrix U, V, D;
  IntMatrix U_inv;  // inverse of U, tracked alongside
  std::size_t rank = 0;

  std::vector<BigInt> diagonal() const;
};

SnfResult smith_normal_form(const IntMatrix& m);

/// Exact determinant (fraction-free elimination).
BigInt determinant(const IntMatrix& m);

/// Solves L x = v over the integers, if possible.
std::optional<IntVector> solve_integer(const SnfResult& snf_of_l, const IntVector& v);

/// p-adic valuation of a nonzero integer.
unsigned valuation(BigInt n, unsigned p);

}  // namespace reid
