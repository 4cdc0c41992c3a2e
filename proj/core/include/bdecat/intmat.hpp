#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdecat {

using BigInt = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  // 0-based index lists.
  IntMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  IntMatrix without_rows(const std::vector<int>& rows) const;
  IntMatrix transposed() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += f * row[src]
  void add_row(int dst, int src, const BigInt& f);
  void add_col(int dst, int src, const BigInt& f);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

std::string to_string(const IntMatrix& m);

// Fraction-free Gaussian elimination; det of a 0x0 matrix is 1.
BigInt determinant(const IntMatrix& m);
int rank(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  // diagonal, nonnegative, each entry dividing the next
  IntMatrix u;  // unimodular, u * m * v = d
  IntMatrix v;
};
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace bdecat
