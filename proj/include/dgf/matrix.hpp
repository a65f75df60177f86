#pragma once

#include <initializer_list>
#include <vector>

#include "dgf/numeric.hpp"

namespace dgf {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& a);
Int vec_dot(const IntVec& a, const IntVec& b);
bool vec_is_zero(const IntVec& a);
IntVec unit_vec(std::size_t n, std::size_t i);
Int vec_gcd(const IntVec& a);

// Dense integer matrix, row-major; entries unbounded.
class IntMat {
public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}
  IntMat(std::initializer_list<std::initializer_list<long>> init);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  void set_row(std::size_t i, const IntVec& v);
  void set_col(std::size_t j, const IntVec& v);

  bool strictly_positive() const;
  bool nonnegative() const;

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat from_cols(const std::vector<IntVec>& cols);

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);
// Row vector times matrix.
IntVec vec_mat(const IntVec& v, const IntMat& a);
IntMat mat_add(const IntMat& a, const IntMat& b);
IntMat hstack(const IntMat& a, const IntMat& b);
IntMat vstack(const IntMat& a, const IntMat& b);

}  // namespace dgf
