#include "dgf/matrix.hpp"

namespace dgf {

namespace {
void require_same_size(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw ShapeMismatch("vector sizes differ");
}
}  // namespace

IntVec vec_add(const IntVec& a, const IntVec& b) {
  require_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  require_same_size(a, b);
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec vec_scale(const Int& c, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = c * a[i];
    guard_size(r[i]);
  }
  return r;
}

Int vec_dot(const IntVec& a, const IntVec& b) {
  require_same_size(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  guard_size(s);
  return s;
}

bool vec_is_zero(const IntVec& a) {
  for (const Int& x : a)
    if (x != 0) return false;
  return true;
}

IntVec unit_vec(std::size_t n, std::size_t i) {
  IntVec r(n, Int(0));
  r[i] = 1;
  return r;
}

Int vec_gcd(const IntVec& a) {
  Int g = 0;
  for (const Int& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ == 0 ? 0 : init.begin()->size();
  e_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw ShapeMismatch("ragged initializer");
    for (long v : row) e_.emplace_back(v);
  }
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

void IntMat::set_row(std::size_t i, const IntVec& v) {
  if (v.size() != cols_) throw ShapeMismatch("row size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void IntMat::set_col(std::size_t j, const IntVec& v) {
  if (v.size() != rows_) throw ShapeMismatch("column size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

bool IntMat::strictly_positive() const {
  for (const Int& x : e_)
    if (x <= 0) return false;
  return rows_ > 0 && cols_ > 0;
}

bool IntMat::nonnegative() const {
  for (const Int& x : e_)
    if (x < 0) return false;
  return true;
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) m.set_row(i, rows[i]);
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cols) {
  const std::size_t c = cols.size();
  const std::size_t r = c == 0 ? 0 : cols[0].size();
  IntMat m(r, c);
  for (std::size_t j = 0; j < c; ++j) m.set_col(j, cols[j]);
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("mat_mul: inner dimensions differ");
  IntMat r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, j) += aik * b.at(k, j);
    }
  for (std::size_t i = 0; i < r.rows(); ++i) guard_size(r.at(i, 0));
  return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
  if (a.cols() != v.size()) throw ShapeMismatch("mat_vec: dimensions differ");
  IntVec r(a.rows(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    guard_size(r[i]);
  }
  return r;
}

IntVec vec_mat(const IntVec& v, const IntMat& a) {
  if (a.rows() != v.size()) throw ShapeMismatch("vec_mat: dimensions differ");
  IntVec r(a.cols(), Int(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] += v[i] * a.at(i, j);
  }
  for (Int& x : r) guard_size(x);
  return r;
}

IntMat mat_add(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("mat_add: shapes differ");
  IntMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

IntMat hstack(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack: row counts differ");
  IntMat r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack: column counts differ");
  IntMat r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
  return r;
}

}  // namespace dgf
