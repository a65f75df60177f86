#include "dgf/lattice.hpp"

#include <algorithm>

namespace dgf {

namespace {

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  IntVec ra = m.row(a), rb = m.row(b);
  m.set_row(a, rb);
  m.set_row(b, ra);
}

void negate_row(IntMat& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

}  // namespace

RowHnf row_hnf(const IntMat& a) {
  RowHnf res;
  res.h = a;
  res.u = IntMat::identity(a.rows());
  IntMat& h = res.h;
  IntMat& u = res.u;
  const std::size_t m = a.rows(), n = a.cols();

  auto combined_submul = [&](std::size_t i, std::size_t r, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) -= q * h.at(r, j);
    for (std::size_t j = 0; j < m; ++j) u.at(i, j) -= q * u.at(r, j);
  };
  auto combined_swap = [&](std::size_t i, std::size_t r) {
    swap_rows(h, i, r);
    swap_rows(u, i, r);
  };
  auto combined_negate = [&](std::size_t i) {
    negate_row(h, i);
    negate_row(u, i);
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    // Euclidean elimination below row r in this column.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h.at(i, col) == 0) continue;
        if (best == m || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
      }
      if (best == m) break;  // column is zero below r
      combined_swap(r, best);
      bool others = false;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h.at(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
        combined_submul(i, r, q);
        if (h.at(i, col) != 0) others = true;
      }
      if (!others) break;
    }
    if (h.at(r, col) == 0) continue;
    if (h.at(r, col) < 0) combined_negate(r);
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h.at(i, col).get_mpz_t(), h.at(r, col).get_mpz_t());
      combined_submul(i, r, q);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  return res;
}

std::optional<IntVec> solve_left(const IntMat& b, const IntVec& w) {
  if (w.size() != b.cols()) throw ShapeMismatch("solve_left: size mismatch");
  const RowHnf hn = row_hnf(b);
  const std::size_t rank = hn.rank();
  IntVec residual = w;
  IntVec y(b.rows(), Int(0));
  for (std::size_t k = 0; k < rank; ++k) {
    const std::size_t p = hn.pivot_cols[k];
    const Int& piv = hn.h.at(k, p);
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[p].get_mpz_t(), piv.get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[k] = q;
    if (q != 0)
      for (std::size_t j = 0; j < b.cols(); ++j) residual[j] -= q * hn.h.at(k, j);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return vec_mat(y, hn.u);
}

std::vector<IntVec> left_kernel(const IntMat& b) {
  const RowHnf hn = row_hnf(b);
  std::vector<IntVec> basis;
  for (std::size_t i = hn.rank(); i < b.rows(); ++i) basis.push_back(hn.u.row(i));
  return basis;
}

std::vector<IntVec> vector_kernel_basis(const IntVec& w) {
  std::vector<IntVec> rows;
  IntMat col(w.size(), 1);
  for (std::size_t i = 0; i < w.size(); ++i) col.at(i, 0) = w[i];
  std::vector<IntVec> basis = left_kernel(col);
  // Pairwise size reduction keeps the vectors near the scale of w.
  for (std::size_t pass = 0; pass < 4; ++pass)
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<IntVec> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(basis[j]);
      basis[i] = size_reduce(basis[i], others);
    }
  return basis;
}

IntVec size_reduce(IntVec x, const std::vector<IntVec>& basis) {
  bool changed = true;
  std::size_t guard = 0;
  while (changed && guard++ < 64) {
    changed = false;
    for (const IntVec& k : basis) {
      const Int kk = vec_dot(k, k);
      if (kk == 0) continue;
      const Int mu = Rat(vec_dot(x, k), kk).round_nearest();
      if (mu != 0) {
        x = vec_sub(x, vec_scale(mu, k));
        changed = true;
      }
    }
  }
  return x;
}

namespace {
Int norm2(const IntVec2& v) { return v.x * v.x + v.y * v.y; }
Int dot2(const IntVec2& a, const IntVec2& b) { return a.x * b.x + a.y * b.y; }
Int det2(const IntVec2& a, const IntVec2& b) { return a.x * b.y - a.y * b.x; }
}  // namespace

std::pair<IntVec2, IntVec2> gauss_reduce(const IntVec2& b1, const IntVec2& b2) {
  if (det2(b1, b2) == 0) throw DegenerateBasis("gauss_reduce: dependent vectors");
  IntVec2 a = b1, b = b2;
  while (true) {
    if (norm2(b) < norm2(a)) std::swap(a, b);
    const Int mu = Rat(dot2(a, b), norm2(a)).round_nearest();
    if (mu == 0) break;
    b.x -= mu * a.x;
    b.y -= mu * a.y;
  }
  return {a, b};
}

IntVec2 closest_point(const IntVec2& b1, const IntVec2& b2, const RatVec2& target) {
  auto [a, b] = gauss_reduce(b1, b2);
  const Int det = det2(a, b);
  if (det == 0) throw DegenerateBasis("closest_point: dependent vectors");
  // Coordinates of the target in the reduced basis (Cramer).
  const Rat alpha = (target.x * Rat(b.y) - target.y * Rat(b.x)) / Rat(det);
  const Rat beta = (Rat(a.x) * target.y - Rat(a.y) * target.x) / Rat(det);
  const Int a0 = alpha.floor(), b0 = beta.floor();
  bool have = false;
  Int best_c1 = 0, best_c2 = 0;
  Rat best_d2 = 0;
  for (Int c1 = a0 - 2; c1 <= a0 + 2; ++c1)
    for (Int c2 = b0 - 2; c2 <= b0 + 2; ++c2) {
      const RatVec2 p{Rat(c1 * a.x + c2 * b.x), Rat(c1 * a.y + c2 * b.y)};
      const RatVec2 d = p - target;
      const Rat d2 = d.dot(d);
      const bool better =
          !have || d2 < best_d2 ||
          (d2 == best_d2 && (c1 < best_c1 || (c1 == best_c1 && c2 < best_c2)));
      if (better) {
        have = true;
        best_d2 = d2;
        best_c1 = c1;
        best_c2 = c2;
      }
    }
  return {best_c1 * a.x + best_c2 * b.x, best_c1 * a.y + best_c2 * b.y};
}

std::optional<IntVec> solve_diophantine(const IntMat& m, const IntVec2& t) {
  if (m.rows() != 2) throw ShapeMismatch("solve_diophantine: expected a 2-row system");
  // m*x = t is x^T * m^T = t^T.
  IntMat mt(m.cols(), 2);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    mt.at(j, 0) = m.at(0, j);
    mt.at(j, 1) = m.at(1, j);
  }
  auto x = solve_left(mt, IntVec{t.x, t.y});
  if (!x) return std::nullopt;
  return size_reduce(*x, left_kernel(mt));
}

}  // namespace dgf
