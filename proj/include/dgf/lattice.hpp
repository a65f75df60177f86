#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dgf/matrix.hpp"

namespace dgf {

// Row-style Hermite form: U*A = H with U unimodular, H in row echelon form
// with positive pivots and reduced entries above them.
struct RowHnf {
  IntMat h;
  IntMat u;
  std::vector<std::size_t> pivot_cols;  // one per pivot row, in order
  std::size_t rank() const { return pivot_cols.size(); }
};

RowHnf row_hnf(const IntMat& a);

// Integer solution of x*B = w, if one exists.
std::optional<IntVec> solve_left(const IntMat& b, const IntVec& w);

// Basis of { x : x*B = 0 } as rows.
std::vector<IntVec> left_kernel(const IntMat& b);

// Basis of { d : dot(d, w) = 0 }, size-reduced.
std::vector<IntVec> vector_kernel_basis(const IntVec& w);

// Greedy size reduction of x against a list of lattice vectors.
IntVec size_reduce(IntVec x, const std::vector<IntVec>& basis);

// Lagrange reduction of a rank-2 lattice basis: first vector shortest,
// |projection coefficient| <= 1/2. Throws DegenerateBasis on dependence.
std::pair<IntVec2, IntVec2> gauss_reduce(const IntVec2& b1, const IntVec2& b2);

// Lattice point minimizing Euclidean distance to target; ties broken by
// lexicographically smallest coefficient pair (w.r.t. the reduced basis).
IntVec2 closest_point(const IntVec2& b1, const IntVec2& b2, const RatVec2& target);

// One integer solution of m*x = t for a 2-row system, chosen deterministically
// (Hermite triangularization, then size reduction against the kernel).
std::optional<IntVec> solve_diophantine(const IntMat& m, const IntVec2& t);

}  // namespace dgf
