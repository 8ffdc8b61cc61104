#pragma once

#include <vector>

#include "orbitquad/rational.hpp"

namespace orbitquad {

using RatVector = std::vector<Rational>;

RatVector vec_add(const RatVector& a, const RatVector& b);
RatVector vec_sub(const RatVector& a, const RatVector& b);
RatVector vec_scale(const Rational& c, const RatVector& v);
Rational vec_dot(const RatVector& a, const RatVector& b);
bool vec_is_zero(const RatVector& v);

/// Dense matrix of exact rationals, row major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows);
  static RatMatrix from_columns(const std::vector<RatVector>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  RatVector column(int j) const;
  RatVector row(int i) const;
  RatVector apply(const RatVector& v) const;  // matrix * vector

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  RatMatrix transposed() const;
  bool operator==(const RatMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

/// Exact determinant by fraction-free Bareiss elimination over the integers
/// after clearing row denominators. det of the 0x0 matrix is 1.
Rational det(const RatMatrix& m);

/// Basis of the right null space, in reduced row-echelon convention: one
/// vector per free column (increasing column index), each scaled so its first
/// nonzero entry is 1. Empty for a nonsingular square matrix.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

struct LinearSolve {
  enum class Status { Unique, NonUnique, NoSolution };
  Status status = Status::NoSolution;
  RatVector x;  // valid unless NoSolution; free variables set to 0
};

/// One exact solution of M x = b, if any.
LinearSolve solve(const RatMatrix& m, const RatVector& b);

/// Reduced row echelon form; pivot column indices appended to `pivots`.
RatMatrix rref(RatMatrix m, std::vector<int>& pivots);

}  // namespace orbitquad
