#include "orbitquad/linalg.hpp"

#include <utility>

namespace orbitquad {

RatVector vec_add(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVector vec_sub(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVector vec_scale(const Rational& c, const RatVector& v) {
  RatVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Rational vec_dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  int nr = static_cast<int>(rows.size());
  int nc = nr == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(rows[i].size()) != nc)
      throw DimensionError("ragged row lengths");
    for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) {
  int nc = static_cast<int>(cols.size());
  int nr = nc == 0 ? 0 : static_cast<int>(cols[0].size());
  RatMatrix m(nr, nc);
  for (int j = 0; j < nc; ++j) {
    if (static_cast<int>(cols[j].size()) != nr)
      throw DimensionError("ragged column lengths");
    for (int i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::column(int j) const {
  RatVector v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RatVector RatMatrix::row(int i) const {
  RatVector v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw DimensionError("matrix-vector size mismatch");
  RatVector r(rows_);
  for (int i = 0; i < rows_; ++i) {
    Rational s;
    for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matmul size mismatch");
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix add size mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix sub size mismatch");
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = c * e_[i];
  return r;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational det(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return Rational(1);  // empty product

  // Clear denominators row by row; det scales by the product of the factors.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                        m.at(i, j).denominator().get_mpz_t());
    for (int j = 0; j < n; ++j)
      a[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    scale *= l;
  }

  // Bareiss: all divisions below are exact.
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { r = i; break; }
      if (r < 0) return Rational(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class d = sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
  return Rational(d, scale);
}

RatMatrix rref(RatMatrix m, std::vector<int>& pivots) {
  const int nr = m.rows(), nc = m.cols();
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int pr = -1;
    for (int i = r; i < nr; ++i)
      if (!m.at(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < nc; ++j) std::swap(m.at(pr, j), m.at(r, j));
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < nc; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (int j = c; j < nc; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return m;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  std::vector<int> pivots;
  RatMatrix r = rref(m, pivots);
  const int nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (int p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (int f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<int>(i), f);
    // First nonzero entry normalized to 1.
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      if (!(x == Rational(1))) v = vec_scale(Rational(1) / x, v);
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolve solve(const RatMatrix& m, const RatVector& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw DimensionError("solve: rhs length does not match rows");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<int> pivots;
  RatMatrix r = rref(std::move(aug), pivots);

  LinearSolve out;
  if (!pivots.empty() && pivots.back() == m.cols()) {
    out.status = LinearSolve::Status::NoSolution;
    return out;
  }
  out.x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i)
    out.x[pivots[i]] = r.at(static_cast<int>(i), m.cols());
  out.status = static_cast<int>(pivots.size()) == m.cols()
                   ? LinearSolve::Status::Unique
                   : LinearSolve::Status::NonUnique;
  return out;
}

}  // namespace orbitquad
