#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbitquad/rational.hpp"

namespace orbitquad {

/// Univariate polynomial over the rationals, coefficients in ascending degree
/// with no trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int k) const;

  Rational eval(const Rational& x) const;  // Horner

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly scaled(const Rational& c) const;
  bool operator==(const UniPoly& o) const = default;

 private:
  std::vector<Rational> c_;
};

/// The unique polynomial of degree <= degree_bound through the samples.
/// Throws DomainError on duplicate abscissae or when extra samples are
/// inconsistent with the bound.
UniPoly interpolate_uni(const std::vector<std::pair<Rational, Rational>>& samples,
                        int degree_bound);

/// Bivariate polynomial over the rationals, sparse by exponent pair (da, db);
/// zero coefficients are never stored.
class BivarPoly {
 public:
  using Key = std::pair<int, int>;

  BivarPoly() = default;
  static BivarPoly constant(const Rational& c);

  bool is_zero() const { return t_.empty(); }
  int degree_a() const;
  int degree_b() const;
  const std::map<Key, Rational>& terms() const { return t_; }
  Rational coeff(int da, int db) const;
  void set(int da, int db, const Rational& c);  // erases on zero

  Rational eval(const Rational& a, const Rational& b) const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly scaled(const Rational& c) const;
  bool operator==(const BivarPoly& o) const = default;

 private:
  std::map<Key, Rational> t_;
};

/// Interpolate from a full tensor grid of evaluations. The grid must contain
/// at least (bounds.first+1) x (bounds.second+1) abscissae per variable;
/// extra grid points are checked for consistency.
BivarPoly interpolate_bivar(
    const std::map<std::pair<Rational, Rational>, Rational>& grid,
    std::pair<int, int> bounds);

}  // namespace orbitquad
