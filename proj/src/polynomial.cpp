#include "orbitquad/polynomial.hpp"

#include <algorithm>
#include <set>

namespace orbitquad {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) {
  return UniPoly(std::vector<Rational>{c});
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

Rational UniPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size()) c[i] += c_[i];
    if (i < o.c_.size()) c[i] += o.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  return *this + o.scaled(Rational(-1));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = s * c_[i];
  return UniPoly(std::move(c));
}

UniPoly interpolate_uni(const std::vector<std::pair<Rational, Rational>>& samples,
                        int degree_bound) {
  if (degree_bound < 0) throw DomainError("negative degree bound");
  if (static_cast<int>(samples.size()) < degree_bound + 1)
    throw DomainError("too few samples for degree bound");
  {
    std::set<Rational> xs;
    for (const auto& [x, y] : samples)
      if (!xs.insert(x).second) throw DomainError("duplicate abscissae");
  }

  // Newton form on the first degree_bound+1 samples, expanded incrementally:
  // p_{k+1} = p_k + (y_k - p_k(x_k)) / N_k(x_k) * N_k,  N_k = prod (x - x_i).
  UniPoly p;
  UniPoly basis = UniPoly::constant(Rational(1));
  for (int k = 0; k <= degree_bound; ++k) {
    const auto& [xk, yk] = samples[k];
    Rational denom = basis.eval(xk);
    Rational delta = yk - p.eval(xk);
    if (!delta.is_zero()) p = p + basis.scaled(delta / denom);
    basis = basis * UniPoly(std::vector<Rational>{-xk, Rational(1)});
  }
  for (std::size_t k = degree_bound + 1; k < samples.size(); ++k)
    if (!(p.eval(samples[k].first) == samples[k].second))
      throw DomainError("samples inconsistent with degree bound");
  return p;
}

BivarPoly BivarPoly::constant(const Rational& c) {
  BivarPoly p;
  p.set(0, 0, c);
  return p;
}

int BivarPoly::degree_a() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.first);
  return d;
}

int BivarPoly::degree_b() const {
  int d = -1;
  for (const auto& [k, v] : t_) d = std::max(d, k.second);
  return d;
}

Rational BivarPoly::coeff(int da, int db) const {
  auto it = t_.find({da, db});
  return it == t_.end() ? Rational(0) : it->second;
}

void BivarPoly::set(int da, int db, const Rational& c) {
  if (c.is_zero())
    t_.erase({da, db});
  else
    t_[{da, db}] = c;
}

Rational BivarPoly::eval(const Rational& a, const Rational& b) const {
  int da = degree_a(), db = degree_b();
  std::vector<Rational> pa(da + 2), pb(db + 2);
  pa[0] = 1;
  for (int i = 1; i <= da; ++i) pa[i] = pa[i - 1] * a;
  pb[0] = 1;
  for (int j = 1; j <= db; ++j) pb[j] = pb[j - 1] * b;
  Rational s;
  for (const auto& [k, v] : t_) s += v * pa[k.first] * pb[k.second];
  return s;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [k, v] : o.t_) r.set(k.first, k.second, r.coeff(k.first, k.second) + v);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  return *this + o.scaled(Rational(-1));
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [k1, v1] : t_)
    for (const auto& [k2, v2] : o.t_) {
      int da = k1.first + k2.first, db = k1.second + k2.second;
      r.set(da, db, r.coeff(da, db) + v1 * v2);
    }
  return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
  BivarPoly r;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : t_) r.set(k.first, k.second, c * v);
  return r;
}

BivarPoly interpolate_bivar(
    const std::map<std::pair<Rational, Rational>, Rational>& grid,
    std::pair<int, int> bounds) {
  std::set<Rational> as, bs;
  for (const auto& [ab, v] : grid) {
    as.insert(ab.first);
    bs.insert(ab.second);
  }
  if (grid.size() != as.size() * bs.size())
    throw DomainError("partial grid: not a full tensor product");
  if (static_cast<int>(as.size()) < bounds.first + 1 ||
      static_cast<int>(bs.size()) < bounds.second + 1)
    throw DomainError("partial grid: too few abscissae for degree bounds");

  // Interpolate each alpha-slice in beta, then each beta-coefficient in alpha.
  std::vector<Rational> avec(as.begin(), as.end());
  std::vector<std::pair<Rational, UniPoly>> slices;
  for (const auto& a : avec) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& b : bs) {
      auto it = grid.find({a, b});
      if (it == grid.end()) throw DomainError("partial grid: missing entry");
      pts.emplace_back(b, it->second);
    }
    slices.emplace_back(a, interpolate_uni(pts, bounds.second));
  }

  BivarPoly p;
  for (int j = 0; j <= bounds.second; ++j) {
    std::vector<std::pair<Rational, Rational>> pts;
    pts.reserve(slices.size());
    for (const auto& [a, q] : slices) pts.emplace_back(a, q.coeff(j));
    UniPoly cj = interpolate_uni(pts, bounds.first);
    for (int i = 0; i <= cj.degree(); ++i) p.set(i, j, cj.coeff(i));
  }
  return p;
}

}  // namespace orbitquad
