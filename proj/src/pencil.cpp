#include "orbitquad/pencil.hpp"

namespace orbitquad {

Rational witness_beta(const Rational& alpha) {
  if (alpha == Rational(0))
    throw DomainError("alpha = 0 makes w, z, y collinear; no witness beta");
  if (alpha == Rational(1))
    throw DomainError("alpha = 1 admits trapezium embeddings; no witness beta");
  if (alpha.sign() < 0) return alpha;
  return (Rational(1) - alpha) / Rational(2);
}

RatMatrix pencil_eval(const SubgroupContext& ctx, const Rational& alpha,
                      const Rational& beta) {
  const int m = ctx.dim();
  Rational gamma = Rational(1) - alpha - beta;
  RatMatrix l(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational v = alpha * ctx.restricted[0].at(i, j) +
                   beta * ctx.restricted[1].at(i, j) +
                   gamma * ctx.restricted[2].at(i, j);
      if (i == j) v -= Rational(1);
      l.at(i, j) = v;
    }
  return l;
}

Rational pencil_det(const SubgroupContext& ctx, const Rational& alpha,
                    const Rational& beta) {
  if (ctx.dim() == 0) return Rational(1);
  return det(pencil_eval(ctx, alpha, beta));
}

BivarPoly pencil_poly(const SubgroupContext& ctx) {
  const int d = ctx.dim();
  if (d == 0) return BivarPoly::constant(Rational(1));
  std::map<std::pair<Rational, Rational>, Rational> grid;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      grid[{Rational(i), Rational(j)}] = pencil_det(ctx, Rational(i), Rational(j));
  return interpolate_bivar(grid, {d, d});
}

UniPoly slice_poly(const SubgroupContext& ctx, const Rational& alpha) {
  const int d = ctx.dim();
  if (d == 0) return UniPoly::constant(Rational(1));
  std::vector<std::pair<Rational, Rational>> samples;
  samples.reserve(d + 1);
  for (int j = 0; j <= d; ++j)
    samples.emplace_back(Rational(j), pencil_det(ctx, alpha, Rational(j)));
  return interpolate_uni(samples, d);
}

}  // namespace orbitquad
