#pragma once

#include "orbitquad/polynomial.hpp"
#include "orbitquad/representation.hpp"

namespace orbitquad {

/// The matrix pencil alpha*A|U + beta*B|U + (1-alpha-beta)*C|U - I attached to
/// one triple's restriction context. Its singular locus is exactly the set of
/// parameter pairs realizable by kernel vectors in U.
struct Pencil {
  const SubgroupContext* context;
  std::string group_name;
};

/// The case-split value of beta at which the pencil determinant is provably
/// nonzero: (1-alpha)/2 for 0 < alpha < 1 or alpha > 1, alpha for alpha < 0.
/// Throws DomainError for alpha in {0, 1}.
Rational witness_beta(const Rational& alpha);

RatMatrix pencil_eval(const SubgroupContext& ctx, const Rational& alpha,
                      const Rational& beta);

/// det of the evaluated pencil; 1 for a zero-dimensional context.
Rational pencil_det(const SubgroupContext& ctx, const Rational& alpha,
                    const Rational& beta);

/// The singularity polynomial P(alpha, beta) = det(L|U), materialized by
/// evaluating determinants on the integer grid {0..d}^2 and interpolating.
/// Degree <= d in each variable, d = restricted dimension.
BivarPoly pencil_poly(const SubgroupContext& ctx);

/// The beta-slice R(beta) = P(alpha, beta), from d+1 evaluations.
UniPoly slice_poly(const SubgroupContext& ctx, const Rational& alpha);

}  // namespace orbitquad
