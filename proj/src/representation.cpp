#include "orbitquad/representation.hpp"

namespace orbitquad {

RatMatrix deleted_matrix(const Perm& p) {
  const int n = p.degree();
  RatMatrix m(n - 1, n - 1);
  const int last = p(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    // column i is the image of e_i - e_n: e_{p(i)} - e_{p(n-1)}.
    int a = p(i);
    if (a < n - 1) m.at(a, i) = 1;
    if (last < n - 1) m.at(last, i) = m.at(last, i) - Rational(1);
  }
  return m;
}

DeletedRep::DeletedRep(const PermGroup& g) : group_(&g), dim_(g.degree() - 1) {
  mats_.reserve(g.order());
  for (const auto& e : g.elements()) mats_.push_back(deleted_matrix(e));
}

namespace {

// Lift a vector from {e_i - e_n} coordinates to ambient sum-zero coordinates.
RatVector lift_deleted(const RatVector& v) {
  RatVector amb(v.size() + 1);
  Rational sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    amb[i] = v[i];
    sum += v[i];
  }
  amb[v.size()] = -sum;
  return amb;
}

}  // namespace

std::vector<RatVector> fixed_subspace(const DeletedRep& rep,
                                      const std::vector<int>& element_indices) {
  if (element_indices.empty()) throw DomainError("fixed_subspace needs elements");
  const int d = rep.dim();
  RatMatrix stacked(static_cast<int>(element_indices.size()) * d, d);
  int row = 0;
  for (int idx : element_indices) {
    const RatMatrix& m = rep.matrix(idx);
    for (int i = 0; i < d; ++i, ++row)
      for (int j = 0; j < d; ++j)
        stacked.at(row, j) = m.at(i, j) - (i == j ? Rational(1) : Rational(0));
  }
  std::vector<RatVector> basis;
  for (const auto& v : kernel_basis(stacked)) basis.push_back(lift_deleted(v));
  return basis;
}

RatVector SubgroupContext::lift(const RatVector& u_coords) const {
  if (u_coords.size() != complement.size())
    throw DimensionError("lift: coordinate count does not match U basis");
  RatVector amb(complement.empty() ? 0 : complement[0].size());
  for (std::size_t j = 0; j < complement.size(); ++j)
    if (!u_coords[j].is_zero()) amb = vec_add(amb, vec_scale(u_coords[j], complement[j]));
  return amb;
}

SubgroupContext build_context(const DeletedRep& rep, Triple t) {
  const PermGroup& g = rep.group();
  const int n = g.degree();

  SubgroupContext ctx;
  ctx.triple = t;
  ctx.subgroup = g.subgroup_closure({t.a, t.b, t.c});

  std::vector<RatVector> fixed = fixed_subspace(rep, {t.a, t.b, t.c});
  ctx.fixed_dim = static_cast<int>(fixed.size());

  // U = sum-zero vectors orthogonal to the fixed space: kernel of the
  // constraint matrix whose rows are the all-ones vector and the fixed basis.
  RatMatrix constraints(1 + ctx.fixed_dim, n);
  for (int j = 0; j < n; ++j) constraints.at(0, j) = 1;
  for (int i = 0; i < ctx.fixed_dim; ++i)
    for (int j = 0; j < n; ++j) constraints.at(i + 1, j) = fixed[i][j];
  ctx.complement = kernel_basis(constraints);

  const int m = ctx.dim();
  RatMatrix ub = RatMatrix::from_columns(ctx.complement);  // n x m
  std::array<int, 3> idx{t.a, t.b, t.c};
  for (int k = 0; k < 3; ++k) {
    const Perm& sigma = g.element(idx[k]);
    RatMatrix r(m, m);
    for (int j = 0; j < m; ++j) {
      // sigma moves U to itself; coordinates of sigma(u_j) in the U basis.
      LinearSolve s = solve(ub, permute(sigma, ctx.complement[j]));
      if (s.status != LinearSolve::Status::Unique)
        throw Error("internal: complement basis is not invariant");
      for (int i = 0; i < m; ++i) r.at(i, j) = s.x[i];
    }
    ctx.restricted[k] = std::move(r);
  }
  return ctx;
}

}  // namespace orbitquad
