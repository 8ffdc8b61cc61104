#pragma once

#include <array>

#include "orbitquad/group.hpp"
#include "orbitquad/linalg.hpp"

namespace orbitquad {

/// Matrix of the permutation action restricted to the sum-zero subspace, in
/// the basis {e_1 - e_n, ..., e_{n-1} - e_n}. Entries are in {-1, 0, 1}.
RatMatrix deleted_matrix(const Perm& p);

/// The sum-zero (deleted) permutation representation of a whole group, with
/// one (n-1)x(n-1) integer matrix per element.
class DeletedRep {
 public:
  explicit DeletedRep(const PermGroup& g);

  const PermGroup& group() const { return *group_; }
  int dim() const { return dim_; }
  const RatMatrix& matrix(int element_index) const { return mats_[element_index]; }

 private:
  const PermGroup* group_;
  int dim_;
  std::vector<RatMatrix> mats_;
};

/// Basis of the sum-zero vectors fixed by the subgroup generated by the given
/// element indices, in ambient degree-length coordinates. Computed as the
/// common kernel of (M(sigma) - I) over the generating subset.
std::vector<RatVector> fixed_subspace(const DeletedRep& rep,
                                      const std::vector<int>& element_indices);

/// Restriction data for the subgroup H = <A, B, C> of one triple: the H-fixed
/// dimension, the canonical H-invariant complement U of the fixed space inside
/// the sum-zero space (ambient coordinates), and the three matrices of A, B, C
/// acting on U.
struct SubgroupContext {
  Triple triple;
  std::vector<int> subgroup;          // sorted element indices of H
  int fixed_dim = 0;
  std::vector<RatVector> complement;  // basis of U, each vector length = degree
  std::array<RatMatrix, 3> restricted;

  int dim() const { return static_cast<int>(complement.size()); }

  /// Ambient lift of a vector given in U coordinates.
  RatVector lift(const RatVector& u_coords) const;
};

SubgroupContext build_context(const DeletedRep& rep, Triple t);

}  // namespace orbitquad
