#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitquad/perm.hpp"

namespace orbitquad {

inline constexpr std::size_t kDefaultClosureCap = 5040;

struct Triple {
  int a = 0, b = 0, c = 0;
  auto operator<=>(const Triple&) const = default;
};

struct TripleClass {
  Triple rep;
  std::uint64_t size = 0;  // orbit size under simultaneous conjugation
};

/// Finite permutation group with fully enumerated elements.
///
/// Element order is deterministic: identity first, then breadth-first
/// discovery order over generator words, ties within a BFS level broken
/// lexicographically on image sequences.
class PermGroup {
 public:
  static PermGroup close(std::vector<Perm> generators, std::size_t cap,
                         std::string name, int degree = -1);

  /// Catalog families: cyclic, dihedral, symmetric, alternating (parameter =
  /// degree) and regular_dihedral8 (parameter ignored; the order-8 dihedral
  /// group acting on itself by left translation, degree 8).
  static PermGroup catalog(const std::string& family, int parameter,
                           std::size_t cap = kDefaultClosureCap);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }

  int index_of(const Perm& p) const;  // throws DomainError if absent
  int mul_index(int i, int j) const;  // index of element(i) * element(j)
  int inv_index(int i) const { return inverse_[i]; }

  bool is_transitive() const;

  /// Sorted element indices of the subgroup generated by the given indices.
  std::vector<int> subgroup_closure(const std::vector<int>& gens) const;

  /// FNV-1a over degree and element images; stable across runs.
  std::uint64_t hash() const;

 private:
  PermGroup() = default;

  int degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> mult_;  // full table only for small orders
};

/// One representative per orbit of G acting on G^3 by simultaneous
/// conjugation, in increasing lexicographic order of index triples; class
/// sizes sum to |G|^3.
std::vector<TripleClass> triples_reduced(const PermGroup& g);

/// All |G|^3 triples as singleton classes, lexicographic order.
std::vector<TripleClass> triples_all(const PermGroup& g);

struct GeneratorFile {
  int degree = 0;
  std::vector<Perm> generators;
};

/// Plain-text generator format: first non-comment line "degree = n", then one
/// generator per line in cycle notation; '#' starts a comment.
GeneratorFile read_generator_file(const std::string& path);

}  // namespace orbitquad
