#pragma once

#include <compare>
#include <string>
#include <vector>

#include "orbitquad/linalg.hpp"

namespace orbitquad {

/// Permutation of {0, ..., n-1}. Text formats are 1-based cycle notation;
/// everything in memory is 0-based.
class Perm {
 public:
  explicit Perm(int degree);  // identity
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;

  /// Composition: (a * b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b);

  bool operator==(const Perm& o) const = default;
  auto operator<=>(const Perm& o) const { return img_ <=> o.img_; }

 private:
  std::vector<int> img_;
};

/// Parse whitespace-tolerant disjoint-cycle notation with 1-based points,
/// e.g. "(1 2 3)(4 5)"; "()" is the identity. Points not mentioned are fixed.
Perm parse_cycles(const std::string& text, int degree);

/// Canonical cycle notation: cycles ordered by least moved point, each cycle
/// starting at its least point; "()" for the identity.
std::string format_cycles(const Perm& p);

/// Coordinate action on vectors: (p . v)[p(i)] = v[i].
RatVector permute(const Perm& p, const RatVector& v);

}  // namespace orbitquad
