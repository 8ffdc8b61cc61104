#include "orbitquad/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace orbitquad {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 1) throw DomainError("permutation degree must be positive");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= degree() || seen[x])
      throw DomainError("image sequence is not a bijection");
    seen[x] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  return Perm(std::move(inv));
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw DimensionError("composing permutations of different degree");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Perm(std::move(img));
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation text");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected character in cycle");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      long point = std::stol(text.substr(i, j - i));
      i = j;
      if (point < 1 || point > degree)
        throw ParseError("point " + std::to_string(point) + " out of range 1.." +
                         std::to_string(degree));
      int p = static_cast<int>(point) - 1;
      if (used[p]) throw ParseError("point " + std::to_string(point) + " repeated");
      used[p] = true;
      cycle.push_back(p);
    }
    any_cycle = true;
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle) throw ParseError("no cycles found");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> done(p.degree(), false);
  bool wrote = false;
  for (int s = 0; s < p.degree(); ++s) {
    if (done[s] || p(s) == s) continue;
    os << '(';
    int x = s;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << x + 1;
      done[x] = true;
      x = p(x);
      first = false;
    } while (x != s);
    os << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return os.str();
}

RatVector permute(const Perm& p, const RatVector& v) {
  if (static_cast<int>(v.size()) != p.degree())
    throw DimensionError("vector length does not match permutation degree");
  RatVector r(v.size());
  for (int i = 0; i < p.degree(); ++i) r[p(i)] = v[i];
  return r;
}

}  // namespace orbitquad
