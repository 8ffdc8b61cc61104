#include "orbitquad/group.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace orbitquad {

namespace {

// Full multiplication tables are only worth the memory for small orders.
constexpr std::size_t kMultTableMaxOrder = 1024;

Perm rotation(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm(std::move(img));
}

Perm reflection(int n) {  // 1-based p -> n+1-p
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
  return Perm(std::move(img));
}

}  // namespace

PermGroup PermGroup::close(std::vector<Perm> generators, std::size_t cap,
                           std::string name, int degree) {
  if (generators.empty() && degree < 1)
    throw DomainError("closure needs generators or an explicit degree");
  int n = generators.empty() ? degree : generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != n) throw DimensionError("generators of mixed degree");
  if (degree >= 1 && degree != n)
    throw DimensionError("declared degree does not match generators");

  PermGroup g;
  g.degree_ = n;
  g.name_ = std::move(name);
  g.generators_ = std::move(generators);

  Perm id(n);
  g.elements_.push_back(id);
  g.index_[id.images()] = 0;

  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& e : frontier)
      for (const auto& gen : g.generators_) {
        Perm p = e * gen;
        if (!g.index_.contains(p.images())) {
          g.index_[p.images()] = -1;  // reserve; real index assigned below
          next.push_back(std::move(p));
        }
      }
    std::sort(next.begin(), next.end());
    for (auto& p : next) {
      g.index_[p.images()] = static_cast<int>(g.elements_.size());
      g.elements_.push_back(std::move(p));
      if (g.elements_.size() > cap)
        throw CapExceeded("group closure exceeds cap " + std::to_string(cap), cap);
    }
    frontier = std::move(next);
  }

  g.inverse_.resize(g.elements_.size());
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.inverse_[i] = g.index_.at(g.elements_[i].inverse().images());

  if (g.elements_.size() <= kMultTableMaxOrder) {
    g.mult_.resize(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      g.mult_[i].resize(g.elements_.size());
      for (std::size_t j = 0; j < g.elements_.size(); ++j)
        g.mult_[i][j] = g.index_.at((g.elements_[i] * g.elements_[j]).images());
    }
  }
  return g;
}

PermGroup PermGroup::catalog(const std::string& family, int parameter,
                             std::size_t cap) {
  if (family == "cyclic") {
    if (parameter < 1) throw DomainError("cyclic needs degree >= 1");
    return close({rotation(parameter)}, cap, "cyclic:" + std::to_string(parameter));
  }
  if (family == "dihedral") {
    if (parameter < 3) throw DomainError("dihedral needs degree >= 3");
    return close({rotation(parameter), reflection(parameter)}, cap,
                 "dihedral:" + std::to_string(parameter));
  }
  if (family == "symmetric") {
    if (parameter < 1) throw DomainError("symmetric needs degree >= 1");
    if (parameter == 1) return close({}, cap, "symmetric:1", 1);
    std::vector<int> swap01(parameter);
    for (int i = 0; i < parameter; ++i) swap01[i] = i;
    swap01[0] = 1;
    swap01[1] = 0;
    std::vector<Perm> gens{Perm(std::move(swap01))};
    if (parameter > 2) gens.push_back(rotation(parameter));
    return close(std::move(gens), cap, "symmetric:" + std::to_string(parameter));
  }
  if (family == "alternating") {
    if (parameter < 3) throw DomainError("alternating needs degree >= 3");
    std::vector<int> c3(parameter);
    for (int i = 0; i < parameter; ++i) c3[i] = i;
    c3[0] = 1;
    c3[1] = 2;
    c3[2] = 0;
    std::vector<Perm> gens{Perm(std::move(c3))};
    if (parameter > 3) {
      std::vector<int> lng(parameter);
      if (parameter % 2 == 1) {
        for (int i = 0; i < parameter; ++i) lng[i] = (i + 1) % parameter;
      } else {
        lng[0] = 0;  // (2 3 ... n) fixing the first point
        for (int i = 1; i < parameter; ++i) lng[i] = i % (parameter - 1) + 1;
      }
      gens.push_back(Perm(std::move(lng)));
    }
    return close(std::move(gens), cap, "alternating:" + std::to_string(parameter));
  }
  if (family == "regular_dihedral8") {
    PermGroup base = catalog("dihedral", 4, cap);
    std::vector<Perm> gens;
    for (const auto& g : base.generators()) {
      std::vector<int> img(base.order());
      for (std::size_t i = 0; i < base.order(); ++i)
        img[i] = base.index_of(g * base.element(static_cast<int>(i)));
      gens.push_back(Perm(std::move(img)));
    }
    return close(std::move(gens), cap, "regular_dihedral8");
  }
  throw DomainError("unknown catalog family \"" + family + "\"");
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p.images());
  if (it == index_.end()) throw DomainError("permutation not in group");
  return it->second;
}

int PermGroup::mul_index(int i, int j) const {
  if (!mult_.empty()) return mult_[i][j];
  return index_.at((elements_[i] * elements_[j]).images());
}

bool PermGroup::is_transitive() const {
  std::vector<bool> seen(degree_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& g : generators_) {
      int y = g(x);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

std::vector<int> PermGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> members{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int e : frontier)
      for (int s : gens) {
        int p = mul_index(e, s);
        if (members.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

std::uint64_t PermGroup::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(degree_));
  for (const auto& e : elements_)
    for (int x : e.images()) mix(static_cast<std::uint64_t>(x) + 1);
  return h;
}

std::vector<TripleClass> triples_reduced(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  // conj[u][a] = index of u a u^-1
  std::vector<std::vector<int>> conj(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    int ui = g.inv_index(u);
    for (int a = 0; a < n; ++a) conj[u][a] = g.mul_index(g.mul_index(u, a), ui);
  }

  std::vector<TripleClass> classes;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool minimal = true;
        int stab = 0;
        for (int u = 0; u < n; ++u) {
          int ca = conj[u][a];
          int cb = conj[u][b];
          int cc = conj[u][c];
          if (ca < a || (ca == a && (cb < b || (cb == b && cc < c)))) {
            minimal = false;
            break;
          }
          if (ca == a && cb == b && cc == c) ++stab;
        }
        if (minimal)
          classes.push_back({Triple{a, b, c},
                             static_cast<std::uint64_t>(n) / stab});
      }
  return classes;
}

std::vector<TripleClass> triples_all(const PermGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<TripleClass> all;
  all.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) all.push_back({Triple{a, b, c}, 1});
  return all;
}

GeneratorFile read_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open generator file \"" + path + "\"");
  GeneratorFile out;
  std::string line;
  std::size_t lineno = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string trimmed;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch)) || !trimmed.empty())
        trimmed += ch;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty()) continue;
    if (!have_degree) {
      std::istringstream is(trimmed);
      std::string kw, eq;
      long n = 0;
      is >> kw >> eq >> n;
      if (kw != "degree" || eq != "=" || n < 1 || !is || !(is >> std::ws).eof())
        throw ParseError("line " + std::to_string(lineno) +
                             ": expected \"degree = n\", got \"" + trimmed + "\"",
                         lineno);
      out.degree = static_cast<int>(n);
      have_degree = true;
      continue;
    }
    try {
      out.generators.push_back(parse_cycles(trimmed, out.degree));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  if (!have_degree)
    throw ParseError("generator file \"" + path + "\" has no degree line");
  return out;
}

}  // namespace orbitquad
