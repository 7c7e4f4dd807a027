#include "ttl/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "ttl/error.hpp"
#include "ttl/modp.hpp"

namespace ttl {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= size() || seen[static_cast<std::size_t>(x)]) {
      throw Error(ErrorKind::BadParameter, "image list is not a bijection");
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::from_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto error = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError, "at position " + std::to_string(pos) + ": " + what + " in '" + std::string(text) + "'");
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') error("expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && (text[pos] == ',')) {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') error("expected a point or ')'");
      int value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        value = value * 10 + (text[pos] - '0');
        if (value > n) break;
        ++pos;
      }
      if (value >= n) error("point " + std::to_string(value) + " outside 0.." + std::to_string(n - 1));
      if (used[static_cast<std::size_t>(value)]) error("point " + std::to_string(value) + " repeated");
      used[static_cast<std::size_t>(value)] = true;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Perm Perm::operator*(const Perm& other) const {
  if (other.size() != size()) throw Error(ErrorKind::BadParameter, "composing permutations of different degree");
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = images_[static_cast<std::size_t>(other.images_[i])];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(v));
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = (*this)(x);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

PermGroup group_closure(const std::vector<Perm>& generators, int n, std::uint64_t max_order) {
  for (const auto& g : generators) {
    if (g.size() != n) throw Error(ErrorKind::BadParameter, "generator " + g.cycles() + " not on " + std::to_string(n) + " points");
  }
  std::set<Perm> seen{Perm::identity(n)};
  std::deque<Perm> frontier{Perm::identity(n)};
  while (!frontier.empty()) {
    Perm current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Perm next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > max_order) {
          throw Error(ErrorKind::OrderBoundExceeded, "group order exceeds " + std::to_string(max_order));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  PermGroup group;
  group.n = n;
  group.generators = generators;
  group.elements = std::vector<Perm>(seen.begin(), seen.end());
  group.order = seen.size();
  return group;
}

PermGroup affine_half_group(int q) {
  if (q < 3 || !is_prime(static_cast<std::uint64_t>(q)) || q % 4 != 3) {
    throw Error(ErrorKind::BadModulus, std::to_string(q) + " is not a prime congruent to 3 mod 4");
  }
  // The squares form the subgroup of odd order (q-1)/2; g² generates it for
  // any primitive root g.
  int root = 2;
  for (; root < q; ++root) {
    bool primitive = true;
    for (int k = 1; k < q - 1; ++k) {
      if (mod_pow(static_cast<Residue>(root), static_cast<std::uint64_t>(k), static_cast<Residue>(q)) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  const int square = static_cast<int>((static_cast<long>(root) * root) % q);
  std::vector<int> shift(static_cast<std::size_t>(q));
  std::vector<int> dilate(static_cast<std::size_t>(q));
  for (int x = 0; x < q; ++x) {
    shift[static_cast<std::size_t>(x)] = (x + 1) % q;
    dilate[static_cast<std::size_t>(x)] = static_cast<int>((static_cast<long>(square) * x) % q);
  }
  std::vector<Perm> gens{Perm(std::move(shift))};
  Perm d(std::move(dilate));
  if (!d.is_identity()) gens.push_back(std::move(d));
  return group_closure(gens, q);
}

int pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> pair_from_index(int index, int n) {
  int i = 0;
  while (index >= n - 1 - i) {
    index -= n - 1 - i;
    ++i;
  }
  return {i, i + 1 + index};
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
  }
  std::vector<Orbit> classes(const std::vector<bool>& include) {
    std::vector<Orbit> out;
    std::vector<int> slot(parent_.size(), -1);
    for (int x = 0; x < static_cast<int>(parent_.size()); ++x) {
      if (!include[static_cast<std::size_t>(x)]) continue;
      const int r = find(x);
      if (slot[static_cast<std::size_t>(r)] < 0) {
        slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
        out.emplace_back();
      }
      out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].members.push_back(x);
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

// Orbits under a group equal orbits under its generators, so union-find over
// the generator images suffices.
template <typename Image>
std::vector<Orbit> orbits_of(const PermGroup& group, int domain, const std::vector<bool>& include, Image image) {
  DisjointSets sets(domain);
  for (const auto& g : group.generators) {
    for (int x = 0; x < domain; ++x) {
      if (include[static_cast<std::size_t>(x)]) sets.unite(x, image(g, x));
    }
  }
  return sets.classes(include);
}

std::vector<std::size_t> sizes(const std::vector<Orbit>& orbits) {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  return out;
}

}  // namespace

std::vector<Orbit> orbits_on_points(const PermGroup& group) {
  return orbits_of(group, group.n, std::vector<bool>(static_cast<std::size_t>(group.n), true),
                   [](const Perm& g, int x) { return g(x); });
}

std::vector<Orbit> orbits_on_2subsets(const PermGroup& group) {
  const int n = group.n;
  const int count = n * (n - 1) / 2;
  return orbits_of(group, count, std::vector<bool>(static_cast<std::size_t>(count), true), [n](const Perm& g, int x) {
    auto [i, j] = pair_from_index(x, n);
    return pair_index(g(i), g(j), n);
  });
}

std::vector<Orbit> orbits_on_ordered_pairs(const PermGroup& group) {
  const int n = group.n;
  std::vector<bool> include(static_cast<std::size_t>(n * n), true);
  for (int i = 0; i < n; ++i) include[static_cast<std::size_t>(i * n + i)] = false;
  return orbits_of(group, n * n, include, [n](const Perm& g, int x) { return g(x / n) * n + g(x % n); });
}

std::string_view to_string(Primitivity p) {
  switch (p) {
    case Primitivity::YesByAlmostDoubleTransitivity: return "yes-by-almost-2-transitivity";
    case Primitivity::Undetermined: return "undetermined";
  }
  return "undetermined";
}

TransitivityProfile transitivity_profile(const PermGroup& group) {
  if (!group.closed()) throw Error(ErrorKind::NotClosed, "transitivity_profile needs a closed group");
  TransitivityProfile profile;
  profile.order = group.order;
  profile.point_orbit_sizes = sizes(orbits_on_points(group));
  profile.two_subset_orbit_sizes = sizes(orbits_on_2subsets(group));
  profile.ordered_pair_orbit_sizes = sizes(orbits_on_ordered_pairs(group));
  profile.transitive = profile.point_orbit_sizes.size() == 1;
  profile.two_set_transitive = profile.transitive && profile.two_subset_orbit_sizes.size() <= 1;
  profile.two_transitive = profile.transitive && profile.ordered_pair_orbit_sizes.size() <= 1;
  profile.primitive_witness =
      profile.two_set_transitive ? Primitivity::YesByAlmostDoubleTransitivity : Primitivity::Undetermined;
  return profile;
}

}  // namespace ttl
