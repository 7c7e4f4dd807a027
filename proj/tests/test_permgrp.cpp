#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "ttl/error.hpp"
#include "ttl/permgrp.hpp"

using namespace ttl;

namespace {

PermGroup closure(std::initializer_list<const char*> gens, int n) {
  std::vector<Perm> g;
  for (const char* text : gens) g.push_back(Perm::from_cycles(text, n));
  return group_closure(g, n);
}

// Orbit of x under all materialized elements, sorted.
std::set<std::vector<int>> brute_orbits(const PermGroup& group, int domain, auto image, auto include) {
  std::set<std::vector<int>> out;
  for (int x = 0; x < domain; ++x) {
    if (!include(x)) continue;
    std::set<int> orbit;
    for (const auto& g : *group.elements) orbit.insert(image(g, x));
    out.insert(std::vector<int>(orbit.begin(), orbit.end()));
  }
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<Orbit>& orbits) {
  std::set<std::vector<int>> out;
  for (const auto& o : orbits) out.insert(o.members);
  return out;
}

Perm random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

}  // namespace

TEST_CASE("cycle notation") {
  Perm p = Perm::from_cycles("(0 1 2)(3 4)", 5);
  CHECK(p.images() == std::vector<int>{1, 2, 0, 4, 3});
  CHECK(p.cycles() == "(0 1 2)(3 4)");
  CHECK(Perm::identity(4).cycles() == "()");
  CHECK(Perm::from_cycles("()", 3).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(Perm::from_cycles("(0 1", 3), Error);
  CHECK_THROWS_AS(Perm::from_cycles("(0 5)", 3), Error);
  CHECK_THROWS_AS(Perm::from_cycles("(0 1 0)", 3), Error);
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("group closure orders") {
  CHECK(closure({"(0 1)", "(0 1 2)"}, 3).order == 6);
  CHECK(closure({"(0 1 2 3)"}, 4).order == 4);
  CHECK(closure({}, 4).order == 1);
  CHECK(closure({"(0 1)", "(0 1 2 3 4 5)"}, 6).order == 720);
  try {
    group_closure({Perm::from_cycles("(0 1)", 6), Perm::from_cycles("(0 1 2 3 4 5)", 6)}, 6, 100);
    FAIL("expected OrderBoundExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OrderBoundExceeded);
  }
}

TEST_CASE("affine half groups") {
  CHECK(affine_half_group(3).order == 3);
  CHECK(affine_half_group(7).order == 21);
  CHECK(affine_half_group(11).order == 55);
  // x -> x + 1 and x -> 2x generate the same group of order 21 on F_7.
  CHECK(closure({"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}, 7).order == 21);
  for (int q : {2, 5, 9, 13}) {
    try {
      affine_half_group(q);
      FAIL("expected BadModulus");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadModulus);
    }
  }
}

TEST_CASE("transitivity profiles") {
  auto half7 = transitivity_profile(affine_half_group(7));
  CHECK(half7.transitive);
  CHECK(half7.two_set_transitive);
  CHECK_FALSE(half7.two_transitive);
  CHECK(half7.primitive_witness == Primitivity::YesByAlmostDoubleTransitivity);

  auto s3 = transitivity_profile(closure({"(0 1)", "(0 1 2)"}, 3));
  CHECK(s3.transitive);
  CHECK(s3.two_set_transitive);
  CHECK(s3.two_transitive);

  auto c4 = transitivity_profile(closure({"(0 1 2 3)"}, 4));
  CHECK(c4.transitive);
  CHECK_FALSE(c4.two_set_transitive);
  std::vector<std::size_t> sizes = c4.two_subset_orbit_sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{2, 4});
  CHECK(c4.primitive_witness == Primitivity::Undetermined);

  PermGroup open;
  open.n = 3;
  CHECK_THROWS_AS(transitivity_profile(open), Error);
}

TEST_CASE("2-subset indexing is a bijection") {
  for (int n = 2; n <= 9; ++n) {
    int index = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        CHECK(pair_index(i, j, n) == index);
        CHECK(pair_index(j, i, n) == index);
        CHECK(pair_from_index(index, n) == std::pair<int, int>{i, j});
        ++index;
      }
    }
  }
}

TEST_CASE("orbit and transitivity properties over random subgroups of S_n") {
  std::mt19937_64 rng(23);
  int even_two_set = 0;
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      PermGroup group = group_closure({random_perm(rng, n), trial % 3 == 0 ? Perm::identity(n) : random_perm(rng, n)}, n);
      const auto profile = transitivity_profile(group);
      const auto point = orbits_on_points(group);
      const auto two = orbits_on_2subsets(group);
      const auto ordered = orbits_on_ordered_pairs(group);

      // Generator union-find against the orbits of every element.
      CHECK(as_set(point) == brute_orbits(group, n, [](const Perm& g, int x) { return g(x); }, [](int) { return true; }));
      CHECK(as_set(two) == brute_orbits(
                               group, n * (n - 1) / 2,
                               [n](const Perm& g, int x) {
                                 auto [i, j] = pair_from_index(x, n);
                                 return pair_index(g(i), g(j), n);
                               },
                               [](int) { return true; }));
      CHECK(as_set(ordered) == brute_orbits(
                                   group, n * n, [n](const Perm& g, int x) { return g(x / n) * n + g(x % n); },
                                   [n](int x) { return x / n != x % n; }));

      std::size_t total_two = 0, total_ordered = 0;
      for (auto s : profile.point_orbit_sizes) CHECK(group.order % s == 0);
      for (auto s : profile.two_subset_orbit_sizes) {
        CHECK(group.order % s == 0);
        total_two += s;
      }
      for (auto s : profile.ordered_pair_orbit_sizes) {
        CHECK(group.order % s == 0);
        total_ordered += s;
      }
      CHECK(total_two == static_cast<std::size_t>(n * (n - 1) / 2));
      CHECK(total_ordered == static_cast<std::size_t>(n * (n - 1)));
      std::uint64_t factorial = 1;
      for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
      CHECK(factorial % group.order == 0);

      // Closure is closed under composition and inverses.
      std::set<Perm> elements(group.elements->begin(), group.elements->end());
      for (const auto& g : group.generators) {
        CHECK(elements.count(g.inverse()) == 1);
        for (const auto& h : *group.elements) CHECK(elements.count(g * h) == 1);
      }

      if (profile.two_transitive) CHECK(profile.two_set_transitive);
      if (n == 3 && profile.transitive) CHECK(profile.two_set_transitive);
      if (group.order % 2 == 0 && profile.two_set_transitive) {
        CHECK(profile.two_transitive);
        ++even_two_set;
      }
    }
  }
  CHECK(even_two_set > 0);
}
