#include <doctest.h>

#include <cstdlib>

#include "ttl/error.hpp"
#include "ttl/exact.hpp"
#include "ttl/galois.hpp"
#include "ttl/permgrp.hpp"

using namespace ttl;

namespace {

Polynomial poly(std::initializer_list<long> c) { return Polynomial(c); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::ParseError;
}

TransitivityProfile profile_of(std::initializer_list<const char*> gens, int n) {
  std::vector<Perm> g;
  for (const char* text : gens) g.push_back(Perm::from_cycles(text, n));
  return transitivity_profile(group_closure(g, n));
}

void check_against(const TransitivityReport& report, const TransitivityProfile& profile) {
  CHECK(report.transitive == profile.transitive);
  CHECK(report.almost_doubly == profile.two_set_transitive);
  CHECK(report.doubly == profile.two_transitive);
}

}  // namespace

TEST_CASE("certify irreducible") {
  auto a = certify_irreducible(poly({-2, 0, 0, 1}));
  CHECK(a.kind == IrreducibilityKind::Eisenstein);
  CHECK(a.prime == 2);

  auto b = certify_irreducible(poly({-1, -3, 0, 1}));
  CHECK((b.kind == IrreducibilityKind::IrreducibleModP || b.kind == IrreducibilityKind::DegreePatternSieve));
  CHECK(b.prime == 2);  // x³ + x + 1 is irreducible mod 2
  CHECK(verify_certificate(poly({-1, -3, 0, 1}), b));

  auto c = certify_irreducible(poly({-1, 0, 0, 0, 1}));
  CHECK(c.kind == IrreducibilityKind::Reducible);
  REQUIRE(c.factors.size() == 3);
  CHECK(c.factors[0] == poly({-1, 1}));
  CHECK(c.factors[1] == poly({1, 1}));
  CHECK(c.factors[2] == poly({1, 0, 1}));
  CHECK(verify_certificate(poly({-1, 0, 0, 0, 1}), c));

  // Irreducible, but reducible modulo every prime: only the sieve or the
  // exhaustive search can certify it.
  Polynomial sd = poly({1, 0, -10, 0, 1});
  auto d = certify_irreducible(sd);
  CHECK(d.irreducible());
  CHECK(d.kind != IrreducibilityKind::IrreducibleModP);
  CHECK(verify_certificate(sd, d));

  IrreducibilityCertificate forged;
  forged.kind = IrreducibilityKind::Eisenstein;
  forged.prime = 3;
  CHECK_FALSE(verify_certificate(poly({-2, 0, 0, 1}), forged));

  CHECK(kind_of([] { certify_irreducible(poly({1, 2})); }) == ErrorKind::NonMonic);
}

TEST_CASE("pair-sum resolvent") {
  CHECK(pair_sum_resolvent(poly({-2, 0, 1})) == poly({0, 1}));
  CHECK(pair_sum_resolvent(poly({-2, 0, 0, 1})) == poly({2, 0, 0, 1}));
  for (auto f : {poly({-1, -3, 0, 1}), poly({-1, -1, 0, 0, 1}), poly({-2, 0, 0, 0, 0, 1}), poly({3, 1, 0, 2, 0, 0, 1})}) {
    const int n = f.degree();
    Polynomial r = pair_sum_resolvent(f);
    CHECK(r.degree() == n * (n - 1) / 2);
    // Root-count conservation against the full composed sum.
    CHECK(r.degree() + n == composed_sum(f, f).degree() - n * (n - 1) / 2);
    CHECK(r * r * f.scale_argument(Rational(1, 2)).monic() == composed_sum(f, f));
  }
  // ±√2 ± √3: (√2+√3) + (-√2-√3) = 0 = (√2-√3) + (-√2+√3).
  CHECK(kind_of([] { pair_sum_resolvent(poly({1, 0, -10, 0, 1})); }) == ErrorKind::CollisionDetected);
  CHECK(kind_of([] { pair_sum_resolvent(poly({2, 2})); }) == ErrorKind::NonMonic);
}

TEST_CASE("ordered-pair resolvent") {
  CHECK(ordered_pair_resolvent(poly({-2, 0, 1}), 2) == poly({-2, 0, 1}));
  Polynomial r = ordered_pair_resolvent(poly({-2, 0, 0, 1}), 2);
  CHECK(r.degree() == 6);
  CHECK(is_squarefree(r));
  for (long t : {-1L, 0L, 1L}) {
    CHECK(kind_of([t] { ordered_pair_resolvent(poly({-2, 0, 1}), t); }) == ErrorKind::BadParameter);
  }
  // Roots 1, 2, 3 with t = 2: 1 + 2·2 = 5 = 3 + 2·1.
  CHECK(kind_of([] { ordered_pair_resolvent(Polynomial::from_roots({1, 2, 3}), 2); }) == ErrorKind::CollisionDetected);
}

TEST_CASE("tschirnhaus transforms") {
  CHECK(tschirnhaus(poly({-2, 0, 1}), 0) == poly({4, -4, 1}));
  CHECK(tschirnhaus(poly({-2, 0, 1}), 1) == poly({2, -4, 1}));
  auto [c, g] = tschirnhaus_retry(poly({-2, 0, 1}));
  CHECK(c == 1);
  CHECK(g == poly({2, -4, 1}));
  for (long k : {-3L, 0L, 2L, 5L}) CHECK(tschirnhaus(poly({-1, 4, 0, 0, 1}), k).degree() == 4);
  // α and -c - α have the same image; this root set contains such a pair
  // for every c in the schedule.
  CHECK(kind_of([] { tschirnhaus_retry(Polynomial::from_roots({0, -1, -2, -3, 1, 2})); }) == ErrorKind::DegenerateTransform);
}

TEST_CASE("dedekind patterns") {
  auto scan = dedekind_patterns(poly({-2, 0, 0, 1}), 25);
  auto at = [&](std::uint64_t p) {
    for (const auto& e : scan.patterns) {
      if (e.prime == p) return e.pattern;
    }
    return std::vector<int>{};
  };
  CHECK(at(5) == std::vector<int>{1, 2});
  CHECK(at(7) == std::vector<int>{3});
  CHECK(scan.skipped == std::vector<std::uint64_t>{2, 3});
  auto gauss = dedekind_patterns(poly({1, 0, 1}), 5);
  CHECK(gauss.patterns.back().prime == 11);
  bool found = false;
  for (const auto& e : gauss.patterns) found = found || (e.prime == 5 && e.pattern == std::vector<int>{1, 1});
  CHECK(found);
}

TEST_CASE("transitivity report examples") {
  Polynomial pure_cubic = poly({-2, 0, 0, 1});
  auto a = transitivity_report(pure_cubic);
  CHECK(a.transitive);
  CHECK(a.almost_doubly);
  CHECK(a.pair_resolvent->resolvent == poly({2, 0, 0, 1}));
  CHECK(a.doubly);
  // The {1, 2} pattern at p = 5 is found before the parity rule applies.
  CHECK(a.doubly_rule == DoublyRule::CycleWitness);
  CHECK(a.cycle_witness->prime == 5);
  CHECK(verify_report(pure_cubic, a).empty());
  check_against(a, profile_of({"(0 1)", "(0 1 2)"}, 3));

  Polynomial cyclic = poly({-1, -3, 0, 1});
  auto b = transitivity_report(cyclic);
  CHECK(b.transitive);
  CHECK(b.almost_doubly);
  CHECK_FALSE(b.doubly);
  CHECK(b.doubly_rule == DoublyRule::OrderedPairResolvent);
  CHECK(b.ordered_resolvent->factors.size() == 2);
  CHECK(verify_report(cyclic, b).empty());
  auto c3 = profile_of({"(0 1 2)"}, 3);
  check_against(b, c3);
  CHECK(c3.ordered_pair_orbit_sizes.size() == b.ordered_resolvent->factors.size());

  // Galois group of x⁵ - 2 acts on its roots as x -> a·x + b on F_5.
  Polynomial quintic = poly({-2, 0, 0, 0, 0, 1});
  auto c = transitivity_report(quintic);
  CHECK(c.doubly);
  CHECK(c.doubly_rule == DoublyRule::CycleWitness);
  CHECK(c.cycle_witness->pattern == std::vector<int>{1, 4});
  CHECK(c.primitive == PrimitivityVerdict::PrimeDegree);
  CHECK(verify_report(quintic, c).empty());
  check_against(c, profile_of({"(0 1 2 3 4)", "(1 2 4 3)"}, 5));
}

TEST_CASE("transitivity report agrees with the permutation oracle on degree 4") {
  // D4 on the roots ±a, ±ia of x⁴ - 2, in the order a, ia, -a, -ia.
  auto d4 = transitivity_report(poly({-2, 0, 0, 0, 1}));
  check_against(d4, profile_of({"(0 1 2 3)", "(1 3)"}, 4));
  CHECK(d4.pair_resolvent->factors.size() == 2);

  // V4 on ±√2 ± √3: the pair-sum resolvent collides, so a transform is used.
  Polynomial v4poly = poly({1, 0, -10, 0, 1});
  auto v4 = transitivity_report(v4poly);
  check_against(v4, profile_of({"(0 1)(2 3)", "(0 2)(1 3)"}, 4));
  REQUIRE(v4.pair_resolvent);
  CHECK(v4.pair_resolvent->tschirnhaus_c.has_value());
  CHECK(verify_report(v4poly, v4).empty());

  // S4.
  Polynomial s4poly = poly({-1, -1, 0, 0, 1});
  auto s4 = transitivity_report(s4poly);
  check_against(s4, profile_of({"(0 1)", "(0 1 2 3)"}, 4));
  CHECK(verify_report(s4poly, s4).empty());

  // A4, which is doubly transitive on 4 points.
  Polynomial a4poly = poly({12, 8, 0, 0, 1});
  auto a4 = transitivity_report(a4poly);
  check_against(a4, profile_of({"(0 1 2)", "(1 2 3)"}, 4));
  CHECK(verify_report(a4poly, a4).empty());
}

TEST_CASE("totally real doubly transitive cubic without a cycle witness falls through to the resolvent") {
  // Discriminant 473 > 0 and not a square; irreducible mod 2, so a budget of
  // one prime yields no {1, 2} pattern.
  Polynomial f = poly({1, -5, 0, 1});
  GaloisOptions options;
  options.prime_budget = 1;
  auto report = transitivity_report(f, options);
  CHECK(report.real_roots == 3);
  CHECK(report.doubly);
  CHECK(report.doubly_rule == DoublyRule::OrderedPairResolvent);
  CHECK(verify_report(f, report, options).empty());
}

TEST_CASE("reducible input is not transitive") {
  Polynomial f = poly({1, 0, 1}) * poly({-2, 1});
  auto report = transitivity_report(f);
  CHECK_FALSE(report.transitive);
  CHECK_FALSE(report.almost_doubly);
  CHECK_FALSE(report.doubly);
  CHECK(report.primitive == PrimitivityVerdict::Intransitive);
  CHECK(verify_report(f, report).empty());
}

TEST_CASE("tampered reports are rejected") {
  Polynomial f = poly({-1, -3, 0, 1});
  auto report = transitivity_report(f);
  auto flipped = report;
  flipped.doubly = true;
  CHECK_FALSE(verify_report(f, flipped).empty());
  auto forged = report;
  forged.pair_resolvent->resolvent = poly({1, 0, 0, 1});
  CHECK_FALSE(verify_report(f, forged).empty());
}

TEST_CASE("transitivity report guards") {
  CHECK(kind_of([] { transitivity_report(Polynomial::monomial(1, 9) - poly({2})); }) == ErrorKind::DegreeBoundExceeded);
  CHECK(kind_of([] { transitivity_report(poly({-2, 0, 1})); }) == ErrorKind::BadParameter);
  CHECK(kind_of([] { transitivity_report(Polynomial::from_roots({1, 1, 2})); }) == ErrorKind::NotSquarefree);
}

TEST_CASE("prime budget from the environment") {
  unsetenv("TTL_PRIME_BUDGET");
  CHECK(prime_budget_from_env() == 25);
  setenv("TTL_PRIME_BUDGET", "40", 1);
  CHECK(prime_budget_from_env() == 40);
  setenv("TTL_PRIME_BUDGET", "many", 1);
  CHECK(kind_of([] { prime_budget_from_env(); }) == ErrorKind::BadParameter);
  unsetenv("TTL_PRIME_BUDGET");
}
