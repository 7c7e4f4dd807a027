#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttl/polynomial.hpp"

namespace ttl {

/// TTL_PRIME_BUDGET, or 25 when unset. Throws BadParameter on a malformed value.
int prime_budget_from_env();

struct PrimePattern {
  std::uint64_t prime = 0;
  std::vector<int> pattern;  // ascending factor degrees
};

enum class IrreducibilityKind { Eisenstein, IrreducibleModP, DegreePatternSieve, ZassenhausExhaustive, Reducible };
std::string_view to_string(IrreducibilityKind kind);

/// Either a certificate of irreducibility over Q or the factorization.
struct IrreducibilityCertificate {
  IrreducibilityKind kind = IrreducibilityKind::ZassenhausExhaustive;
  std::uint64_t prime = 0;            // Eisenstein, IrreducibleModP
  std::vector<PrimePattern> sieve;    // DegreePatternSieve
  std::vector<Polynomial> factors;    // Reducible

  bool irreducible() const noexcept { return kind != IrreducibilityKind::Reducible; }
};

struct GaloisOptions {
  int prime_budget = 25;
  /// Largest admissible field degree for transitivity_report.
  int max_degree = 8;
  /// Degree bound handed to factor_over_Z for resolvents.
  int resolvent_max_degree = 56;
};

/// Eisenstein at a prime dividing the constant term, then irreducibility mod
/// one of the first prime_budget good primes, then the factor-degree sieve
/// over those primes, then Zassenhaus. Throws NonMonic,
/// NonIntegerCoefficients, NotSquarefree, DegreeBoundExceeded.
IrreducibilityCertificate certify_irreducible(const Polynomial& f, const GaloisOptions& options = {});
/// Re-checks a certificate with exact primitives only.
bool verify_certificate(const Polynomial& f, const IrreducibilityCertificate& cert, const GaloisOptions& options = {});

/// Roots α_i + α_j over i < j. Throws NonMonic, BadParameter (degree < 2),
/// CollisionDetected.
Polynomial pair_sum_resolvent(const Polynomial& f);
/// Roots α_i + t·α_j over i != j. Throws BadParameter for t in {-1, 0, 1},
/// NonMonic, CollisionDetected.
Polynomial ordered_pair_resolvent(const Polynomial& f, long t);
/// Res_y(f(y), x - y² - c·y): roots α² + c·α. The result may be non-squarefree.
Polynomial tschirnhaus(const Polynomial& f, long c);

inline constexpr std::array<long, 5> kTschirnhausSchedule{1, 2, 3, -1, -2};
inline constexpr std::array<long, 4> kOrderedPairSchedule{2, 3, 4, 5};

/// The first squarefree transform along the schedule. Throws DegenerateTransform.
std::pair<long, Polynomial> tschirnhaus_retry(const Polynomial& f);

struct DedekindScan {
  std::vector<PrimePattern> patterns;
  std::vector<std::uint64_t> skipped;  // reduction not squarefree
};

/// Factor-degree patterns of f modulo the first prime_budget primes.
DedekindScan dedekind_patterns(const Polynomial& f, int prime_budget);

struct ResolventCertificate {
  std::optional<long> tschirnhaus_c;  // f was replaced by its transform
  Polynomial base;                    // f or its transform
  std::optional<long> t;              // ordered-pair resolvents only
  Polynomial resolvent;
  std::vector<Polynomial> factors;    // irreducible over Q
};

enum class DoublyRule { NotAlmostDoubly, CycleWitness, ParityShortcut, OrderedPairResolvent };
std::string_view to_string(DoublyRule rule);

enum class PrimitivityVerdict { PrimeDegree, AlmostDoublyTransitive, Undetermined, Intransitive };
std::string_view to_string(PrimitivityVerdict verdict);

struct TransitivityReport {
  int degree = 0;
  int real_roots = 0;

  bool transitive = false;
  IrreducibilityCertificate irreducibility;

  bool almost_doubly = false;
  std::optional<ResolventCertificate> pair_resolvent;

  bool doubly = false;
  DoublyRule doubly_rule = DoublyRule::NotAlmostDoubly;
  std::optional<PrimePattern> cycle_witness;
  std::optional<ResolventCertificate> ordered_resolvent;

  PrimitivityVerdict primitive = PrimitivityVerdict::Undetermined;
  std::vector<std::string> notes;
};

/// Decides transitivity, almost double transitivity and double transitivity
/// of the Galois action on the roots of f. Rule order for the last: not
/// almost doubly; a {1, n-1} cycle witness; the parity shortcut when f has
/// non-real roots; the ordered-pair resolvent.
/// Throws DegreeBoundExceeded, BadParameter (degree < 3),
/// ResolventCollisionUnresolved, plus the preconditions of certify_irreducible.
TransitivityReport transitivity_report(const Polynomial& f, const GaloisOptions& options = {});

/// Re-derives every certificate in the report; returns a list of failures
/// (empty when the report checks out).
std::vector<std::string> verify_report(const Polynomial& f, const TransitivityReport& report,
                                       const GaloisOptions& options = {});

}  // namespace ttl
