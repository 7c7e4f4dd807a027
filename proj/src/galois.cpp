#include "ttl/galois.hpp"

#include <algorithm>
#include <cstdlib>

#include "ttl/error.hpp"
#include "ttl/exact.hpp"
#include "ttl/kernels.hpp"
#include "ttl/modp.hpp"

namespace ttl {

int prime_budget_from_env() {
  const char* raw = std::getenv("TTL_PRIME_BUDGET");
  if (raw == nullptr || *raw == '\0') return 25;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > 10000) {
    throw Error(ErrorKind::BadParameter, std::string("TTL_PRIME_BUDGET must be an integer in 1..10000, got '") + raw + "'");
  }
  return static_cast<int>(value);
}

std::string_view to_string(IrreducibilityKind kind) {
  switch (kind) {
    case IrreducibilityKind::Eisenstein: return "Eisenstein";
    case IrreducibilityKind::IrreducibleModP: return "IrreducibleModP";
    case IrreducibilityKind::DegreePatternSieve: return "DegreePatternSieve";
    case IrreducibilityKind::ZassenhausExhaustive: return "ZassenhausExhaustive";
    case IrreducibilityKind::Reducible: return "Reducible";
  }
  return "?";
}

std::string_view to_string(DoublyRule rule) {
  switch (rule) {
    case DoublyRule::NotAlmostDoubly: return "NotAlmostDoubly";
    case DoublyRule::CycleWitness: return "CycleWitness";
    case DoublyRule::ParityShortcut: return "ParityShortcut";
    case DoublyRule::OrderedPairResolvent: return "OrderedPairResolvent";
  }
  return "?";
}

std::string_view to_string(PrimitivityVerdict verdict) {
  switch (verdict) {
    case PrimitivityVerdict::PrimeDegree: return "yes-prime-degree";
    case PrimitivityVerdict::AlmostDoublyTransitive: return "yes-by-almost-2-transitivity";
    case PrimitivityVerdict::Undetermined: return "undetermined";
    case PrimitivityVerdict::Intransitive: return "no-intransitive";
  }
  return "?";
}

namespace {

void require_monic_integer(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial");
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.canonical());
  if (!f.has_integer_coeffs()) throw Error(ErrorKind::NonIntegerCoefficients, f.canonical());
}

// Primes dividing c: trial division to 10^4, plus the cofactor when it is
// then certainly prime.
std::vector<std::uint64_t> prime_divisors(Integer c) {
  constexpr unsigned long kLimit = 10000;
  std::vector<std::uint64_t> out;
  c = abs(c);
  if (c == 0) return out;
  for (unsigned long p = 2; p <= kLimit && c > 1; ++p) {
    if (!is_prime(p) || c % p != 0) continue;
    out.push_back(p);
    while (c % p == 0) c /= p;
  }
  if (c > 1 && c < Integer(kLimit) * kLimit) out.push_back(c.get_ui());
  return out;
}

std::vector<bool> subset_sums(const std::vector<int>& pattern, int n) {
  std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
  sums[0] = true;
  for (int d : pattern) {
    for (int s = n; s >= d; --s) {
      if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
    }
  }
  return sums;
}

bool pattern_is(const std::vector<int>& pattern, std::initializer_list<int> expected) {
  return pattern == std::vector<int>(expected);
}

IrreducibilityCertificate certify_with_scan(const Polynomial& f, const DedekindScan& scan, const GaloisOptions& options) {
  const int n = f.degree();
  IrreducibilityCertificate cert;
  for (auto p : prime_divisors(f.integer_coeffs().front())) {
    if (is_eisenstein(f, p)) {
      cert.kind = IrreducibilityKind::Eisenstein;
      cert.prime = p;
      return cert;
    }
  }
  for (const auto& entry : scan.patterns) {
    if (pattern_is(entry.pattern, {n})) {
      cert.kind = IrreducibilityKind::IrreducibleModP;
      cert.prime = entry.prime;
      return cert;
    }
  }
  // A factor of degree k over Q forces a sub-multiset of degree sum k in
  // every pattern; keep the primes that shrink the admissible set.
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  std::vector<PrimePattern> used;
  auto proper_left = [&] {
    for (int k = 1; k < n; ++k) {
      if (allowed[static_cast<std::size_t>(k)]) return true;
    }
    return false;
  };
  for (const auto& entry : scan.patterns) {
    if (!proper_left()) break;
    const auto sums = subset_sums(entry.pattern, n);
    bool shrinks = false;
    for (int k = 1; k < n; ++k) {
      if (allowed[static_cast<std::size_t>(k)] && !sums[static_cast<std::size_t>(k)]) {
        allowed[static_cast<std::size_t>(k)] = false;
        shrinks = true;
      }
    }
    if (shrinks) used.push_back(entry);
  }
  if (!proper_left()) {
    cert.kind = IrreducibilityKind::DegreePatternSieve;
    cert.sieve = std::move(used);
    return cert;
  }
  FactorOverZOptions zopts;
  zopts.max_degree = std::max(zopts.max_degree, options.resolvent_max_degree);
  auto factors = factor_over_Z(f, zopts);
  if (factors.size() == 1) {
    cert.kind = IrreducibilityKind::ZassenhausExhaustive;
  } else {
    cert.kind = IrreducibilityKind::Reducible;
    cert.factors = std::move(factors);
  }
  return cert;
}

Polynomial divide_diagonal(const Polynomial& full, const Polynomial& f, const Rational& scale) {
  // scale^n · f(x / scale) is monic with roots scale·α.
  Polynomial diagonal = f.scale_argument(Rational(1) / scale);
  diagonal = diagonal.monic();
  return exact_quotient(full, diagonal);
}

}  // namespace

DedekindScan dedekind_patterns(const Polynomial& f, int prime_budget) {
  require_monic_integer(f);
  if (prime_budget < 1) throw Error(ErrorKind::BadParameter, "prime budget must be positive");
  const auto primes = first_primes(static_cast<std::size_t>(prime_budget));
  const auto results = kernels::factor_at_primes_parallel(f, primes);
  DedekindScan scan;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (results[i]) {
      scan.patterns.push_back({primes[i], results[i]->pattern});
    } else {
      scan.skipped.push_back(primes[i]);
    }
  }
  return scan;
}

IrreducibilityCertificate certify_irreducible(const Polynomial& f, const GaloisOptions& options) {
  require_monic_integer(f);
  if (f.degree() < 1) throw Error(ErrorKind::BadParameter, "certify_irreducible needs degree >= 1");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.canonical());
  return certify_with_scan(f, dedekind_patterns(f, options.prime_budget), options);
}

bool verify_certificate(const Polynomial& f, const IrreducibilityCertificate& cert, const GaloisOptions& options) {
  const int n = f.degree();
  switch (cert.kind) {
    case IrreducibilityKind::Eisenstein:
      return is_eisenstein(f, cert.prime);
    case IrreducibilityKind::IrreducibleModP: {
      if (!is_prime(cert.prime)) return false;
      ModPolynomial reduced = ModPolynomial::reduce(f, cert.prime);
      return reduced.degree() == n && reduced.is_monic() && is_irreducible_mod_p(reduced);
    }
    case IrreducibilityKind::DegreePatternSieve: {
      std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
      for (const auto& entry : cert.sieve) {
        if (!is_prime(entry.prime)) return false;
        ModPolynomial reduced = ModPolynomial::reduce(f, entry.prime);
        if (reduced.degree() != n || !is_squarefree_mod_p(reduced)) return false;
        if (factor_mod_p(reduced).pattern != entry.pattern) return false;
        const auto sums = subset_sums(entry.pattern, n);
        for (int k = 1; k < n; ++k) allowed[static_cast<std::size_t>(k)] = allowed[static_cast<std::size_t>(k)] && sums[static_cast<std::size_t>(k)];
      }
      for (int k = 1; k < n; ++k) {
        if (allowed[static_cast<std::size_t>(k)]) return false;
      }
      return true;
    }
    case IrreducibilityKind::ZassenhausExhaustive: {
      FactorOverZOptions zopts;
      zopts.max_degree = std::max(zopts.max_degree, options.resolvent_max_degree);
      return factor_over_Z(f, zopts).size() == 1;
    }
    case IrreducibilityKind::Reducible: {
      if (cert.factors.size() < 2) return false;
      Polynomial product = Polynomial::constant(1);
      for (const auto& q : cert.factors) {
        if (q.degree() < 1) return false;
        product = product * q;
      }
      return product.primitive_part() == f.primitive_part();
    }
  }
  return false;
}

Polynomial pair_sum_resolvent(const Polynomial& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.canonical());
  if (f.degree() < 2) throw Error(ErrorKind::BadParameter, "pair_sum_resolvent needs degree >= 2");
  // composed_sum(f, f) has the roots α_i + α_j over ordered pairs including
  // i = j; strip the diagonal, then each unordered pair remains twice.
  const Polynomial off_diagonal = divide_diagonal(composed_sum(f, f), f, 2);
  auto root = poly_exact_sqrt(off_diagonal);
  if (!root || !is_squarefree(*root)) {
    throw Error(ErrorKind::CollisionDetected, "pair sums of " + f.canonical() + " collide");
  }
  return *root;
}

Polynomial ordered_pair_resolvent(const Polynomial& f, long t) {
  if (t >= -1 && t <= 1) throw Error(ErrorKind::BadParameter, "t must avoid -1, 0, 1; got " + std::to_string(t));
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.canonical());
  if (f.degree() < 2) throw Error(ErrorKind::BadParameter, "ordered_pair_resolvent needs degree >= 2");
  const Polynomial scaled = f.scale_argument(Rational(1, t)).monic();  // roots t·α
  const Polynomial out = divide_diagonal(composed_sum(f, scaled), f, Rational(1 + t));
  if (!is_squarefree(out)) {
    throw Error(ErrorKind::CollisionDetected, "ordered pair sums of " + f.canonical() + " collide at t = " + std::to_string(t));
  }
  return out;
}

Polynomial tschirnhaus(const Polynomial& f, long c) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.canonical());
  if (f.degree() < 1) throw Error(ErrorKind::BadParameter, "tschirnhaus needs degree >= 1");
  const int n = f.degree();
  std::vector<Rational> nodes;
  for (int i = 0; i <= n; ++i) nodes.emplace_back(i);
  // Res_y(f(y), node - c·y - y²) = prod (node - α² - c·α) for monic f.
  const kernels::NodeFamily family = [c](const Rational& node) {
    return Polynomial(std::vector<Rational>{node, Rational(-c), Rational(-1)});
  };
  Polynomial out = interpolate(nodes, kernels::resultants_at_parallel(f, family, nodes));
  if (out.degree() != n || !out.is_monic()) throw std::logic_error("tschirnhaus: interpolation lost monicity");
  return out;
}

std::pair<long, Polynomial> tschirnhaus_retry(const Polynomial& f) {
  for (long c : kTschirnhausSchedule) {
    Polynomial g = tschirnhaus(f, c);
    if (is_squarefree(g)) return {c, std::move(g)};
  }
  throw Error(ErrorKind::DegenerateTransform, "no squarefree Tschirnhaus transform of " + f.canonical());
}

namespace {

GaloisOptions resolvent_options(const GaloisOptions& options) {
  GaloisOptions out = options;
  out.max_degree = options.resolvent_max_degree;
  return out;
}

std::vector<Polynomial> factor_resolvent(const Polynomial& resolvent, const GaloisOptions& options) {
  FactorOverZOptions zopts;
  zopts.max_degree = options.resolvent_max_degree;
  return factor_over_Z(resolvent, zopts);
}

// Bases to try: f itself, then each squarefree Tschirnhaus transform in
// schedule order. The transforms generate the same field, so the Galois
// action on their roots is the same.
template <typename Build>
std::optional<ResolventCertificate> first_without_collision(const Polynomial& f, std::vector<std::string>& notes,
                                                            std::string_view label, Build build) {
  auto attempt = [&](const Polynomial& base, std::optional<long> c) -> std::optional<ResolventCertificate> {
    try {
      auto [resolvent, t] = build(base);
      return ResolventCertificate{c, base, t, std::move(resolvent), {}};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CollisionDetected) throw;
      notes.push_back(std::string(label) + ": " + e.what());
      return std::nullopt;
    }
  };
  if (auto cert = attempt(f, std::nullopt)) return cert;
  for (long c : kTschirnhausSchedule) {
    Polynomial g = tschirnhaus(f, c);
    if (!is_squarefree(g)) {
      notes.push_back(std::string(label) + ": Tschirnhaus transform c = " + std::to_string(c) + " is not squarefree");
      continue;
    }
    if (auto cert = attempt(g, c)) return cert;
  }
  return std::nullopt;
}

bool verify_resolvent(const Polynomial& f, const ResolventCertificate& cert, bool expect_irreducible,
                      const GaloisOptions& options, std::vector<std::string>& failures, std::string_view label) {
  const std::string tag(label);
  Polynomial base = f;
  if (cert.tschirnhaus_c) {
    base = tschirnhaus(f, *cert.tschirnhaus_c);
    if (!is_squarefree(base)) {
      failures.push_back(tag + ": Tschirnhaus transform is not squarefree");
      return false;
    }
  }
  if (!(base == cert.base)) {
    failures.push_back(tag + ": base polynomial does not match");
    return false;
  }
  Polynomial resolvent;
  try {
    resolvent = cert.t ? ordered_pair_resolvent(base, *cert.t) : pair_sum_resolvent(base);
  } catch (const Error& e) {
    failures.push_back(tag + ": " + e.what());
    return false;
  }
  if (!(resolvent == cert.resolvent)) {
    failures.push_back(tag + ": resolvent does not match");
    return false;
  }
  Polynomial product = Polynomial::constant(1);
  for (const auto& q : cert.factors) {
    product = product * q;
    if (q.degree() < 1 || !certify_irreducible(q, resolvent_options(options)).irreducible()) {
      failures.push_back(tag + ": factor " + q.canonical() + " is not irreducible");
      return false;
    }
  }
  if (!(product == resolvent)) {
    failures.push_back(tag + ": factors do not multiply to the resolvent");
    return false;
  }
  if ((cert.factors.size() == 1) != expect_irreducible) {
    failures.push_back(tag + ": verdict disagrees with the factorization");
    return false;
  }
  return true;
}

}  // namespace

TransitivityReport transitivity_report(const Polynomial& f, const GaloisOptions& options) {
  require_monic_integer(f);
  const int n = f.degree();
  if (n < 3) throw Error(ErrorKind::BadParameter, "transitivity_report needs degree >= 3");
  if (n > options.max_degree) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(n) + " exceeds bound " + std::to_string(options.max_degree));
  }
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.canonical());

  TransitivityReport report;
  report.degree = n;
  report.real_roots = sturm_real_root_count(f);

  const DedekindScan scan = dedekind_patterns(f, options.prime_budget);
  if (!scan.skipped.empty()) {
    std::string skipped = "primes with non-squarefree reduction skipped:";
    for (auto p : scan.skipped) skipped += " " + std::to_string(p);
    report.notes.push_back(skipped);
  }

  report.irreducibility = certify_with_scan(f, scan, options);
  report.transitive = report.irreducibility.irreducible();
  if (!report.transitive) {
    report.primitive = PrimitivityVerdict::Intransitive;
    report.doubly_rule = DoublyRule::NotAlmostDoubly;
    return report;
  }

  auto pair = first_without_collision(f, report.notes, "pair-sum resolvent", [](const Polynomial& base) {
    return std::pair<Polynomial, std::optional<long>>{pair_sum_resolvent(base), std::nullopt};
  });
  if (!pair) throw Error(ErrorKind::ResolventCollisionUnresolved, "every pair-sum resolvent of " + f.canonical() + " collides");
  pair->factors = factor_resolvent(pair->resolvent, options);
  report.almost_doubly = pair->factors.size() == 1;
  report.pair_resolvent = std::move(pair);

  if (!report.almost_doubly) {
    report.doubly_rule = DoublyRule::NotAlmostDoubly;
  } else {
    const auto witness = std::find_if(scan.patterns.begin(), scan.patterns.end(),
                                      [n](const PrimePattern& e) { return pattern_is(e.pattern, {1, n - 1}); });
    if (witness != scan.patterns.end()) {
      report.doubly = true;
      report.doubly_rule = DoublyRule::CycleWitness;
      report.cycle_witness = *witness;
    } else if (report.real_roots < n) {
      report.doubly = true;
      report.doubly_rule = DoublyRule::ParityShortcut;
    } else {
      auto ordered = first_without_collision(f, report.notes, "ordered-pair resolvent", [](const Polynomial& base) {
        for (long t : kOrderedPairSchedule) {
          try {
            return std::pair<Polynomial, std::optional<long>>{ordered_pair_resolvent(base, t), t};
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::CollisionDetected || t == kOrderedPairSchedule.back()) throw;
          }
        }
        throw std::logic_error("unreachable");
      });
      if (!ordered) {
        throw Error(ErrorKind::ResolventCollisionUnresolved, "every ordered-pair resolvent of " + f.canonical() + " collides");
      }
      ordered->factors = factor_resolvent(ordered->resolvent, options);
      report.doubly = ordered->factors.size() == 1;
      report.doubly_rule = DoublyRule::OrderedPairResolvent;
      report.ordered_resolvent = std::move(ordered);
    }
  }

  if (is_prime(static_cast<std::uint64_t>(n))) {
    report.primitive = PrimitivityVerdict::PrimeDegree;
  } else if (report.almost_doubly) {
    report.primitive = PrimitivityVerdict::AlmostDoublyTransitive;
  } else {
    report.primitive = PrimitivityVerdict::Undetermined;
  }
  return report;
}

std::vector<std::string> verify_report(const Polynomial& f, const TransitivityReport& report, const GaloisOptions& options) {
  std::vector<std::string> failures;
  const int n = f.degree();
  if (report.degree != n) failures.push_back("degree does not match the polynomial");
  if (report.real_roots != sturm_real_root_count(f)) failures.push_back("real root count does not match Sturm");
  if (report.doubly && !report.almost_doubly) failures.push_back("doubly without almost_doubly");
  if (report.almost_doubly && !report.transitive) failures.push_back("almost_doubly without transitive");
  if (report.irreducibility.irreducible() != report.transitive) failures.push_back("transitive disagrees with its certificate");
  if (!verify_certificate(f, report.irreducibility, options)) {
    failures.push_back("irreducibility certificate " + std::string(to_string(report.irreducibility.kind)) + " fails");
  }
  if (!report.transitive) return failures;

  if (!report.pair_resolvent) {
    failures.push_back("missing pair-sum resolvent certificate");
  } else {
    verify_resolvent(f, *report.pair_resolvent, report.almost_doubly, options, failures, "pair-sum resolvent");
  }

  switch (report.doubly_rule) {
    case DoublyRule::NotAlmostDoubly:
      if (report.almost_doubly || report.doubly) failures.push_back("NotAlmostDoubly rule with a positive verdict");
      break;
    case DoublyRule::CycleWitness: {
      if (!report.cycle_witness || !report.doubly || !report.almost_doubly) {
        failures.push_back("CycleWitness rule without witness or verdicts");
        break;
      }
      const auto& w = *report.cycle_witness;
      if (!is_prime(w.prime) || !pattern_is(w.pattern, {1, n - 1})) {
        failures.push_back("CycleWitness pattern is not {1, n-1}");
        break;
      }
      ModPolynomial reduced = ModPolynomial::reduce(f, w.prime);
      if (reduced.degree() != n || !is_squarefree_mod_p(reduced) || factor_mod_p(reduced).pattern != w.pattern) {
        failures.push_back("CycleWitness pattern does not re-derive at p = " + std::to_string(w.prime));
      }
      break;
    }
    case DoublyRule::ParityShortcut:
      if (!report.doubly || !report.almost_doubly || report.real_roots >= n) {
        failures.push_back("ParityShortcut needs non-real roots and almost double transitivity");
      }
      break;
    case DoublyRule::OrderedPairResolvent:
      if (!report.ordered_resolvent || !report.ordered_resolvent->t) {
        failures.push_back("missing ordered-pair resolvent certificate");
      } else {
        verify_resolvent(f, *report.ordered_resolvent, report.doubly, options, failures, "ordered-pair resolvent");
      }
      break;
  }
  return failures;
}

}  // namespace ttl
