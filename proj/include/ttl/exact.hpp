#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ttl/modp.hpp"
#include "ttl/polynomial.hpp"

namespace ttl {

/// Number of distinct real roots of a nonzero square-free f, from the sign
/// variations of its Sturm sequence at -inf and +inf.
/// Throws ZeroPolynomial or NotSquarefree.
int sturm_real_root_count(const Polynomial& f);

/// f / gcd(f, f'), monic. Throws ZeroPolynomial.
Polynomial squarefree_part(const Polynomial& f);
bool is_squarefree(const Polynomial& f);

/// Res(f, g) by the subresultant remainder sequence over the integers.
/// Throws ZeroPolynomial.
Rational resultant(const Polynomial& f, const Polynomial& g);

/// Monic polynomial of degree deg f · deg g whose roots are the sums α + β
/// over the roots of f and g, computed as Res_y(f(y), g(x - y)) sampled at
/// deg f · deg g + 1 nodes and interpolated. Throws NonMonic.
Polynomial composed_sum(const Polynomial& f, const Polynomial& g);

/// Monic g with g² = f, or nullopt.
std::optional<Polynomial> poly_exact_sqrt(const Polynomial& f);

struct Congruence {
  Integer residue;
  Integer modulus;
};

/// The integer in the common residue class nearest to target, ties toward
/// -inf. Throws ModuliNotCoprime.
Integer crt_lift(const std::vector<Congruence>& residues, const Rational& target);

struct FactorOverZOptions {
  int max_degree = 12;
  /// Good primes tried when choosing the one with the fewest modular factors.
  int prime_trials = 12;
};

/// Irreducible factorization over the rationals by Zassenhaus: factor modulo
/// a good prime, Hensel-lift past the coefficient bound, recombine subsets.
/// Factors are primitive integer polynomials with positive leading
/// coefficient, sorted by degree then coefficients.
/// Throws DegreeBoundExceeded, NotSquarefree, ZeroPolynomial.
std::vector<Polynomial> factor_over_Z(const Polynomial& f, const FactorOverZOptions& options = {});

/// Coefficient bound 2^deg · max|coeff| · (deg + 1) used for Hensel lifting.
Integer factor_coefficient_bound(const Polynomial& primitive);

/// All non-leading coefficients divisible by p, leading not, constant term
/// not divisible by p². Throws NonIntegerCoefficients.
bool is_eisenstein(const Polynomial& f, std::uint64_t p);

}  // namespace ttl
