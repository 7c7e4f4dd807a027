#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ttl/polynomial.hpp"

namespace ttl {

using Residue = std::uint64_t;

/// Trial division up to sqrt(n).
bool is_prime(std::uint64_t n);
/// The first `count` primes, ascending.
std::vector<std::uint64_t> first_primes(std::size_t count);

/// Polynomial over the prime field F_p, residues in [0, p).
class ModPolynomial {
 public:
  /// Throws CompositeModulus unless p is prime.
  explicit ModPolynomial(Residue p, std::vector<Residue> coeffs = {});
  /// Reduction of a rational polynomial; every denominator must be a unit mod p.
  static ModPolynomial reduce(const Polynomial& f, Residue p);
  static ModPolynomial x(Residue p) { return ModPolynomial(p, {0, 1}); }

  Residue modulus() const noexcept { return p_; }
  const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Residue coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const noexcept { return leading() == 1; }

  ModPolynomial monic() const;
  ModPolynomial derivative() const;
  /// Lifts to the integer polynomial with coefficients in [0, p).
  Polynomial lift() const;
  /// "x^2 + 3x + 4 (mod 5)" style rendering used in diagnostics.
  std::string to_string() const;

  friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }
  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b);
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b);

 private:
  ModPolynomial(Residue p, std::vector<Residue> coeffs, bool /*trusted*/);
  void trim();
  Residue p_;
  std::vector<Residue> coeffs_;
};

Residue mod_inverse(Residue a, Residue p);
Residue mod_pow(Residue a, std::uint64_t e, Residue p);

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b);
ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b);
/// base^e mod m, with e an arbitrary-size exponent.
ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& m);

struct ModFactor {
  ModPolynomial factor;
  int multiplicity;
};

struct FactorizationModP {
  Residue modulus;
  Residue leading_unit;
  std::vector<ModFactor> factors;  // monic irreducibles, sorted by (degree, coefficients)
  std::vector<int> pattern;        // factor degrees repeated by multiplicity, ascending

  ModPolynomial product() const;
};

/// Complete factorization into monic irreducibles over F_p (square-free
/// decomposition, distinct-degree, then equal-degree splitting with a fixed
/// seed sequence).
FactorizationModP factor_mod_p(const Polynomial& f, Residue p);
FactorizationModP factor_mod_p(const ModPolynomial& f);

/// Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every
/// prime q dividing n. Throws NonMonic.
bool is_irreducible_mod_p(const ModPolynomial& f);

bool is_squarefree_mod_p(const ModPolynomial& f);

}  // namespace ttl
