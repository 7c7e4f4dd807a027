#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ttl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders a rational as "p" or "p/q" (lowest terms, positive denominator).
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending order of degree. The stored sequence never ends in a zero
/// coefficient, so the zero polynomial is the empty sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t k);
  static Polynomial x() { return monomial(1, 1); }
  /// Monic polynomial with the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& coeff(std::size_t k) const;
  const Rational& leading() const;
  bool is_monic() const;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool has_integer_coeffs() const;
  std::vector<Integer> integer_coeffs() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Rational operator()(const Rational& at) const;
  /// f(c·x).
  Polynomial scale_argument(const Rational& c) const;
  /// f(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  Polynomial pow(unsigned e) const;

  /// Least common multiple of the coefficient denominators.
  Integer denominator_lcm() const;
  /// Integer polynomial with coprime coefficients and positive leading
  /// coefficient, proportional to *this.
  Polynomial primitive_part() const;

  /// "-2,0,0,1" for x^3 - 2.
  std::string canonical() const;
  static Polynomial from_canonical(std::string_view text);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by a nonzero b over the rationals.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// a / b when the division is exact; throws std::logic_error otherwise.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Unique polynomial of degree < n through the n points (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace ttl
