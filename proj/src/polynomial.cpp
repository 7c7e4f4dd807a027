#include "ttl/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ttl/error.hpp"
#include "ttl/kernels.hpp"

namespace ttl {

namespace {
const Rational kZero{0};
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial out = constant(1);
  for (const auto& r : roots) out = out * Polynomial(std::vector<Rational>{-r, Rational(1)});
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool Polynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> Polynomial::integer_coeffs() const {
  if (!has_integer_coeffs()) throw Error(ErrorKind::NonIntegerCoefficients, canonical());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_num());
  return out;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize zero polynomial");
  if (coeffs_.back() == 1) return *this;
  Rational inv = 1 / coeffs_.back();
  return inv * *this;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational power = 1;
  for (auto& a : v) {
    a *= power;
    power *= c;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Integer Polynomial::denominator_lcm() const {
  Integer l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Polynomial Polynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  Integer l = denominator_lcm();
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Rational scaled = c * l;
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& i : ints) out.emplace_back(Integer(i / content));
  return Polynomial(std::move(out));
}

std::string Polynomial::canonical() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ',';
    out += to_string(coeffs_[k]);
  }
  return out;
}

Polynomial Polynomial::from_canonical(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    v.push_back(parse_rational(item));
    start = comma + 1;
  }
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Rational> v(a.coeffs_);
  for (auto& c : v) c = -c;
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return Polynomial(kernels::multiply(a.coeffs_, b.coeffs_));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return {};
  std::vector<Rational> v(a.coeffs_);
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rational c = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= c * b.coeff(static_cast<std::size_t>(i));
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    // Keep the remainders monic so coefficient sizes stay bounded.
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division: " + a.canonical() + " / " + b.canonical());
  return q;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  // Newton divided differences, then expansion of the Newton form.
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  Polynomial acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * Polynomial(std::vector<Rational>{-xs[i], Rational(1)}) + Polynomial::constant(dd[i]);
  }
  return acc;
}

}  // namespace ttl
