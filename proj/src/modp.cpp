#include "ttl/modp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ttl/error.hpp"

namespace ttl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> first_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; out.size() < count; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

Residue mod_pow(Residue a, std::uint64_t e, Residue p) {
  Residue result = 1 % p;
  a %= p;
  while (e != 0) {
    if (e & 1U) result = result * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return result;
}

Residue mod_inverse(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::BadParameter, "zero has no inverse mod " + std::to_string(p));
  return mod_pow(a, p - 2, p);
}

namespace {

void check_modulus(Residue p) {
  if (p >= (Residue{1} << 32U)) throw Error(ErrorKind::BadModulus, "modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
}

}  // namespace

ModPolynomial::ModPolynomial(Residue p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  check_modulus(p);
  for (auto& c : coeffs_) c %= p_;
  trim();
}

ModPolynomial::ModPolynomial(Residue p, std::vector<Residue> coeffs, bool) : p_(p), coeffs_(std::move(coeffs)) {
  trim();
}

void ModPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPolynomial ModPolynomial::reduce(const Polynomial& f, Residue p) {
  check_modulus(p);
  std::vector<Residue> v;
  v.reserve(f.coeffs().size());
  const Integer modulus{static_cast<unsigned long>(p)};
  for (const auto& c : f.coeffs()) {
    Integer num = c.get_num() % modulus;
    if (num < 0) num += modulus;
    Integer den = c.get_den() % modulus;
    if (den == 0) {
      throw Error(ErrorKind::NonIntegerCoefficients, "denominator of " + ttl::to_string(c) + " vanishes mod " + std::to_string(p));
    }
    Residue r = num.get_ui() * mod_inverse(den.get_ui(), p) % p;
    v.push_back(r);
  }
  return ModPolynomial(p, std::move(v), true);
}

ModPolynomial ModPolynomial::monic() const {
  if (coeffs_.empty()) throw Error(ErrorKind::ZeroPolynomial, "cannot normalize zero polynomial");
  Residue inv = mod_inverse(coeffs_.back(), p_);
  std::vector<Residue> v(coeffs_);
  for (auto& c : v) c = c * inv % p_;
  return ModPolynomial(p_, std::move(v), true);
}

ModPolynomial ModPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return ModPolynomial(p_, {}, true);
  std::vector<Residue> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * (k % p_) % p_;
  return ModPolynomial(p_, std::move(v), true);
}

Polynomial ModPolynomial::lift() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (auto c : coeffs_) v.emplace_back(static_cast<unsigned long>(c));
  return Polynomial(std::move(v));
}

std::string ModPolynomial::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out << (k ? "," : "") << coeffs_[k];
  out << "] mod " << p_;
  return out.str();
}

ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
  const Residue p = a.p_;
  std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (a.coeff(k) + b.coeff(k)) % p;
  return ModPolynomial(p, std::move(v), true);
}

ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
  const Residue p = a.p_;
  std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = (a.coeff(k) + p - b.coeff(k)) % p;
  return ModPolynomial(p, std::move(v), true);
}

ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
  const Residue p = a.p_;
  if (a.is_zero() || b.is_zero()) return ModPolynomial(p, {}, true);
  std::vector<Residue> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = (v[i + j] + a.coeffs_[i] * b.coeffs_[j]) % p;
  }
  return ModPolynomial(p, std::move(v), true);
}

std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& a, const ModPolynomial& b) {
  const Residue p = a.modulus();
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial mod p");
  if (a.degree() < b.degree()) return {ModPolynomial(p), a};
  std::vector<Residue> rem(a.coeffs());
  const int db = b.degree();
  std::vector<Residue> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const Residue inv = mod_inverse(b.leading(), p);
  for (int k = a.degree(); k >= db; --k) {
    const Residue c = rem[static_cast<std::size_t>(k)] * inv % p;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - db + i)];
      slot = (slot + p - c * b.coeff(static_cast<std::size_t>(i)) % p) % p;
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ModPolynomial(p, std::move(quot)), ModPolynomial(p, std::move(rem))};
}

ModPolynomial gcd(const ModPolynomial& a, const ModPolynomial& b) {
  ModPolynomial x = a;
  ModPolynomial y = b;
  while (!y.is_zero()) {
    ModPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

ModPolynomial powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& m) {
  ModPolynomial result(m.modulus(), {1});
  result = divmod(result, m).second;
  ModPolynomial b = divmod(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

ModPolynomial FactorizationModP::product() const {
  ModPolynomial out(modulus, {leading_unit});
  for (const auto& [factor, mult] : factors) {
    for (int i = 0; i < mult; ++i) out = out * factor;
  }
  return out;
}

bool is_squarefree_mod_p(const ModPolynomial& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

using Factors = std::vector<ModFactor>;

// f(x) = g(x^p) -> g(x); valid because a^p = a in F_p.
ModPolynomial pth_root(const ModPolynomial& f) {
  const Residue p = f.modulus();
  std::vector<Residue> v;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) v.push_back(f.coeffs()[k]);
  return ModPolynomial(p, std::move(v));
}

void squarefree_decomposition(const ModPolynomial& f, int scale, std::vector<std::pair<ModPolynomial, int>>& out) {
  if (f.degree() <= 0) return;
  const ModPolynomial d = f.derivative();
  if (d.is_zero()) {
    squarefree_decomposition(pth_root(f), scale * static_cast<int>(f.modulus()), out);
    return;
  }
  ModPolynomial c = gcd(f, d);
  ModPolynomial w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    ModPolynomial y = gcd(w, c);
    ModPolynomial fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c), scale * static_cast<int>(f.modulus()), out);
}

// Splits a monic squarefree f into products of irreducibles of equal degree.
std::vector<std::pair<ModPolynomial, int>> distinct_degree(const ModPolynomial& f) {
  std::vector<std::pair<ModPolynomial, int>> out;
  const Residue p = f.modulus();
  const Integer pz{static_cast<unsigned long>(p)};
  ModPolynomial rest = f;
  ModPolynomial h = ModPolynomial::x(p);
  const ModPolynomial x = ModPolynomial::x(p);
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, pz, rest);
    ModPolynomial g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      rest = divmod(rest, g).first;
      h = divmod(h, rest).second;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), rest.degree());
  return out;
}

void equal_degree(const ModPolynomial& f, int d, std::mt19937_64& rng, std::vector<ModPolynomial>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Residue p = f.modulus();
  Integer half_exponent;
  if (p != 2) {
    mpz_ui_pow_ui(half_exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    half_exponent = (half_exponent - 1) / 2;
  }
  const Integer two{2};
  for (;;) {
    std::vector<Residue> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = rng() % p;
    ModPolynomial a(p, std::move(coeffs));
    if (a.degree() <= 0) continue;
    ModPolynomial t(p);
    if (p == 2) {
      ModPolynomial power = a;
      t = a;
      for (int i = 1; i < d; ++i) {
        power = powmod(power, two, f);
        t = t + power;
      }
    } else {
      t = powmod(a, half_exponent, f) - ModPolynomial(p, {1});
    }
    ModPolynomial g = gcd(t, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

bool factor_less(const ModFactor& a, const ModFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  if (!std::equal(ca.begin(), ca.end(), cb.begin(), cb.end())) {
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

FactorizationModP factor_mod_p(const ModPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_mod_p of zero");
  const Residue p = f.modulus();
  FactorizationModP out{p, f.leading(), {}, {}};
  ModPolynomial g = f.monic();
  std::vector<std::pair<ModPolynomial, int>> sqf;
  squarefree_decomposition(g, 1, sqf);
  // Fixed seed: factorizations are reproducible run to run.
  std::mt19937_64 rng(0x7a55e11eULL ^ (p * 0x9e3779b97f4a7c15ULL) ^ static_cast<std::uint64_t>(g.degree()));
  for (const auto& [part, mult] : sqf) {
    for (const auto& [chunk, d] : distinct_degree(part)) {
      std::vector<ModPolynomial> irreducibles;
      equal_degree(chunk, d, rng, irreducibles);
      for (auto& q : irreducibles) out.factors.push_back({std::move(q), mult});
    }
  }
  // Merge equal factors that arrived through different square-free layers.
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  std::vector<ModFactor> merged;
  for (auto& fac : out.factors) {
    if (!merged.empty() && merged.back().factor == fac.factor) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  out.factors = std::move(merged);
  for (const auto& [fac, mult] : out.factors) {
    for (int i = 0; i < mult; ++i) out.pattern.push_back(fac.degree());
  }
  std::sort(out.pattern.begin(), out.pattern.end());
  return out;
}

FactorizationModP factor_mod_p(const Polynomial& f, Residue p) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_mod_p of zero");
  ModPolynomial reduced = ModPolynomial::reduce(f, p);
  if (reduced.degree() != f.degree()) {
    throw Error(ErrorKind::LeadingCoefficientVanishesModP, "leading coefficient of " + f.canonical() + " vanishes mod " + std::to_string(p));
  }
  return factor_mod_p(reduced);
}

bool is_irreducible_mod_p(const ModPolynomial& f) {
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.to_string());
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::BadParameter, "degree must be at least 1");
  if (n == 1) return true;
  const Residue p = f.modulus();
  const Integer pz{static_cast<unsigned long>(p)};
  const ModPolynomial x = ModPolynomial::x(p);
  // frob[k] = x^(p^k) mod f
  std::vector<ModPolynomial> frob{divmod(x, f).second};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), pz, f));
  if (!(frob[static_cast<std::size_t>(n)] == divmod(x, f).second)) return false;
  int m = n;
  for (int q = 2; q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    if (gcd(frob[static_cast<std::size_t>(n / q)] - x, f).degree() != 0) return false;
  }
  return true;
}

}  // namespace ttl
