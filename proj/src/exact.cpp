#include "ttl/exact.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ttl/error.hpp"
#include "ttl/kernels.hpp"

namespace ttl {

namespace {

using IPoly = std::vector<Integer>;

void trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const IPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer content(const IPoly& a) {
  Integer c = 0;
  for (const auto& x : a) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
  return c;
}

Integer power(const Integer& base, unsigned long e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

IPoly to_ipoly(const Polynomial& f) {
  const Integer l = f.denominator_lcm();
  IPoly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(Rational(c * l).get_num());
  return out;
}

Polynomial from_ipoly(const IPoly& a) {
  std::vector<Rational> v;
  v.reserve(a.size());
  for (const auto& x : a) v.emplace_back(x);
  return Polynomial(std::move(v));
}

// lc(b)^(deg a - deg b + 1) · a = b·q + r
IPoly pseudo_remainder(IPoly a, const IPoly& b) {
  const int db = degree(b);
  const Integer& lb = b.back();
  long unused = degree(a) - db + 1;
  while (!a.empty() && degree(a) >= db) {
    const int k = degree(a);
    const Integer c = a.back();
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(k - db + i)] -= c * b[static_cast<std::size_t>(i)];
    trim(a);
    --unused;
  }
  if (unused > 0) {
    const Integer scale = power(lb, static_cast<unsigned long>(unused));
    for (auto& x : a) x *= scale;
  }
  return a;
}

// Subresultant algorithm for primitive-or-not integer polynomials, both of
// positive degree.
Integer subresultant_resultant(IPoly A, IPoly B) {
  const Integer a = content(A);
  const Integer b = content(B);
  for (auto& x : A) x /= a;
  for (auto& x : B) x /= b;
  Integer g = 1;
  Integer h = 1;
  int s = 1;
  const Integer t = power(a, static_cast<unsigned long>(degree(B))) * power(b, static_cast<unsigned long>(degree(A)));
  if (degree(A) < degree(B)) {
    std::swap(A, B);
    if (degree(A) % 2 == 1 && degree(B) % 2 == 1) s = -1;
  }
  for (;;) {
    const int delta = degree(A) - degree(B);
    if (degree(A) % 2 == 1 && degree(B) % 2 == 1) s = -s;
    IPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    const Integer divisor = g * power(h, static_cast<unsigned long>(delta));
    for (auto& x : R) x /= divisor;
    B = std::move(R);
    g = A.back();
    if (delta >= 1) h = power(g, static_cast<unsigned long>(delta)) / power(h, static_cast<unsigned long>(delta - 1));
    if (degree(B) > 0) continue;
    if (B.empty()) return 0;
    const int da = degree(A);
    h = power(B.back(), static_cast<unsigned long>(da)) / power(h, static_cast<unsigned long>(da - 1));
    return s * t * h;
  }
}

Rational rational_power(const Rational& q, unsigned long e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), e);
  out.canonicalize();
  return out;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace

bool is_squarefree(const Polynomial& f) {
  if (f.degree() <= 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree_part of zero");
  if (f.degree() == 0) return Polynomial::constant(1);
  return exact_quotient(f, gcd(f, f.derivative())).monic();
}

int sturm_real_root_count(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "Sturm sequence of zero");
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.canonical());
  if (f.degree() == 0) return 0;
  // Positive rescaling keeps every sign in the chain intact.
  auto normalized = [](const Polynomial& p) { return Rational(1 / abs(p.leading())) * p; };
  std::vector<Polynomial> chain{normalized(f), normalized(f.derivative())};
  for (;;) {
    Polynomial r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalized(r));
  }
  int at_neg = 0;
  int at_pos = 0;
  int prev_neg = 0;
  int prev_pos = 0;
  for (const auto& p : chain) {
    const int s_pos = sign(p.leading());
    const int s_neg = p.degree() % 2 == 0 ? s_pos : -s_pos;
    if (prev_pos != 0 && s_pos != prev_pos) ++at_pos;
    if (prev_neg != 0 && s_neg != prev_neg) ++at_neg;
    prev_pos = s_pos;
    prev_neg = s_neg;
  }
  return at_neg - at_pos;
}

Rational resultant(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "resultant with zero polynomial");
  if (f.degree() == 0) return rational_power(f.leading(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return rational_power(g.leading(), static_cast<unsigned long>(f.degree()));
  const Integer df = f.denominator_lcm();
  const Integer dg = g.denominator_lcm();
  Rational res{subresultant_resultant(to_ipoly(f), to_ipoly(g))};
  res /= Rational(power(df, static_cast<unsigned long>(g.degree())) * power(dg, static_cast<unsigned long>(f.degree())));
  return res;
}

Polynomial composed_sum(const Polynomial& f, const Polynomial& g) {
  if (!f.is_monic() || !g.is_monic()) throw Error(ErrorKind::NonMonic, "composed_sum needs monic inputs");
  if (f.degree() < 1 || g.degree() < 1) throw Error(ErrorKind::BadParameter, "composed_sum needs positive degrees");
  const int n = f.degree() * g.degree();
  std::vector<Rational> nodes;
  nodes.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) nodes.emplace_back(i);
  // Res_y(f(y), g(node - y)) = prod over roots α, β of (node - α - β).
  const kernels::NodeFamily family = [&g](const Rational& node) {
    return g.compose(Polynomial(std::vector<Rational>{node, Rational(-1)}));
  };
  Polynomial out = interpolate(nodes, kernels::resultants_at_parallel(f, family, nodes));
  if (out.degree() != n || !out.is_monic()) throw std::logic_error("composed_sum: interpolation lost monicity");
  return out;
}

std::optional<Polynomial> poly_exact_sqrt(const Polynomial& f) {
  if (!f.is_monic() || f.degree() % 2 != 0) return std::nullopt;
  const int k = f.degree() / 2;
  std::vector<Rational> g(static_cast<std::size_t>(k) + 1);
  g[static_cast<std::size_t>(k)] = 1;
  // Match coefficients of x^(2k-i) from the top: 2·g_{k-i} + (known terms).
  for (int i = 1; i <= k; ++i) {
    Rational known = 0;
    for (int a = k - i + 1; a <= k; ++a) {
      const int b = 2 * k - i - a;
      if (b >= k - i + 1 && b <= k) known += g[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
    }
    g[static_cast<std::size_t>(k - i)] = (f.coeff(static_cast<std::size_t>(2 * k - i)) - known) / 2;
  }
  Polynomial root(std::move(g));
  if (!(root * root == f)) return std::nullopt;
  return root;
}

Integer crt_lift(const std::vector<Congruence>& residues, const Rational& target) {
  Integer R = 0;
  Integer M = 1;
  for (const auto& [residue, modulus] : residues) {
    if (modulus <= 0) throw Error(ErrorKind::BadParameter, "moduli must be positive");
    Integer r = residue % modulus;
    if (r < 0) r += modulus;
    Integer common;
    mpz_gcd(common.get_mpz_t(), M.get_mpz_t(), modulus.get_mpz_t());
    if (common != 1) throw Error(ErrorKind::ModuliNotCoprime, "moduli share the factor " + common.get_str());
    Integer inv;
    mpz_invert(inv.get_mpz_t(), M.get_mpz_t(), modulus.get_mpz_t());
    if (modulus == 1) inv = 0;
    Integer step = ((r - R) * inv) % modulus;
    if (step < 0) step += modulus;
    R += M * step;
    M *= modulus;
  }
  Rational offset = (target - Rational(R)) / Rational(M);
  Integer t;
  mpz_fdiv_q(t.get_mpz_t(), offset.get_num_mpz_t(), offset.get_den_mpz_t());
  const Integer lower = R + M * t;
  const Integer upper = lower + M;
  return (target - Rational(lower)) <= (Rational(upper) - target) ? lower : upper;
}

bool is_eisenstein(const Polynomial& f, std::uint64_t p) {
  if (!f.has_integer_coeffs()) throw Error(ErrorKind::NonIntegerCoefficients, f.canonical());
  if (f.degree() < 1) return false;
  const Integer pz{static_cast<unsigned long>(p)};
  const auto c = f.integer_coeffs();
  if (c.back() % pz == 0) return false;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    if (c[k] % pz != 0) return false;
  }
  return c.front() % (pz * pz) != 0;
}

Integer factor_coefficient_bound(const Polynomial& primitive) {
  Integer max_abs = 0;
  for (const auto& c : primitive.coeffs()) max_abs = std::max(max_abs, Integer(abs(c.get_num())));
  Integer bound = max_abs * (primitive.degree() + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(primitive.degree()));
  return bound;
}

// ---------------------------------------------------------------------------
// Zassenhaus

namespace {

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

IPoly zm_reduce(IPoly a, const Integer& m) {
  for (auto& x : a) x = mod_floor(x, m);
  trim(a);
  return a;
}

IPoly zm_add(const IPoly& a, const IPoly& b, const Integer& m) {
  IPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (i < a.size() ? a[i] : Integer(0)) + (i < b.size() ? b[i] : Integer(0));
  }
  return zm_reduce(std::move(out), m);
}

IPoly zm_sub(const IPoly& a, const IPoly& b, const Integer& m) {
  IPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (i < a.size() ? a[i] : Integer(0)) - (i < b.size() ? b[i] : Integer(0));
  }
  return zm_reduce(std::move(out), m);
}

IPoly zm_mul(const IPoly& a, const IPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return zm_reduce(std::move(out), m);
}

// Division by a polynomial whose leading coefficient is 1 mod m.
std::pair<IPoly, IPoly> zm_divmod_monic(IPoly a, const IPoly& b, const Integer& m) {
  const int db = degree(b);
  if (degree(a) < db) return {IPoly{}, a};
  IPoly q(static_cast<std::size_t>(degree(a) - db + 1), Integer(0));
  for (int k = degree(a); k >= db; --k) {
    const Integer c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int i = 0; i <= db; ++i) {
      auto& slot = a[static_cast<std::size_t>(k - db + i)];
      slot = mod_floor(slot - c * b[static_cast<std::size_t>(i)], m);
    }
  }
  a.resize(static_cast<std::size_t>(db));
  trim(a);
  trim(q);
  return {q, a};
}

IPoly scale(const IPoly& a, const Integer& c, const Integer& m) {
  IPoly out(a);
  for (auto& x : out) x *= c;
  return zm_reduce(std::move(out), m);
}

IPoly from_mod(const ModPolynomial& a) {
  IPoly out;
  for (auto c : a.coeffs()) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

// s·a + t·b = 1 over F_p for coprime a, b.
std::pair<ModPolynomial, ModPolynomial> bezout(const ModPolynomial& a, const ModPolynomial& b) {
  const Residue p = a.modulus();
  ModPolynomial r0 = a, r1 = b;
  ModPolynomial s0(p, {1}), s1(p);
  ModPolynomial t0(p), t1(p, {1});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPolynomial s2 = s0 - q * s1;
    ModPolynomial t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.degree() != 0) throw std::logic_error("bezout: inputs not coprime mod p");
  const ModPolynomial unit(p, {mod_inverse(r0.leading(), p)});
  return {s0 * unit, t0 * unit};
}

struct LiftState {
  IPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m².
LiftState hensel_step(const IPoly& f, const LiftState& in, const Integer& m) {
  const Integer m2 = m * m;
  const IPoly e = zm_sub(zm_reduce(f, m2), zm_mul(in.g, in.h, m2), m2);
  auto [q, r] = zm_divmod_monic(zm_mul(in.s, e, m2), in.h, m2);
  LiftState out;
  out.g = zm_add(zm_add(in.g, zm_mul(in.t, e, m2), m2), zm_mul(q, in.g, m2), m2);
  out.h = zm_add(in.h, r, m2);
  const IPoly b = zm_sub(zm_add(zm_mul(in.s, out.g, m2), zm_mul(in.t, out.h, m2), m2), IPoly{Integer(1)}, m2);
  auto [c, d] = zm_divmod_monic(zm_mul(in.s, b, m2), out.h, m2);
  out.s = zm_sub(in.s, d, m2);
  out.t = zm_sub(zm_sub(in.t, zm_mul(in.t, b, m2), m2), zm_mul(c, out.g, m2), m2);
  return out;
}

// f ≡ lc(f)·∏ factors (mod p), factors monic and pairwise coprime. Returns
// monic lifts with f ≡ lc(f)·∏ lifts (mod M), M = p^(2^k).
std::vector<IPoly> multifactor_lift(const IPoly& f, const std::vector<ModPolynomial>& factors, Residue p,
                                    const Integer& M) {
  if (factors.size() == 1) {
    Integer inv;
    const Integer lc = mod_floor(f.back(), M);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    return {scale(f, inv, M)};
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<ModPolynomial> left(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half));
  const std::vector<ModPolynomial> right(factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end());
  ModPolynomial hmod(p, {1});
  for (const auto& q : left) hmod = hmod * q;
  const Integer pz{static_cast<unsigned long>(p)};
  ModPolynomial gmod(p, {mod_floor(f.back(), pz).get_ui()});
  for (const auto& q : right) gmod = gmod * q;
  auto [smod, tmod] = bezout(gmod, hmod);
  LiftState state{from_mod(gmod), from_mod(hmod), from_mod(smod), from_mod(tmod)};
  for (Integer m = pz; m < M; m *= m) state = hensel_step(f, state, m);
  std::vector<IPoly> out = multifactor_lift(state.h, left, p, M);
  std::vector<IPoly> rest = multifactor_lift(state.g, right, p, M);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

IPoly symmetric(IPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& x : a) {
    x = mod_floor(x, m);
    if (x > half) x -= m;
  }
  trim(a);
  return a;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace

std::vector<Polynomial> factor_over_Z(const Polynomial& f, const FactorOverZOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "factor_over_Z of zero");
  if (f.degree() > options.max_degree) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(f.degree()) + " exceeds bound " + std::to_string(options.max_degree));
  }
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.canonical());
  if (f.degree() == 0) return {};
  const Polynomial F = f.primitive_part();
  if (F.degree() == 1) return {F};
  const IPoly Fi = to_ipoly(F);
  const int n = F.degree();

  // Choose the good prime with the fewest modular factors; intersect the
  // achievable factor degrees across all tried primes.
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  std::optional<FactorizationModP> best;
  int good = 0;
  for (std::uint64_t p = 2; good < options.prime_trials; ++p) {
    if (!is_prime(p)) continue;
    ModPolynomial reduced = ModPolynomial::reduce(F, p);
    if (reduced.degree() != n || !is_squarefree_mod_p(reduced)) continue;
    ++good;
    FactorizationModP fac = factor_mod_p(reduced);
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (int d : fac.pattern) {
      for (int s = n; s >= d; --s) {
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
      }
    }
    for (int s = 0; s <= n; ++s) allowed[static_cast<std::size_t>(s)] = allowed[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
    if (!best || fac.factors.size() < best->factors.size()) best = std::move(fac);
    if (best->factors.size() == 1) return {F};
  }
  bool any_proper = false;
  for (int s = 1; s < n; ++s) any_proper = any_proper || allowed[static_cast<std::size_t>(s)];
  if (!any_proper) return {F};

  const Residue p = best->modulus;
  const Integer pz{static_cast<unsigned long>(p)};
  const Integer lc = abs(Fi.back());
  const Integer needed = 2 * lc * factor_coefficient_bound(F);
  Integer M = pz;
  while (M <= needed) M *= M;
  std::vector<ModPolynomial> modular;
  for (const auto& [q, mult] : best->factors) modular.push_back(q);
  const std::vector<IPoly> lifted = multifactor_lift(Fi, modular, p, M);

  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  Polynomial rest = F;
  std::vector<Polynomial> found;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool extracted = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      int deg_sum = 0;
      for (auto i : idx) deg_sum += degree(lifted[remaining[i]]);
      if (!allowed[static_cast<std::size_t>(deg_sum)]) continue;
      const Integer rest_lc = rest.leading().get_num();
      IPoly candidate{rest_lc};
      for (auto i : idx) candidate = zm_mul(candidate, lifted[remaining[i]], M);
      const Polynomial factor = from_ipoly(symmetric(candidate, M)).primitive_part();
      if (factor.degree() < 1) continue;
      auto [quot, rem] = divmod(rest, factor);
      if (!rem.is_zero() || !quot.has_integer_coeffs()) continue;
      found.push_back(factor);
      rest = quot;
      std::vector<std::size_t> keep;
      for (std::size_t j = 0, k = 0; j < remaining.size(); ++j) {
        if (k < idx.size() && idx[k] == j) {
          ++k;
        } else {
          keep.push_back(remaining[j]);
        }
      }
      remaining = std::move(keep);
      extracted = true;
      break;
    } while (next_combination(idx, remaining.size()));
    if (!extracted) ++s;
  }
  found.push_back(rest.primitive_part());
  std::sort(found.begin(), found.end(), polynomial_less);
  return found;
}

}  // namespace ttl
