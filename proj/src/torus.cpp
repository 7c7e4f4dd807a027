#include "ttl/torus.hpp"

#include <algorithm>

#include "ttl/error.hpp"
#include "ttl/exact.hpp"

namespace ttl {

std::string_view to_string(EndoDegree e) {
  switch (e) {
    case EndoDegree::One: return "1";
    case EndoDegree::G: return "g";
    case EndoDegree::TwoG: return "2g";
    case EndoDegree::Incompatible: return "incompatible";
  }
  return "?";
}

std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Undetermined: return "undetermined";
  }
  return "?";
}

std::string_view to_string(H2Case c) { return c == H2Case::DegreeG ? "degree_g" : "degree_2g"; }

FieldAnalysis analyze_field(const Polynomial& f, const GaloisOptions& options) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "zero polynomial defines no field");
  if (!f.is_monic()) throw Error(ErrorKind::NonMonic, f.canonical());
  if (f.degree() < 1) throw Error(ErrorKind::BadParameter, "a field needs a polynomial of degree >= 1");
  if (f.degree() > options.max_degree) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(f.degree()) + " exceeds bound " + std::to_string(options.max_degree));
  }
  if (!is_squarefree(f)) throw Error(ErrorKind::NotSquarefree, f.canonical());

  FieldAnalysis out;
  out.input = f;
  out.n = f.degree();
  out.scale = f.denominator_lcm();
  out.defining = f.scale_argument(Rational(1) / Rational(out.scale)).monic();
  out.r = sturm_real_root_count(out.defining);
  out.s = (out.n - out.r) / 2;

  if (out.n >= 3) {
    out.transitivity = transitivity_report(out.defining, options);
    out.irreducibility = out.transitivity->irreducibility;
  } else {
    out.irreducibility = certify_irreducible(out.defining, options);
  }
  if (!out.irreducibility.irreducible()) {
    std::string factors;
    for (const auto& q : out.irreducibility.factors) factors += (factors.empty() ? "" : "; ") + q.canonical();
    throw Error(ErrorKind::ReduciblePolynomial, out.defining.canonical() + " factors as [" + factors + "]");
  }
  return out;
}

int unit_rank(int r, int s) {
  if (r < 0 || s < 0) throw Error(ErrorKind::BadParameter, "signature entries must be nonnegative");
  if (r + s == 0) throw Error(ErrorKind::EmptySignature, "r + s must be positive");
  return r + s - 1;
}

int min_aut_rank(int g) { return (g - 1) / 2; }

namespace {

void require_g(int g, int minimum) {
  if (g < minimum) {
    throw Error(ErrorKind::BadDimension, "g must be at least " + std::to_string(minimum) + ", got " + std::to_string(g));
  }
}

ConstraintCheck primitivity_check(const FieldAnalysis& field) {
  const auto verdict = field.transitivity ? field.transitivity->primitive : PrimitivityVerdict::Undetermined;
  switch (verdict) {
    case PrimitivityVerdict::PrimeDegree:
      return {"E primitive", "satisfied (prime degree)"};
    case PrimitivityVerdict::AlmostDoublyTransitive:
      return {"E primitive", "satisfied (almost doubly transitive)"};
    case PrimitivityVerdict::Intransitive:
      return {"E primitive", "violated"};
    case PrimitivityVerdict::Undetermined:
      break;
  }
  return {"E primitive", "undetermined"};
}

}  // namespace

TorusClassification classify_torus(int g) {
  require_g(g, 3);
  TorusClassification out;
  out.g = g;
  out.field_degree = 1;
  out.r = 1;
  out.s = 0;
  out.endo_degree = EndoDegree::One;
  out.aut_rank = 0;
  out.hodge_group = "Q-simple semisimple";
  out.two_simple = Tristate::Undetermined;
  out.constraints.push_back({"End(T) = Z, Aut(T) = {±1}", "satisfied"});
  out.notes.push_back("2-simplicity depends on the Hodge group, not on the endomorphism algebra alone");
  return out;
}

TorusClassification classify_torus(int g, const FieldAnalysis& field) {
  require_g(g, 3);
  if (field.n == 1) return classify_torus(g);
  TorusClassification out;
  out.g = g;
  out.field_degree = field.n;
  out.r = field.r;
  out.s = field.s;
  const bool almost = field.transitivity && field.transitivity->almost_doubly;
  const bool doubly = field.transitivity && field.transitivity->doubly;

  if (field.n == g) {
    out.endo_degree = EndoDegree::G;
    const auto primitive = primitivity_check(field);
    out.constraints.push_back(primitive);
    if (primitive.status == "violated") {
      out.endo_degree = EndoDegree::Incompatible;
      out.violated = "E must be a primitive number field";
      return out;
    }
    if (primitive.status == "undetermined") {
      out.notes.push_back("primitivity is only certified for prime degree or almost double transitivity");
    }
    const int d = unit_rank(field.r, field.s);
    const bool in_range = d >= 1 && d >= min_aut_rank(g) && d <= g - 1;
    out.constraints.push_back({"ceil(g/2 - 1) <= d <= g - 1 with d = r + s - 1", in_range ? "satisfied" : "violated"});
    if (!in_range) {
      out.endo_degree = EndoDegree::Incompatible;
      out.violated = "unit rank outside [ceil(g/2 - 1), g - 1]";
      return out;
    }
    out.aut_rank = d;
    out.hodge_group = "Res_{E/Q} SL_2";
    out.hodge_group_dim = 3 * g;
    out.two_simple = almost ? Tristate::Yes : Tristate::No;
    out.constraints.push_back({"T 2-simple iff E almost doubly transitive", almost ? "satisfied" : "violated"});
    if (field.r == g) out.notes.push_back("totally real: d = g - 1, the only case open to abelian varieties");
    return out;
  }

  if (field.n == 2 * g) {
    out.endo_degree = EndoDegree::TwoG;
    out.constraints.push_back({"E purely imaginary (r = 0)", field.r == 0 ? "satisfied" : "violated"});
    if (field.r != 0) {
      out.endo_degree = EndoDegree::Incompatible;
      out.violated = "a degree-2g endomorphism field must be purely imaginary";
      return out;
    }
    out.aut_rank = unit_rank(field.r, field.s);
    out.constraints.push_back(primitivity_check(field));
    out.constraints.push_back({"if E is not primitive, its only proper subfield besides Q has degree g", "reported"});
    out.hodge_group = "norm-one torus S_E^1";
    out.hodge_group_dim = 2 * g - 1;
    // With r = 0 the group order is even, so almost double transitivity
    // already gives double transitivity.
    out.two_simple = doubly ? Tristate::Yes : Tristate::Undetermined;
    if (doubly) {
      out.notes.push_back("doubly transitive: the Hodge group is the simple norm-one torus and H^2 is a simple module");
    }
    return out;
  }

  out.endo_degree = EndoDegree::Incompatible;
  out.violated = "field degree " + std::to_string(field.n) + " is not 1, g or 2g";
  out.constraints.push_back({"[E:Q] in {1, g, 2g}", "violated"});
  return out;
}

MultiplicityEnumeration enumerate_multiplicity_vectors(int g, int field_degree, int r, int s) {
  require_g(g, 2);
  if (field_degree < 1 || (2 * g) % field_degree != 0 || r < 0 || s < 0 || r + 2 * s != field_degree) {
    throw Error(ErrorKind::InconsistentSignature, "need r + 2s = degree dividing 2g; got degree " +
                                                      std::to_string(field_degree) + ", r = " + std::to_string(r) +
                                                      ", s = " + std::to_string(s) + ", g = " + std::to_string(g));
  }
  const int d_E = 2 * g / field_degree;
  MultiplicityEnumeration out;
  if (d_E % 2 != 0 && r > 0) {
    out.no_vector_reason = "NoVector: d_E = " + std::to_string(d_E) + " is odd, so a real embedding cannot carry n = d_E/2";
    return out;
  }
  const long full = static_cast<long>(g) * (g - 1) / 2;
  std::vector<int> ks(static_cast<std::size_t>(s), 0);
  for (;;) {
    MultiplicityVector v;
    v.g = g;
    v.d_E = d_E;
    v.real_entries.assign(static_cast<std::size_t>(r), d_E / 2);
    int total = r * (d_E / 2);
    bool extreme = r == 0;
    for (int k : ks) {
      v.pair_entries.emplace_back(k, d_E - k);
      total += d_E;
      extreme = extreme && (k == 0 || k == d_E);
    }
    if (total != g) throw std::logic_error("multiplicity vector does not sum to g");
    for (int e : v.real_entries) v.h20_dim += static_cast<long>(e) * (e - 1) / 2;
    for (auto [a, b] : v.pair_entries) v.h20_dim += static_cast<long>(a) * (a - 1) / 2 + static_cast<long>(b) * (b - 1) / 2;
    v.excluded_not_simple = g >= 3 && d_E >= 2 && extreme;
    v.two_simple_compatible = (v.h20_dim == 0 || v.h20_dim == full) && !v.excluded_not_simple;
    out.vectors.push_back(std::move(v));

    // Next vector: the last pair varies fastest.
    int pos = s - 1;
    while (pos >= 0 && ks[static_cast<std::size_t>(pos)] == d_E) ks[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++ks[static_cast<std::size_t>(pos)];
  }
  return out;
}

H2Decomposition h2_decomposition(int g, H2Case c, const PermGroup& action) {
  require_g(g, 2);
  const int points = c == H2Case::DegreeG ? g : 2 * g;
  if (action.n != points) {
    throw Error(ErrorKind::WrongPointCount, std::string(to_string(c)) + " needs an action on " + std::to_string(points) +
                                                " points, got " + std::to_string(action.n));
  }
  if (orbits_on_points(action).size() != 1) throw Error(ErrorKind::NotTransitive, "the action is not transitive");
  H2Decomposition out;
  out.g = g;
  out.h2_case = c;
  out.invariant_dim = c == H2Case::DegreeG ? g : 0;
  out.total_dim = out.invariant_dim;
  for (const auto& orbit : orbits_on_2subsets(action)) {
    out.orbit_sizes.push_back(orbit.size());
    const long dim = static_cast<long>(orbit.size()) * (c == H2Case::DegreeG ? 4 : 1);
    out.moving_summands.push_back(dim);
    out.total_dim += dim;
  }
  out.simple_verdict = out.orbit_sizes.size() == 1;
  return out;
}

std::pair<int, int> aut_rank_to_signature(int g, int d) {
  require_g(g, 3);
  if (d < min_aut_rank(g) || d > g - 1) {
    throw Error(ErrorKind::RankOutOfRange, "d = " + std::to_string(d) + " outside [" + std::to_string(min_aut_rank(g)) +
                                               ", " + std::to_string(g - 1) + "] for g = " + std::to_string(g));
  }
  return {2 * (d + 1) - g, g - d - 1};
}

ModPolynomial first_irreducible(Residue p, int degree) {
  if (degree < 1) throw Error(ErrorKind::BadParameter, "degree must be positive");
  // Codes enumerate (c_0, ..., c_{degree-1}) with c_0 varying fastest.
  std::vector<Residue> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  for (;;) {
    ModPolynomial u(p, c);
    if (is_irreducible_mod_p(u)) return u;
    std::size_t pos = 0;
    while (pos < static_cast<std::size_t>(degree) && c[pos] == p - 1) c[pos++] = 0;
    if (pos == static_cast<std::size_t>(degree)) break;
    ++c[pos];
  }
  throw std::logic_error("no irreducible polynomial found");
}

SynthesisResult synthesize_field(int n, int r, int s, const SynthesisOptions& options) {
  if (r < 0 || s < 0 || r + 2 * s != n) {
    throw Error(ErrorKind::InconsistentSignature, "r + 2s must equal n; got n = " + std::to_string(n) +
                                                      ", r = " + std::to_string(r) + ", s = " + std::to_string(s));
  }
  if (n < 3) throw Error(ErrorKind::BadParameter, "synthesis needs n >= 3");
  if (n > options.galois.max_degree) {
    throw Error(ErrorKind::DegreeBoundExceeded,
                "degree " + std::to_string(n) + " exceeds bound " + std::to_string(options.galois.max_degree));
  }

  SynthesisResult out;
  out.u_ell = first_irreducible(out.ell, n - 1);
  const ModPolynomial h_ell = ModPolynomial::x(out.ell) * out.u_ell;
  const Integer mod_p2 = static_cast<unsigned long>(out.p * out.p);
  const Integer mod_ell = static_cast<unsigned long>(out.ell);

  Integer K = 1;
  for (int attempt = 1; attempt <= options.max_retries; ++attempt, K *= 2) {
    // Archimedean model: r real roots K, 2K, ... and s pairs ±iK, ±2iK, ...
    Polynomial h_inf = Polynomial::constant(1);
    for (int i = 1; i <= r; ++i) h_inf = h_inf * Polynomial(std::vector<Rational>{Rational(-K * i), 1});
    for (int j = 1; j <= s; ++j) {
      const Integer kj = K * j;
      h_inf = h_inf * Polynomial(std::vector<Rational>{Rational(kj * kj), 0, 1});
    }
    // x^n - p mod p², x·u(x) mod ℓ, nearest to the model.
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    coeffs.back() = 1;
    for (int k = 0; k < n; ++k) {
      const Integer target_p = k == 0 ? mod_p2 - static_cast<unsigned long>(out.p) : Integer(0);
      const Integer target_ell = static_cast<unsigned long>(h_ell.coeff(static_cast<std::size_t>(k)));
      coeffs[static_cast<std::size_t>(k)] =
          crt_lift({{target_p, mod_p2}, {target_ell, mod_ell}}, h_inf.coeff(static_cast<std::size_t>(k)));
    }
    Polynomial f(std::move(coeffs));

    if (!is_eisenstein(f, out.p)) throw std::logic_error("synthesis lost the Eisenstein class");
    if (factor_mod_p(f, out.ell).pattern != std::vector<int>{1, n - 1}) {
      throw std::logic_error("synthesis lost the mod-3 pattern");
    }
    // Eisenstein makes f irreducible, hence squarefree, so Sturm applies.
    if (sturm_real_root_count(f) != r) continue;
    FieldAnalysis analysis = analyze_field(f, options.galois);
    if (analysis.n != n || analysis.r != r || analysis.s != s || !analysis.transitivity || !analysis.transitivity->doubly) {
      continue;
    }
    out.f = std::move(f);
    out.analysis = std::move(analysis);
    out.scale_K = K;
    out.attempts = attempt;
    return out;
  }
  throw Error(ErrorKind::SynthesisExhausted, "no certified polynomial for (n, r, s) = (" + std::to_string(n) + ", " +
                                                 std::to_string(r) + ", " + std::to_string(s) + ") after " +
                                                 std::to_string(options.max_retries) + " scales");
}

TorusProfile synthesize_torus_profile(int g, int d, const SynthesisOptions& options) {
  const auto [r, s] = aut_rank_to_signature(g, d);
  TorusProfile out{synthesize_field(g, r, s, options), {}};
  out.classification = classify_torus(g, out.synthesis.analysis);
  if (out.classification.endo_degree != EndoDegree::G || out.classification.aut_rank != d) {
    throw Error(ErrorKind::VerificationFailed, "synthesized field does not realize rank " + std::to_string(d));
  }
  return out;
}

}  // namespace ttl
