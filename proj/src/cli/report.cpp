#include "ttl/cli/report.hpp"

#include "ttl/error.hpp"

namespace ttl::cli {

Json Report::to_json() const {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["inputs"] = inputs;
  out["results"] = results;
  out["certificates"] = certificates;
  return out;
}

std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!is_scalar(e) && !is_flat_array(e)) return false;
  }
  return true;
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += inline_value(j[i]);
    }
    return out + "]";
  }
  return j.dump();
}

void render(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value) || is_flat_array(value)) {
        out += pad + key + ": " + inline_value(value) + "\n";
      } else if (value.empty()) {
        out += pad + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += pad + key + ":\n";
        render(value, indent + 2, out);
      }
    }
    return;
  }
  // Arrays of objects or nested arrays.
  for (const auto& e : j) {
    if (is_scalar(e) || is_flat_array(e)) {
      out += pad + "- " + inline_value(e) + "\n";
    } else {
      out += pad + "-\n";
      render(e, indent + 2, out);
    }
  }
}

std::vector<int> ints(const Json& j) { return j.get<std::vector<int>>(); }

std::optional<long> optional_long(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

Json optional_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

std::string render_text(const Json& report) {
  std::string out;
  render(report, 0, out);
  return out;
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long>())));
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

Json poly_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(rational_json(c));
  return out;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected a coefficient array, got " + j.dump());
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Polynomial(std::move(coeffs));
}

Json polys_json(const std::vector<Polynomial>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(poly_json(f));
  return out;
}

std::vector<Polynomial> polys_from_json(const Json& j) {
  std::vector<Polynomial> out;
  for (const auto& f : j) out.push_back(poly_from_json(f));
  return out;
}

Json to_json(const PrimePattern& p) {
  Json out;
  out["prime"] = p.prime;
  out["pattern"] = p.pattern;
  return out;
}

PrimePattern prime_pattern_from_json(const Json& j) { return {j.at("prime").get<std::uint64_t>(), ints(j.at("pattern"))}; }

Json to_json(const IrreducibilityCertificate& c) {
  Json out;
  out["kind"] = to_string(c.kind);
  switch (c.kind) {
    case IrreducibilityKind::Eisenstein:
    case IrreducibilityKind::IrreducibleModP:
      out["prime"] = c.prime;
      break;
    case IrreducibilityKind::DegreePatternSieve: {
      Json sieve = Json::array();
      for (const auto& p : c.sieve) sieve.push_back(to_json(p));
      out["sieve"] = sieve;
      break;
    }
    case IrreducibilityKind::Reducible:
      out["factors"] = polys_json(c.factors);
      break;
    case IrreducibilityKind::ZassenhausExhaustive:
      break;
  }
  return out;
}

IrreducibilityCertificate irreducibility_from_json(const Json& j) {
  IrreducibilityCertificate c;
  const auto kind = j.at("kind").get<std::string>();
  for (auto k : {IrreducibilityKind::Eisenstein, IrreducibilityKind::IrreducibleModP,
                 IrreducibilityKind::DegreePatternSieve, IrreducibilityKind::ZassenhausExhaustive,
                 IrreducibilityKind::Reducible}) {
    if (to_string(k) == kind) {
      c.kind = k;
      if (j.contains("prime")) c.prime = j.at("prime").get<std::uint64_t>();
      if (j.contains("sieve"))
        for (const auto& p : j.at("sieve")) c.sieve.push_back(prime_pattern_from_json(p));
      if (j.contains("factors")) c.factors = polys_from_json(j.at("factors"));
      return c;
    }
  }
  throw Error(ErrorKind::ParseError, "unknown irreducibility certificate kind '" + kind + "'");
}

Json to_json(const ResolventCertificate& c) {
  Json out;
  out["tschirnhaus_c"] = optional_json(c.tschirnhaus_c);
  out["base"] = poly_json(c.base);
  out["t"] = optional_json(c.t);
  out["resolvent"] = poly_json(c.resolvent);
  out["factors"] = polys_json(c.factors);
  return out;
}

ResolventCertificate resolvent_from_json(const Json& j) {
  ResolventCertificate c;
  c.tschirnhaus_c = optional_long(j.at("tschirnhaus_c"));
  c.base = poly_from_json(j.at("base"));
  c.t = optional_long(j.at("t"));
  c.resolvent = poly_from_json(j.at("resolvent"));
  c.factors = polys_from_json(j.at("factors"));
  return c;
}

Json transitivity_results(const TransitivityReport& r) {
  Json out;
  out["transitive"] = r.transitive;
  out["almost_doubly_transitive"] = r.almost_doubly;
  out["doubly_transitive"] = r.doubly;
  out["doubly_rule"] = to_string(r.doubly_rule);
  out["primitive"] = to_string(r.primitive);
  out["notes"] = r.notes;
  return out;
}

Json transitivity_certificates(const TransitivityReport& r) {
  Json out;
  out["pair_resolvent"] = r.pair_resolvent ? to_json(*r.pair_resolvent) : Json(nullptr);
  out["cycle_witness"] = r.cycle_witness ? to_json(*r.cycle_witness) : Json(nullptr);
  out["ordered_resolvent"] = r.ordered_resolvent ? to_json(*r.ordered_resolvent) : Json(nullptr);
  return out;
}

TransitivityReport transitivity_from_json(const Json& results, const Json& certificates,
                                          const IrreducibilityCertificate& irreducibility, int degree, int real_roots) {
  TransitivityReport r;
  r.degree = degree;
  r.real_roots = real_roots;
  r.irreducibility = irreducibility;
  r.transitive = results.at("transitive").get<bool>();
  r.almost_doubly = results.at("almost_doubly_transitive").get<bool>();
  r.doubly = results.at("doubly_transitive").get<bool>();
  const auto rule = results.at("doubly_rule").get<std::string>();
  bool known = false;
  for (auto d : {DoublyRule::NotAlmostDoubly, DoublyRule::CycleWitness, DoublyRule::ParityShortcut,
                 DoublyRule::OrderedPairResolvent}) {
    if (to_string(d) == rule) {
      r.doubly_rule = d;
      known = true;
    }
  }
  if (!known) throw Error(ErrorKind::ParseError, "unknown doubly_rule '" + rule + "'");
  const auto primitive = results.at("primitive").get<std::string>();
  for (auto p : {PrimitivityVerdict::PrimeDegree, PrimitivityVerdict::AlmostDoublyTransitive,
                 PrimitivityVerdict::Undetermined, PrimitivityVerdict::Intransitive}) {
    if (to_string(p) == primitive) r.primitive = p;
  }
  if (!certificates.at("pair_resolvent").is_null()) r.pair_resolvent = resolvent_from_json(certificates.at("pair_resolvent"));
  if (!certificates.at("cycle_witness").is_null()) r.cycle_witness = prime_pattern_from_json(certificates.at("cycle_witness"));
  if (!certificates.at("ordered_resolvent").is_null())
    r.ordered_resolvent = resolvent_from_json(certificates.at("ordered_resolvent"));
  r.notes = results.at("notes").get<std::vector<std::string>>();
  return r;
}

Json to_json(const TorusClassification& c) {
  Json out;
  out["g"] = c.g;
  out["field_degree"] = c.field_degree;
  out["signature"] = c.r ? Json{{"r", *c.r}, {"s", *c.s}} : Json(nullptr);
  out["endomorphism_degree"] = to_string(c.endo_degree);
  out["aut_rank"] = c.aut_rank ? Json(*c.aut_rank) : Json(nullptr);
  out["hodge_group"] = c.hodge_group;
  out["hodge_group_dim"] = c.hodge_group_dim ? Json(*c.hodge_group_dim) : Json(nullptr);
  out["two_simple"] = to_string(c.two_simple);
  Json constraints = Json::array();
  for (const auto& k : c.constraints) constraints.push_back({{"condition", k.condition}, {"status", k.status}});
  out["constraints"] = constraints;
  out["violated"] = c.violated ? Json(*c.violated) : Json(nullptr);
  out["notes"] = c.notes;
  return out;
}

Json to_json(const TransitivityProfile& p) {
  Json out;
  out["order"] = p.order;
  out["transitive"] = p.transitive;
  out["two_set_transitive"] = p.two_set_transitive;
  out["two_transitive"] = p.two_transitive;
  out["primitive"] = to_string(p.primitive_witness);
  out["point_orbit_sizes"] = p.point_orbit_sizes;
  out["two_subset_orbit_sizes"] = p.two_subset_orbit_sizes;
  out["ordered_pair_orbit_sizes"] = p.ordered_pair_orbit_sizes;
  return out;
}

Json to_json(const MultiplicityVector& v) {
  Json out;
  out["real_entries"] = v.real_entries;
  Json pairs = Json::array();
  for (auto [a, b] : v.pair_entries) pairs.push_back(Json::array({a, b}));
  out["pair_entries"] = pairs;
  out["h20_dim"] = v.h20_dim;
  out["two_simple_compatible"] = v.two_simple_compatible;
  out["excluded_not_simple"] = v.excluded_not_simple;
  return out;
}

Json to_json(const WeightA& w) {
  Json out;
  out["rank"] = w.rank;
  out["coefficients"] = w.coeffs;
  out["label"] = w.to_string();
  return out;
}

}  // namespace ttl::cli
