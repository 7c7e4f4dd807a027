#pragma once

#include <json.hpp>
#include <string>

#include "ttl/galois.hpp"
#include "ttl/lie.hpp"
#include "ttl/permgrp.hpp"
#include "ttl/polynomial.hpp"
#include "ttl/torus.hpp"

namespace ttl::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json certificates = Json::object();

  Json to_json() const;
};

/// Pretty JSON with a trailing newline; key order is insertion order.
std::string render_json(const Json& report);
/// Indented "key: value" rendering of the same payload.
std::string render_text(const Json& report);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
/// Number when it fits in a long, otherwise a decimal string.
Json integer_json(const Integer& z);
Integer integer_from_json(const Json& j);
/// Ascending coefficient strings.
Json poly_json(const Polynomial& f);
Polynomial poly_from_json(const Json& j);
Json polys_json(const std::vector<Polynomial>& fs);
std::vector<Polynomial> polys_from_json(const Json& j);

Json to_json(const PrimePattern& p);
PrimePattern prime_pattern_from_json(const Json& j);
Json to_json(const IrreducibilityCertificate& c);
IrreducibilityCertificate irreducibility_from_json(const Json& j);
Json to_json(const ResolventCertificate& c);
ResolventCertificate resolvent_from_json(const Json& j);

/// Verdicts of a transitivity report (results side).
Json transitivity_results(const TransitivityReport& r);
/// Resolvents and witnesses (certificates side).
Json transitivity_certificates(const TransitivityReport& r);
/// Rebuilds a report from the two halves above plus the field's irreducibility
/// certificate and signature.
TransitivityReport transitivity_from_json(const Json& results, const Json& certificates,
                                          const IrreducibilityCertificate& irreducibility, int degree, int real_roots);

Json to_json(const TorusClassification& c);
Json to_json(const TransitivityProfile& p);
Json to_json(const MultiplicityVector& v);
Json to_json(const WeightA& w);

}  // namespace ttl::cli
