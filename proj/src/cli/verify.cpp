#include "ttl/cli/verify.hpp"

#include <set>

#include "ttl/cli/commands.hpp"
#include "ttl/cli/parse.hpp"
#include "ttl/exact.hpp"
#include "ttl/modp.hpp"

namespace ttl::cli {

namespace {

using Failures = std::vector<std::string>;

void expect(bool ok, const std::string& what, Failures& out) {
  if (!ok) out.push_back(what);
}

CommonOptions options_from(const Json& inputs) {
  CommonOptions o;
  o.max_degree = inputs.at("max_degree").get<int>();
  o.prime_budget = inputs.at("prime_budget").get<int>();
  return o;
}

/// Field certificates shared by analyze and synthesize.
void check_field(const Polynomial& f, const Json& report, Failures& out) {
  const Json& results = report.at("results");
  const Json& certs = report.at("certificates");
  const Json& field = results.at("field");
  const auto options = options_from(report.at("inputs")).galois();

  const Polynomial defining = poly_from_json(field.at("defining_polynomial"));
  const Integer scale = integer_from_json(field.at("scale"));
  expect(scale > 0, "scale must be positive", out);
  if (scale > 0) {
    expect(defining == f.scale_argument(Rational(1) / Rational(scale)).monic(), "defining polynomial is not D^n f(x/D)", out);
  }
  expect(defining.has_integer_coeffs() && defining.is_monic(), "defining polynomial is not monic integral", out);

  const int n = field.at("degree").get<int>();
  const int r = field.at("signature").at("r").get<int>();
  const int s = field.at("signature").at("s").get<int>();
  expect(n == defining.degree(), "degree does not match the defining polynomial", out);
  expect(r + 2 * s == n, "r + 2s differs from the degree", out);
  expect(certs.at("real_roots").at("count").get<int>() == r, "real root certificate disagrees with r", out);
  expect(sturm_real_root_count(defining) == r, "Sturm count differs from r", out);
  expect(field.at("unit_rank").get<int>() == r + s - 1, "unit rank is not r + s - 1", out);

  const auto irreducibility = irreducibility_from_json(certs.at("irreducibility"));
  expect(irreducibility.irreducible(), "irreducibility certificate records a factorization", out);
  expect(verify_certificate(defining, irreducibility, options), "irreducibility certificate does not check", out);

  const Json& tr = results.at("transitivity");
  expect(tr.is_null() == (n < 3), "transitivity verdicts present exactly for degree >= 3", out);
  if (!tr.is_null()) {
    const auto rebuilt = transitivity_from_json(tr, certs.at("transitivity"), irreducibility, n, r);
    for (const auto& failure : verify_report(defining, rebuilt, options)) out.push_back("transitivity: " + failure);
  }

  if (results.contains("classification")) {
    const Json& c = results.at("classification");
    if (!c.at("aut_rank").is_null() && !c.at("signature").is_null()) {
      const int cr = c.at("signature").at("r").get<int>();
      const int cs = c.at("signature").at("s").get<int>();
      expect(c.at("aut_rank").get<int>() == cr + cs - 1, "aut rank is not the unit rank", out);
    }
  }
}

void check_synthesis(const Json& report, Failures& out) {
  const Polynomial f = poly_from_json(report.at("results").at("polynomial"));
  const Json& cong = report.at("certificates").at("congruences");
  expect(is_eisenstein(f, cong.at("eisenstein_prime").get<std::uint64_t>()), "not Eisenstein at the stated prime", out);
  const auto ell = cong.at("ell").get<Residue>();
  const auto fact = factor_mod_p(f, ell);
  expect(fact.pattern == cong.at("pattern_mod_ell").get<std::vector<int>>(), "factor pattern mod ell differs", out);
  const ModPolynomial u(ell, cong.at("u_ell").get<std::vector<Residue>>());
  bool found = false;
  for (const auto& factor : fact.factors) found = found || factor.factor == u;
  expect(found && is_irreducible_mod_p(u), "u_ell is not an irreducible factor mod ell", out);
  check_field(f, report, out);
}

void check_group_generators(const Json& report, int n, Failures& out) {
  std::vector<Perm> gens;
  for (const auto& g : report.at("certificates").at("generators")) gens.push_back(Perm::from_cycles(g.get<std::string>(), n));
  const auto group = group_closure(gens, n);
  expect(group.order == report.at("certificates").at("closure_order").get<std::uint64_t>(), "closure order differs", out);
  const Json& profile = report.at("results").at("profile");
  expect(profile.at("order").get<std::uint64_t>() == group.order, "profile order differs from closure", out);
  auto sum = [](const Json& sizes) {
    std::size_t total = 0;
    for (const auto& s : sizes) total += s.get<std::size_t>();
    return total;
  };
  const auto un = static_cast<std::size_t>(n);
  expect(sum(profile.at("point_orbit_sizes")) == un, "point orbits do not cover n points", out);
  expect(sum(profile.at("two_subset_orbit_sizes")) == un * (un - 1) / 2, "2-subset orbits do not cover C(n,2)", out);
  expect(sum(profile.at("ordered_pair_orbit_sizes")) == un * (un - 1), "ordered pair orbits do not cover n(n-1)", out);
  for (const char* key : {"point_orbit_sizes", "two_subset_orbit_sizes", "ordered_pair_orbit_sizes"}) {
    for (const auto& s : profile.at(key)) expect(group.order % s.get<std::uint64_t>() == 0, "orbit size does not divide the order", out);
  }
}

void check_h2(const Json& report, Failures& out) {
  const Json& results = report.at("results");
  const Json& certs = report.at("certificates");
  const int g = report.at("inputs").at("g").get<int>();
  const int n = results.at("points").get<int>();
  std::vector<Perm> gens;
  for (const auto& text : certs.at("generators")) gens.push_back(Perm::from_cycles(text.get<std::string>(), n));

  // The claimed orbits must partition the 2-subsets into generator-connected,
  // generator-invariant pieces.
  const int pairs = n * (n - 1) / 2;
  std::vector<int> owner(static_cast<std::size_t>(pairs), -1);
  const Json& orbits = certs.at("two_subset_orbits");
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    for (const auto& pr : orbits[o]) {
      const int idx = pair_index(pr.at(0).get<int>(), pr.at(1).get<int>(), n);
      expect(owner[static_cast<std::size_t>(idx)] == -1, "a 2-subset lies in two orbits", out);
      owner[static_cast<std::size_t>(idx)] = static_cast<int>(o);
    }
  }
  for (int idx = 0; idx < pairs; ++idx) expect(owner[static_cast<std::size_t>(idx)] >= 0, "a 2-subset lies in no orbit", out);
  if (!out.empty()) return;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    std::set<int> seen{pair_index(orbits[o][0].at(0).get<int>(), orbits[o][0].at(1).get<int>(), n)};
    std::vector<int> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      const int idx = frontier.back();
      frontier.pop_back();
      auto [i, j] = pair_from_index(idx, n);
      for (const auto& p : gens) {
        const int a = p(i), b = p(j);
        const int image = pair_index(std::min(a, b), std::max(a, b), n);
        expect(owner[static_cast<std::size_t>(image)] == static_cast<int>(o), "an orbit is not generator-invariant", out);
        if (seen.insert(image).second) frontier.push_back(image);
      }
    }
    expect(seen.size() == orbits[o].size(), "an orbit is not generator-connected", out);
    expect(results.at("orbit_sizes")[o].get<std::size_t>() == orbits[o].size(), "orbit size differs from certificate", out);
  }
  const long factor = report.at("inputs").at("case").get<std::string>() == "degree_g" ? 4 : 1;
  long total = results.at("invariant_dim").get<long>();
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const long summand = results.at("moving_summands")[o].get<long>();
    expect(summand == factor * static_cast<long>(orbits[o].size()), "moving summand is not the scaled orbit size", out);
    total += summand;
  }
  expect(total == results.at("total_dim").get<long>(), "summands do not add up to total_dim", out);
  const long c2g2 = 2L * g * (2 * g - 1) / 2;
  expect(certs.at("identity").at("lhs_value").get<long>() == g + 4L * g * (g - 1) / 2, "identity lhs miscomputed", out);
  expect(certs.at("identity").at("rhs_value").get<long>() == c2g2, "identity rhs miscomputed", out);
  expect(total == c2g2, "H^2 total differs from C(2g,2)", out);
  expect(results.at("two_simple").get<bool>() == (orbits.size() == 1), "2-simple verdict differs from orbit count", out);
}

void check_hodge(const Json& report, Failures& out) {
  const int g = report.at("inputs").at("g").get<int>();
  const int d_e = report.at("results").at("d_E").get<int>();
  const long full = static_cast<long>(g) * (g - 1) / 2;
  auto c2 = [](long k) { return k * (k - 1) / 2; };
  for (const auto& table : report.at("results").at("tables")) {
    for (const auto& row : table.at("rows")) {
      long total = 0, h20 = 0;
      for (const auto& e : row.at("real_entries")) {
        const long v = e.get<long>();
        expect(2 * v == d_e, "real entry is not d_E / 2", out);
        total += v;
        h20 += c2(v);
      }
      for (const auto& pr : row.at("pair_entries")) {
        const long a = pr.at(0).get<long>(), b = pr.at(1).get<long>();
        expect(a + b == d_e, "conjugate pair does not sum to d_E", out);
        total += a + b;
        h20 += c2(a) + c2(b);
      }
      expect(total == g, "entries do not sum to g", out);
      expect(h20 == row.at("h20_dim").get<long>(), "h20_dim is not the sum of C(n_sigma, 2)", out);
      if (row.at("two_simple_compatible").get<bool>()) {
        expect(h20 == 0 || h20 == full, "compatible row with intermediate h20_dim", out);
      }
    }
  }
}

void check_lie(const Json& report, Failures& out) {
  const Json& in = report.at("inputs");
  const Json& res = report.at("results");
  const Json& cert = report.at("certificates");
  const auto action = in.at("action").get<std::string>();
  if (action == "weyl") {
    const auto partition = cert.at("partition").get<std::vector<long>>();
    const auto weight = in.at("weight").get<std::vector<long>>();
    for (std::size_t i = 0; i < weight.size(); ++i) {
      expect(partition[i] - partition[i + 1] == weight[i], "partition does not match the weight", out);
    }
    Rational dim = 1;
    for (std::size_t i = 0; i < partition.size(); ++i)
      for (std::size_t j = i + 1; j < partition.size(); ++j)
        dim *= Rational(partition[i] - partition[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    expect(dim == Rational(integer_from_json(res.at("dim"))), "Weyl product differs from dim", out);
  } else if (action == "wedge2") {
    const int m = in.at("m").get<int>();
    const Integer v = binomial(2 * m, m);
    Integer total = 0;
    for (const auto& s : res.at("summands")) total += integer_from_json(s.at("dim"));
    expect(total == integer_from_json(cert.at("identity").at("rhs_value")), "summand dims do not add up", out);
    expect(v * (v - 1) / 2 == integer_from_json(cert.at("identity").at("lhs_value")), "C(C(2m,m),2) miscomputed", out);
    expect(total == v * (v - 1) / 2, "plethysm dimension identity fails", out);
  } else if (action == "bor-tabs") {
    const long two_g = 2L * in.at("g").get<long>();
    for (const auto& e : cert.at("exterior_powers")) {
      const Integer c = binomial(e.at("r").get<long>() + 1, e.at("j").get<long>());
      expect(c == two_g && c == integer_from_json(e.at("binomial")), "exterior power dimension is not 2g", out);
    }
  } else if (action == "spectrum" || action == "balanced") {
    const int p = in.at("p").get<int>(), q = in.at("q").get<int>(), j = in.at("j").get<int>();
    const Rational a = rational_from_json(res.at("a")), b = rational_from_json(res.at("b"));
    expect(p * a + q * b == 0, "p*a + q*b is not zero", out);
    Integer total = 0;
    for (const auto& e : res.at("spectrum")) {
      const Rational value = rational_from_json(e.at("value"));
      const Integer mult = integer_from_json(e.at("multiplicity"));
      total += mult;
      // value = k a + (j - k) b determines k.
      const Rational k = (value - j * b) / (a - b);
      const bool integral = k.get_den() == 1;
      expect(integral, "spectrum value is not of the form k*a + (j-k)*b", out);
      if (integral) {
        const long kk = k.get_num().get_si();
        expect(mult == binomial(p, kk) * binomial(q, j - kk), "multiplicity is not C(p,k) C(q,j-k)", out);
      }
    }
    expect(total == binomial(p + q, j), "multiplicities do not sum to C(p+q, j)", out);
  } else if (action == "sp-wedge2") {
    const long g = in.at("g").get<long>();
    Integer total = 0;
    for (const auto& d : res.at("dims")) total += integer_from_json(d);
    expect(total == binomial(2 * g, 2), "dims do not sum to C(2g,2)", out);
  }
}

}  // namespace

std::vector<std::string> verify_report_json(const Json& report) {
  Failures out;
  try {
    expect(report.at("schema_version") == kSchemaVersion, "unsupported schema_version", out);
    for (const char* key : {"command", "inputs", "results", "certificates"}) {
      expect(report.contains(key), std::string("missing key ") + key, out);
    }
    if (!out.empty()) return out;
    const auto command = report.at("command").get<std::string>();
    if (command == "analyze") {
      check_field(parse_poly(report.at("inputs").at("expression").get<std::string>()), report, out);
    } else if (command == "synthesize") {
      check_synthesis(report, out);
    } else if (command == "h2") {
      check_h2(report, out);
    } else if (command == "hodge") {
      check_hodge(report, out);
    } else if (command == "permgrp") {
      check_group_generators(report, report.at("results").at("n").get<int>(), out);
    } else if (command == "lie") {
      check_lie(report, out);
    }
  } catch (const Error& e) {
    out.push_back(std::string("certificate check raised ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    out.push_back(std::string("malformed report: ") + e.what());
  }
  if (!out.empty()) return out;

  try {
    if (rerun(report).to_json() != report) out.push_back("results differ from recomputation");
  } catch (const Error& e) {
    out.push_back(std::string("recomputation raised ") + e.what());
  }
  return out;
}

Report verification_report(const Json& report, const std::string& source) {
  Report r;
  r.command = "verify";
  r.inputs["report"] = source;
  r.inputs["report_command"] = report.contains("command") ? report.at("command") : Json(nullptr);
  const auto failures = verify_report_json(report);
  r.results["accepted"] = failures.empty();
  r.results["failures"] = failures;
  r.certificates["method"] = "certificates re-checked with exact primitives, then recomputed from inputs";
  return r;
}

}  // namespace ttl::cli
