#include "ttl/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ttl/cli/parse.hpp"
#include "ttl/cli/verify.hpp"

namespace ttl::cli {

GaloisOptions CommonOptions::galois() const {
  GaloisOptions g;
  g.max_degree = max_degree;
  g.prime_budget = prime_budget;
  return g;
}

namespace {

Json common_inputs(const CommonOptions& options) {
  return Json{{"max_degree", options.max_degree}, {"prime_budget", options.prime_budget}};
}

void add_field(const FieldAnalysis& a, Report& report) {
  Json field;
  field["defining_polynomial"] = poly_json(a.defining);
  field["expression"] = print_poly(a.defining);
  field["scale"] = integer_json(a.scale);
  field["degree"] = a.n;
  field["signature"] = Json{{"r", a.r}, {"s", a.s}};
  field["unit_rank"] = unit_rank(a.r, a.s);
  field["irreducible"] = a.irreducibility.irreducible();
  report.results["field"] = field;
  report.results["transitivity"] = a.transitivity ? transitivity_results(*a.transitivity) : Json(nullptr);

  report.certificates["irreducibility"] = to_json(a.irreducibility);
  report.certificates["real_roots"] = Json{{"method", "sturm"}, {"count", a.r}};
  report.certificates["transitivity"] = a.transitivity ? transitivity_certificates(*a.transitivity) : Json(nullptr);
  report.certificates["formulas"] = Json{{"defining_polynomial", "D^n f(x/D)"},
                                         {"s", "(degree - r) / 2"},
                                         {"unit_rank", "r + s - 1"}};
}

void add_classification(const TorusClassification& c, Report& report) {
  report.results["classification"] = to_json(c);
  report.certificates["formulas"]["aut_rank"] = "unit rank of the endomorphism field";
  report.certificates["formulas"]["hodge_group_dim"] = "3g for Res_{E/Q} SL_2, 2g - 1 for S_E^1";
}

std::vector<Perm> parse_generators(const std::vector<std::string>& texts, int n) {
  std::vector<Perm> out;
  for (const auto& text : texts) {
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      const auto first = piece.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      out.push_back(Perm::from_cycles(piece.substr(first), n));
    }
  }
  return out;
}

Json cycles_json(const std::vector<Perm>& perms) {
  Json out = Json::array();
  for (const auto& p : perms) out.push_back(p.cycles());
  return out;
}

Json orbit_pairs_json(const std::vector<Orbit>& orbits, int n) {
  Json out = Json::array();
  for (const auto& orbit : orbits) {
    Json pairs = Json::array();
    for (int idx : orbit.members) {
      auto [i, j] = pair_from_index(idx, n);
      pairs.push_back(Json::array({i, j}));
    }
    out.push_back(pairs);
  }
  return out;
}

void add_group(const PermGroup& group, Report& report) {
  const auto profile = transitivity_profile(group);
  report.results["n"] = group.n;
  report.results["profile"] = to_json(profile);
  const bool even = profile.order % 2 == 0;
  const bool premise = profile.two_set_transitive && even;
  report.results["parity"] = Json{{"even_order", even},
                                  {"almost_doubly_and_even", premise},
                                  {"implication_holds", !premise || profile.two_transitive}};
  report.certificates["generators"] = cycles_json(group.generators);
  report.certificates["closure_order"] = group.order;
  report.certificates["formulas"] = Json{{"order", "breadth-first closure of the generators"},
                                         {"orbits", "connected components of the generator action"}};
}

Rational parse_rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorKind::ParseError, std::string("--") + name + " expects a rational, got '" + text + "'");
  }
}

}  // namespace

Report cmd_analyze(std::string_view expression, std::optional<int> g, const CommonOptions& options) {
  Report report;
  report.command = "analyze";
  report.inputs["expression"] = std::string(expression);
  report.inputs["g"] = g ? Json(*g) : Json(nullptr);
  report.inputs.update(common_inputs(options));

  if (g && *g < 2) throw Error(ErrorKind::BadDimension, "g must be at least 2, got " + std::to_string(*g));
  const Polynomial f = parse_poly(expression);
  report.inputs["coefficients"] = poly_json(f);
  const auto analysis = analyze_field(f, options.galois());
  add_field(analysis, report);
  if (g && *g == 2) {
    report.results["note"] = "every 2-dimensional complex torus is 2-simple";
  } else if (g) {
    add_classification(classify_torus(*g, analysis), report);
  }
  return report;
}

namespace {

Report synthesis_report(const SynthesisResult& s, Report report) {
  report.results["polynomial"] = poly_json(s.f);
  report.results["expression"] = print_poly(s.f);
  add_field(s.analysis, report);
  Json u = Json::array();
  for (auto c : s.u_ell.coeffs()) u.push_back(c);
  report.results["construction"] = Json{{"scale_K", integer_json(s.scale_K)}, {"attempts", s.attempts}};
  report.certificates["congruences"] =
      Json{{"eisenstein_prime", s.p}, {"ell", s.ell}, {"u_ell", u}, {"pattern_mod_ell", Json::array({1, s.f.degree() - 1})}};
  return report;
}

}  // namespace

Report cmd_synthesize(int n, int r, int s, const CommonOptions& options) {
  Report report;
  report.command = "synthesize";
  report.inputs = Json{{"n", n}, {"r", r}, {"s", s}};
  report.inputs.update(common_inputs(options));
  SynthesisOptions so;
  so.galois = options.galois();
  return synthesis_report(synthesize_field(n, r, s, so), std::move(report));
}

Report cmd_synthesize_torus(int g, int d, const CommonOptions& options) {
  Report report;
  report.command = "synthesize";
  report.inputs = Json{{"g", g}, {"d", d}};
  report.inputs.update(common_inputs(options));
  SynthesisOptions so;
  so.galois = options.galois();
  auto profile = synthesize_torus_profile(g, d, so);
  report = synthesis_report(profile.synthesis, std::move(report));
  add_classification(profile.classification, report);
  return report;
}

Report cmd_hodge(int g, int degree, std::optional<int> r, std::optional<int> s) {
  Report report;
  report.command = "hodge";
  report.inputs = Json{{"g", g}, {"degree", degree}, {"r", r ? Json(*r) : Json(nullptr)}, {"s", s ? Json(*s) : Json(nullptr)}};
  if (r.has_value() != s.has_value()) throw Error(ErrorKind::BadParameter, "give both --r and --s, or neither");
  if (g < 2) throw Error(ErrorKind::BadDimension, "g must be at least 2, got " + std::to_string(g));
  if (degree < 1 || (2 * g) % degree != 0) {
    throw Error(ErrorKind::InconsistentSignature,
                "degree " + std::to_string(degree) + " does not divide 2g = " + std::to_string(2 * g));
  }

  const bool allowed = degree == 1 || degree == g || degree == 2 * g;
  Json trichotomy;
  trichotomy["allowed_degrees"] = Json::array({1, g, 2 * g});
  trichotomy["compatible"] = allowed || g <= 2;
  trichotomy["note"] = allowed || g <= 2 ? "degree of End^0 is 1, g or 2g"
                                         : "incompatible: a 2-simple torus of dimension g >= 3 has End^0 of degree 1, g or 2g";
  report.results["d_E"] = 2 * g / degree;
  report.results["trichotomy"] = trichotomy;

  std::vector<std::pair<int, int>> signatures;
  if (r) {
    signatures.emplace_back(*r, *s);
  } else {
    for (int ss = 0; 2 * ss <= degree; ++ss) signatures.emplace_back(degree - 2 * ss, ss);
  }
  Json tables = Json::array();
  for (auto [rr, ss] : signatures) {
    const auto e = enumerate_multiplicity_vectors(g, degree, rr, ss);
    Json rows = Json::array();
    for (const auto& v : e.vectors) rows.push_back(to_json(v));
    tables.push_back(Json{{"r", rr},
                          {"s", ss},
                          {"rows", rows},
                          {"no_vector_reason", e.no_vector_reason ? Json(*e.no_vector_reason) : Json(nullptr)}});
  }
  report.results["tables"] = tables;
  report.certificates["formulas"] = Json{{"d_E", "2g / degree"},
                                         {"h20_dim", "sum over embeddings of C(n_sigma, 2)"},
                                         {"two_simple_compatible", "h20_dim in {0, g(g-1)/2} and not excluded_not_simple"}};
  return report;
}

Report cmd_h2(int g, std::string_view h2_case, const std::vector<std::string>& generators) {
  Report report;
  report.command = "h2";
  report.inputs = Json{{"g", g}, {"case", std::string(h2_case)}, {"group", generators}};
  H2Case c;
  if (h2_case == "degree_g") {
    c = H2Case::DegreeG;
  } else if (h2_case == "degree_2g") {
    c = H2Case::Degree2G;
  } else {
    throw Error(ErrorKind::ParseError, "--case expects degree_g or degree_2g, got '" + std::string(h2_case) + "'");
  }
  if (g < 2) throw Error(ErrorKind::BadDimension, "g must be at least 2, got " + std::to_string(g));
  const int points = c == H2Case::DegreeG ? g : 2 * g;
  const auto group = group_closure(parse_generators(generators, points), points);
  const auto d = h2_decomposition(g, c, group);
  std::string summary = "[" + std::to_string(d.invariant_dim) + " |";
  for (long m : d.moving_summands) summary += " " + std::to_string(m);
  summary += "]";

  report.results["points"] = points;
  report.results["group_order"] = group.order;
  report.results["invariant_dim"] = d.invariant_dim;
  report.results["orbit_sizes"] = d.orbit_sizes;
  report.results["moving_summands"] = d.moving_summands;
  report.results["total_dim"] = d.total_dim;
  report.results["summary"] = summary;
  report.results["two_simple"] = d.simple_verdict;
  report.certificates["generators"] = cycles_json(group.generators);
  report.certificates["two_subset_orbits"] = orbit_pairs_json(orbits_on_2subsets(group), points);
  report.certificates["identity"] = Json{{"lhs", "g + 4*C(g,2)"},
                                         {"lhs_value", g + 4L * g * (g - 1) / 2},
                                         {"rhs", "C(2g,2)"},
                                         {"rhs_value", 2L * g * (2 * g - 1) / 2}};
  report.certificates["formulas"] = Json{{"moving_summands", c == H2Case::DegreeG ? "4 * orbit size" : "orbit size"},
                                         {"two_simple", "single orbit on 2-subsets"}};
  return report;
}

Report cmd_permgrp(int n, const std::vector<std::string>& generators) {
  Report report;
  report.command = "permgrp";
  report.inputs = Json{{"n", n}, {"generators", generators}};
  if (n < 1) throw Error(ErrorKind::BadParameter, "n must be positive");
  add_group(group_closure(parse_generators(generators, n), n), report);
  return report;
}

Report cmd_permgrp_affine(int q) {
  Report report;
  report.command = "permgrp";
  report.inputs = Json{{"affine_half", q}};
  add_group(affine_half_group(q), report);
  report.results["ordered_pairs"] = static_cast<long>(q) * (q - 1);
  return report;
}

Report cmd_lie(const LieRequest& rq) {
  Report report;
  report.command = "lie";
  report.inputs["action"] = rq.action;
  Json& res = report.results;
  Json& cert = report.certificates;
  const auto& act = rq.action;

  if (act == "minuscule") {
    report.inputs["type"] = rq.type;
    report.inputs["rank"] = rq.rank;
    if (rq.type.size() != 1) throw Error(ErrorKind::BadParameter, "type must be one of A, B, C, D");
    Json entries = Json::array();
    for (const auto& e : minuscule_dims(rq.type[0], rq.rank)) {
      entries.push_back(Json{{"weight", e.weight}, {"dim", integer_json(e.dim)}});
    }
    res["representations"] = entries;
    cert["formulas"] = Json{{"A", "C(l+1, j)"}, {"B", "2^l"}, {"C", "2l"}, {"D", "2l and 2^(l-1)"}};
  } else if (act == "weyl") {
    WeightA w{rq.rank > 0 ? rq.rank : static_cast<int>(rq.weight.size()), rq.weight};
    report.inputs["rank"] = w.rank;
    report.inputs["weight"] = rq.weight;
    const Integer dim = weyl_dim_A(w);
    std::vector<long> partition(static_cast<std::size_t>(w.rank) + 1, 0);
    for (int i = w.rank - 1; i >= 0; --i)
      partition[static_cast<std::size_t>(i)] = partition[static_cast<std::size_t>(i) + 1] + w.coeffs[static_cast<std::size_t>(i)];
    res["weight"] = w.to_string();
    res["dim"] = integer_json(dim);
    cert["partition"] = partition;
    cert["formulas"] = Json{{"dim", "prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)"}};
  } else if (act == "wedge2") {
    report.inputs["m"] = rq.m;
    const auto d = wedge2_omega_m_decomposition(rq.m);
    Json summands = Json::array();
    for (std::size_t i = 0; i < d.weights.size(); ++i) {
      summands.push_back(Json{{"weight", d.weights[i].to_string()}, {"coefficients", d.weights[i].coeffs}, {"dim", integer_json(d.dims[i])}});
    }
    res["rank"] = d.rank;
    res["summands"] = summands;
    res["total"] = integer_json(d.total);
    res["has_trivial"] = d.has_trivial;
    res["nontrivial_summands"] = d.nontrivial_summands;
    res["verdict"] = to_string(d.verdict);
    cert["identity"] = Json{{"lhs", "C(C(2m,m),2)"}, {"lhs_value", integer_json(d.expected_total)}, {"rhs", "sum of summand dims"},
                            {"rhs_value", integer_json(d.total)}, {"holds", d.identity_holds}};
    cert["formulas"] = Json{{"summands", "V(w_{m+i} + w_{m-i}) over odd i <= m, w_0 = w_2m = 0"}, {"dim", "Weyl dimension"}};
  } else if (act == "wedge2-scan") {
    report.inputs["m_max"] = rq.m_max;
    const auto scan = sl_wedge2_verdict_scan(rq.m_max);
    Json rows = Json::array();
    for (const auto& row : scan.rows) {
      Json summands = Json::array();
      for (std::size_t i = 0; i < row.decomposition.weights.size(); ++i)
        summands.push_back(Json{{"weight", row.decomposition.weights[i].to_string()}, {"dim", integer_json(row.decomposition.dims[i])}});
      rows.push_back(Json{{"m", row.m},
                          {"two_g", integer_json(row.two_g)},
                          {"g", integer_json(row.g)},
                          {"summands", summands},
                          {"verdict", to_string(row.decomposition.verdict)},
                          {"identity_holds", row.decomposition.identity_holds},
                          {"two_simple_compatible", row.two_simple_compatible}});
    }
    Json compatible = Json::array();
    for (const auto& g : scan.compatible_g) compatible.push_back(integer_json(g));
    res["rows"] = rows;
    res["compatible_g"] = compatible;
    cert["formulas"] = Json{{"two_g", "C(2m, m)"}, {"two_simple_compatible", "m >= 3 and simple plus trivial"}};
  } else if (act == "bor-tabs") {
    report.inputs["g"] = rq.g;
    report.inputs["relax_power_guard"] = rq.relax_power_guard;
    const auto candidates = bor_tabs_enumerate(rq.g, rq.relax_power_guard);
    Json list = Json::array();
    Json dims = Json::array();
    for (const auto& c : candidates) {
      list.push_back(Json{{"type", std::string(1, c.type)}, {"rank", c.rank}, {"j", c.j}, {"label", c.label()}});
      if (c.j > 1) dims.push_back(Json{{"r", c.rank}, {"j", c.j}, {"binomial", integer_json(binomial(c.rank + 1, c.j))}});
    }
    res["two_g"] = 2 * rq.g;
    res["perfect_power"] = is_perfect_power(2L * rq.g);
    res["candidates"] = list;
    cert["exterior_powers"] = dims;
    cert["formulas"] = Json{{"exterior_powers", "C(r+1, j) = 2g"}};
  } else if (act == "spectrum" || act == "balanced") {
    report.inputs["p"] = rq.p;
    report.inputs["q"] = rq.q;
    report.inputs["j"] = rq.j;
    SpectrumAnalysis s;
    if (act == "spectrum") {
      report.inputs["a"] = rq.a;
      report.inputs["b"] = rq.b;
      s = subset_sum_spectrum(rq.p, rq.q, rq.j, parse_rational_arg(rq.a, "a"), parse_rational_arg(rq.b, "b"));
    } else {
      const auto v = two_value_balanced_check(rq.p, rq.q, rq.j);
      s = subset_sum_spectrum(rq.p, rq.q, rq.j, rq.q, -rq.p);
      res["l"] = v.l;
      res["balanced"] = v.balanced;
      res["forced_relation"] = v.forced_relation ? Json(*v.forced_relation) : Json(nullptr);
      res["relation_holds"] = v.relation_holds;
    }
    Json spectrum = Json::array();
    for (const auto& [value, mult] : s.spectrum) spectrum.push_back(Json{{"value", rational_json(value)}, {"multiplicity", integer_json(mult)}});
    res["a"] = rational_json(s.a);
    res["b"] = rational_json(s.b);
    res["spectrum"] = spectrum;
    res["total"] = integer_json(s.total);
    cert["formulas"] = Json{{"value", "k*a + (j-k)*b"}, {"multiplicity", "C(p,k) * C(q,j-k)"}, {"total", "C(p+q, j)"}};
  } else if (act == "sp-wedge2") {
    report.inputs["g"] = rq.g;
    auto [a, b] = sp_wedge2_dims(rq.g);
    res["dims"] = Json::array({integer_json(a), integer_json(b)});
    res["total"] = integer_json(a + b);
    cert["formulas"] = Json{{"dims", "C(2g,2) - 1 and 1"}};
  } else {
    throw Error(ErrorKind::ParseError, "unknown lie action '" + act + "'");
  }
  return report;
}

Report rerun(const Json& report) {
  try {
    const auto command = report.at("command").get<std::string>();
    const Json& in = report.at("inputs");
    auto common = [&] {
      CommonOptions o;
      o.max_degree = in.at("max_degree").get<int>();
      o.prime_budget = in.at("prime_budget").get<int>();
      return o;
    };
    auto opt_int = [&](const char* key) -> std::optional<int> {
      if (!in.contains(key) || in.at(key).is_null()) return std::nullopt;
      return in.at(key).get<int>();
    };
    if (command == "analyze") return cmd_analyze(in.at("expression").get<std::string>(), opt_int("g"), common());
    if (command == "synthesize") {
      if (in.contains("n"))
        return cmd_synthesize(in.at("n").get<int>(), in.at("r").get<int>(), in.at("s").get<int>(), common());
      return cmd_synthesize_torus(in.at("g").get<int>(), in.at("d").get<int>(), common());
    }
    if (command == "hodge") return cmd_hodge(in.at("g").get<int>(), in.at("degree").get<int>(), opt_int("r"), opt_int("s"));
    if (command == "h2") {
      return cmd_h2(in.at("g").get<int>(), in.at("case").get<std::string>(), in.at("group").get<std::vector<std::string>>());
    }
    if (command == "permgrp") {
      if (in.contains("affine_half")) return cmd_permgrp_affine(in.at("affine_half").get<int>());
      return cmd_permgrp(in.at("n").get<int>(), in.at("generators").get<std::vector<std::string>>());
    }
    if (command == "lie") {
      LieRequest rq;
      rq.action = in.at("action").get<std::string>();
      rq.type = in.value("type", std::string("A"));
      rq.rank = in.value("rank", 0);
      rq.weight = in.value("weight", std::vector<int>{});
      rq.m = in.value("m", 0);
      rq.m_max = in.value("m_max", 0);
      rq.g = in.value("g", 0);
      rq.p = in.value("p", 0);
      rq.q = in.value("q", 0);
      rq.j = in.value("j", 0);
      rq.a = in.value("a", std::string());
      rq.b = in.value("b", std::string());
      rq.relax_power_guard = in.value("relax_power_guard", false);
      return cmd_lie(rq);
    }
    throw Error(ErrorKind::ParseError, "unknown command '" + command + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report inputs: ") + e.what());
  }
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PowerGuard:
    case ErrorKind::DegreeBoundExceeded:
    case ErrorKind::OrderBoundExceeded:
      return 3;
    case ErrorKind::ReduciblePolynomial:
    case ErrorKind::NotSquarefree:
    case ErrorKind::SynthesisExhausted:
    case ErrorKind::VerificationFailed:
    case ErrorKind::CollisionDetected:
    case ErrorKind::ResolventCollisionUnresolved:
    case ErrorKind::DegenerateTransform:
    case ErrorKind::NotClosed:
    case ErrorKind::LeadingCoefficientVanishesModP:
      return 4;
    default:
      return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for 2-simple complex tori"};
  app.name("ttl");
  app.require_subcommand(1);
  app.fallthrough();

  bool text = false;
  bool json = false;
  bool self_verify = false;
  CommonOptions common;
  auto* text_flag = app.add_flag("--text", text, "Indented text output");
  app.add_flag("--json", json, "JSON output (default)")->excludes(text_flag);
  app.add_option("--max-degree", common.max_degree, "Largest field degree analysed")->check(CLI::Range(1, 64));
  app.add_flag("--verify", self_verify, "Re-check the report before printing it");

  std::function<Report()> action;
  int verify_exit = 0;

  std::string expression;
  std::optional<int> analyze_g;
  auto* analyze = app.add_subcommand("analyze", "Certify a field's degree, signature and Galois action");
  analyze->add_option("polynomial", expression, "e.g. \"x^3 - 2\"")->required();
  analyze->add_option("--g", analyze_g, "Torus dimension for the classification");
  analyze->callback([&] { action = [&] { return cmd_analyze(expression, analyze_g, common); }; });

  std::optional<int> syn_n, syn_r, syn_s, syn_g, syn_d;
  auto* synthesize = app.add_subcommand("synthesize", "Build a doubly transitive field of given signature");
  synthesize->add_option("--n", syn_n);
  synthesize->add_option("--r", syn_r);
  synthesize->add_option("--s", syn_s);
  synthesize->add_option("--g", syn_g);
  synthesize->add_option("--d", syn_d);
  synthesize->callback([&] {
    const bool nrs = syn_n && syn_r && syn_s && !syn_g && !syn_d;
    const bool gd = syn_g && syn_d && !syn_n && !syn_r && !syn_s;
    if (!nrs && !gd) throw CLI::ValidationError("synthesize", "give --n --r --s or --g --d");
    if (nrs) {
      action = [&] { return cmd_synthesize(*syn_n, *syn_r, *syn_s, common); };
    } else {
      action = [&] { return cmd_synthesize_torus(*syn_g, *syn_d, common); };
    }
  });

  int hodge_g = 0, hodge_degree = 0;
  std::optional<int> hodge_r, hodge_s;
  auto* hodge = app.add_subcommand("hodge", "Multiplicity vectors and h20 dimensions");
  hodge->add_option("--g", hodge_g)->required();
  hodge->add_option("--degree", hodge_degree)->required();
  hodge->add_option("--r", hodge_r);
  hodge->add_option("--s", hodge_s);
  hodge->callback([&] { action = [&] { return cmd_hodge(hodge_g, hodge_degree, hodge_r, hodge_s); }; });

  int h2_g = 0;
  std::string h2_case;
  std::vector<std::string> h2_group;
  auto* h2 = app.add_subcommand("h2", "Decompose H^2 under a Galois action");
  h2->add_option("--g", h2_g)->required();
  h2->add_option("--case", h2_case)->required()->check(CLI::IsMember({"degree_g", "degree_2g"}));
  h2->add_option("--group", h2_group, "Generators in cycle notation, ',' separated")->required();
  h2->callback([&] { action = [&] { return cmd_h2(h2_g, h2_case, h2_group); }; });

  int perm_n = 0;
  std::optional<int> affine_q;
  std::vector<std::string> perm_gens;
  auto* permgrp = app.add_subcommand("permgrp", "Orbit profile of a permutation group");
  auto* n_opt = permgrp->add_option("--n", perm_n);
  auto* gen_opt = permgrp->add_option("--gen,--group", perm_gens, "Generators in cycle notation")->needs(n_opt);
  permgrp->add_option("--affine-half", affine_q, "x -> a x + b on F_q, a a nonzero square")->excludes(n_opt)->excludes(gen_opt);
  permgrp->callback([&] {
    if (affine_q) {
      action = [&] { return cmd_permgrp_affine(*affine_q); };
    } else {
      if (perm_n == 0) throw CLI::ValidationError("permgrp", "give --n with --gen, or --affine-half");
      action = [&] { return cmd_permgrp(perm_n, perm_gens); };
    }
  });

  LieRequest lie_rq;
  auto* lie = app.add_subcommand("lie", "Representation-theoretic checks");
  lie->require_subcommand(1);
  auto lie_sub = [&](const char* name, const char* help) {
    auto* sub = lie->add_subcommand(name, help);
    sub->callback([&, name] {
      lie_rq.action = name;
      action = [&] { return cmd_lie(lie_rq); };
    });
    return sub;
  };
  auto* minuscule = lie_sub("minuscule", "Minuscule representation dimensions");
  minuscule->add_option("--type", lie_rq.type)->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
  minuscule->add_option("--rank", lie_rq.rank)->required();
  auto* weyl = lie_sub("weyl", "Weyl dimension on A_l");
  weyl->add_option("--rank", lie_rq.rank);
  weyl->add_option("--weight", lie_rq.weight, "Coefficients of w_1..w_l")->required()->delimiter(',');
  lie_sub("wedge2", "Wedge square of V(w_m) on A_{2m-1}")->add_option("--m", lie_rq.m)->required();
  lie_sub("wedge2-scan", "Verdicts for 2 <= m <= m_max")->add_option("--m-max", lie_rq.m_max)->required();
  auto* bor = lie_sub("bor-tabs", "Candidate Hodge groups for dimension g");
  bor->add_option("--g", lie_rq.g)->required();
  bor->add_flag("--relax-power-guard", lie_rq.relax_power_guard);
  auto* spectrum = lie_sub("spectrum", "Eigenvalues of z on the j-th exterior power");
  auto* balanced = lie_sub("balanced", "Two equal-multiplicity eigenvalues test");
  for (auto* sub : {spectrum, balanced}) {
    sub->add_option("--p", lie_rq.p)->required();
    sub->add_option("--q", lie_rq.q)->required();
    sub->add_option("--j", lie_rq.j)->required();
  }
  spectrum->add_option("--a", lie_rq.a)->required();
  spectrum->add_option("--b", lie_rq.b)->required();
  lie_sub("sp-wedge2", "Wedge square of the standard C_g module")->add_option("--g", lie_rq.g)->required();

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a saved report");
  verify->add_option("report", verify_path, "Report file, or - for stdin")->required();
  verify->callback([&] {
    action = [&] {
      std::stringstream buffer;
      if (verify_path == "-") {
        buffer << std::cin.rdbuf();
      } else {
        std::ifstream file(verify_path);
        if (!file) throw Error(ErrorKind::ParseError, "cannot read '" + verify_path + "'");
        buffer << file.rdbuf();
      }
      Json parsed;
      try {
        parsed = Json::parse(buffer.str());
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("report is not JSON: ") + e.what());
      }
      Report r = verification_report(parsed, verify_path);
      if (!r.results.at("accepted").get<bool>()) verify_exit = exit_code(ErrorKind::VerificationFailed);
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    common.prime_budget = prime_budget_from_env();
    const Report report = action();
    const Json payload = report.to_json();
    if (self_verify && report.command != "verify") {
      const auto failures = verify_report_json(payload);
      if (!failures.empty()) {
        for (const auto& f : failures) err << "ttl: verification failed: " << f << "\n";
        return exit_code(ErrorKind::VerificationFailed);
      }
    }
    out << (text ? render_text(payload) : render_json(payload));
    return verify_exit;
  } catch (const Error& e) {
    err << "ttl: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace ttl::cli
