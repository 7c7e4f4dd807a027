#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttl/cli/report.hpp"
#include "ttl/error.hpp"

namespace ttl::cli {

struct CommonOptions {
  int max_degree = 8;
  int prime_budget = 25;

  GaloisOptions galois() const;
};

Report cmd_analyze(std::string_view expression, std::optional<int> g, const CommonOptions& options);
Report cmd_synthesize(int n, int r, int s, const CommonOptions& options);
Report cmd_synthesize_torus(int g, int d, const CommonOptions& options);
/// Both r and s, or neither (then every signature of the degree is listed).
Report cmd_hodge(int g, int degree, std::optional<int> r, std::optional<int> s);
/// Generators in cycle notation; a string may hold several separated by ','.
Report cmd_h2(int g, std::string_view h2_case, const std::vector<std::string>& generators);
Report cmd_permgrp(int n, const std::vector<std::string>& generators);
Report cmd_permgrp_affine(int q);

struct LieRequest {
  std::string action;  // minuscule, weyl, wedge2, wedge2-scan, bor-tabs, spectrum, balanced, sp-wedge2
  std::string type = "A";
  int rank = 0;
  std::vector<int> weight;
  int m = 0;
  int m_max = 0;
  int g = 0;
  int p = 0;
  int q = 0;
  int j = 0;
  std::string a;
  std::string b;
  bool relax_power_guard = false;
};
Report cmd_lie(const LieRequest& request);

/// Rebuilds the report a command would emit for the inputs echoed in a
/// report. Throws ParseError for an unknown command or malformed inputs.
Report rerun(const Json& report);

/// 0 success, 2 usage/parse, 3 guard/bounds, 4 certification failure.
int exit_code(ErrorKind kind);

/// Entry point behind the ttl executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttl::cli
