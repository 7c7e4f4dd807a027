#pragma once

#include <string>
#include <string_view>

#include "ttl/polynomial.hpp"

namespace ttl::cli {

/// Sums of signed terms c, x, x^k, c*x^k (or c x^k) with integer or p/q
/// coefficients. Throws ParseError with the 0-based offending position.
Polynomial parse_poly(std::string_view text);

/// Descending terms, "x^3 - 3*x - 1"; "0" for the zero polynomial.
/// parse_poly(print_poly(f)) == f.
std::string print_poly(const Polynomial& f);

}  // namespace ttl::cli
