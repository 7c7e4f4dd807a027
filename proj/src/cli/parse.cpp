#include "ttl/cli/parse.hpp"

#include <cctype>
#include <map>

#include "ttl/error.hpp"

namespace ttl::cli {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial run() {
    std::map<long, Rational> terms;
    skip_space();
    if (at_end()) fail_at("a term");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail_at("'+' or '-'");
      }
      auto [coeff, exponent] = term();
      terms[exponent] += sign * coeff;
      first = false;
      skip_space();
    }
    long top = terms.rbegin()->first;
    std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
    for (auto& [k, c] : terms) coeffs[static_cast<std::size_t>(k)] = c;
    return Polynomial(std::move(coeffs));
  }

 private:
  std::pair<Rational, long> term() {
    if (at_end()) fail_at("a term");
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      has_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || peek() != 'x') fail_at("'x' after '*'");
      }
    }
    if (at_end() || peek() != 'x') {
      if (has_coeff) return {coeff, 0};
      fail_at(std::isalpha(static_cast<unsigned char>(peek())) ? "the variable 'x'" : "a coefficient or 'x'");
    }
    ++pos_;
    skip_space();
    long exponent = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail_at("an exponent");
      exponent = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = exponent * 10 + (peek() - '0');
        if (exponent > kMaxExponent) fail_at("an exponent at most " + std::to_string(kMaxExponent));
        ++pos_;
      }
    }
    return {coeff, exponent};
  }

  Rational number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == den_start) fail_at("a denominator");
      std::string den(text_.substr(den_start, pos_ - den_start));
      if (Integer(den) == 0) {
        pos_ = den_start;
        fail_at("a nonzero denominator");
      }
      digits += "/" + den;
    }
    return parse_rational(digits);
  }

  [[noreturn]] void fail_at(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    throw Error(ErrorKind::ParseError,
                "at position " + std::to_string(pos_) + ": expected " + expected + ", found " + found);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text) { return Parser(text).run(); }

std::string print_poly(const Polynomial& f) {
  if (f.degree() < 0) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (k == 0) {
      out += to_string(c);
      continue;
    }
    if (c != 1) out += to_string(c) + "*";
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ttl::cli
