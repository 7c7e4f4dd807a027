#include "ttl/lie.hpp"

#include <algorithm>

#include "ttl/error.hpp"

namespace ttl {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool is_perfect_power(long n) {
  if (n < 4) return false;
  return mpz_perfect_power_p(Integer(n).get_mpz_t()) != 0;
}

std::vector<MinusculeEntry> minuscule_dims(char type, int rank) {
  auto bad_rank = [&](int minimum) {
    throw Error(ErrorKind::BadRank, std::string("type ") + type + " needs rank >= " + std::to_string(minimum) +
                                        ", got " + std::to_string(rank));
  };
  std::vector<MinusculeEntry> out;
  Integer two_pow;
  switch (type) {
    case 'A':
      if (rank < 1) bad_rank(1);
      for (int j = 1; j <= rank; ++j) out.push_back({"ω" + std::to_string(j), binomial(rank + 1, j)});
      return out;
    case 'B':
      if (rank < 1) bad_rank(1);
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank));
      out.push_back({"spin ω" + std::to_string(rank), two_pow});
      return out;
    case 'C':
      if (rank < 1) bad_rank(1);
      out.push_back({"ω1", Integer(2 * rank)});
      return out;
    case 'D':
      if (rank < 3) bad_rank(3);
      mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(rank - 1));
      out.push_back({"vector ω1", Integer(2 * rank)});
      out.push_back({"half-spin ω" + std::to_string(rank - 1), two_pow});
      out.push_back({"half-spin ω" + std::to_string(rank), two_pow});
      return out;
    default:
      throw Error(ErrorKind::BadParameter, std::string("unknown type '") + type + "', expected A, B, C or D");
  }
}

bool WeightA::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

std::string WeightA::to_string() const {
  std::string out;
  for (int i = rank; i >= 1; --i) {
    const int c = coeffs[static_cast<std::size_t>(i - 1)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += "ω" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

WeightA WeightA::fundamental(int rank, int i) {
  WeightA w{rank, std::vector<int>(static_cast<std::size_t>(rank), 0)};
  if (i >= 1 && i <= rank) w.coeffs[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

WeightA operator+(const WeightA& a, const WeightA& b) {
  if (a.rank != b.rank) throw Error(ErrorKind::BadRank, "adding weights of different rank");
  WeightA out = a;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

Integer weyl_dim_A(const WeightA& w) {
  if (w.rank < 1 || static_cast<int>(w.coeffs.size()) != w.rank) {
    throw Error(ErrorKind::BadRank, "weight needs exactly rank = " + std::to_string(w.rank) + " >= 1 coefficients");
  }
  for (int c : w.coeffs) {
    if (c < 0) throw Error(ErrorKind::BadParameter, "weight " + w.to_string() + " is not dominant");
  }
  const int n = w.rank + 1;
  std::vector<long> lambda(static_cast<std::size_t>(n), 0);
  for (int i = w.rank - 1; i >= 0; --i) {
    lambda[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i + 1)] + w.coeffs[static_cast<std::size_t>(i)];
  }
  Integer num = 1;
  Integer den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + (j - i);
      den *= j - i;
    }
  }
  return num / den;
}

std::string_view to_string(Wedge2Verdict v) {
  switch (v) {
    case Wedge2Verdict::Simple: return "simple";
    case Wedge2Verdict::SimplePlusTrivial: return "simple plus trivial";
    case Wedge2Verdict::Other: return "other";
  }
  return "?";
}

Wedge2Decomposition wedge2_omega_m_decomposition(int m) {
  if (m < 2) throw Error(ErrorKind::BadParameter, "m must be at least 2, got " + std::to_string(m));
  Wedge2Decomposition out;
  out.m = m;
  out.rank = 2 * m - 1;
  out.expected_total = binomial(binomial(2 * m, m).get_si(), 2);
  out.total = 0;
  for (int i = 1; i <= m; i += 2) {
    WeightA w = WeightA::fundamental(out.rank, m + i) + WeightA::fundamental(out.rank, m - i);
    Integer dim = weyl_dim_A(w);
    if (w.is_zero()) {
      out.has_trivial = true;
    } else {
      ++out.nontrivial_summands;
    }
    out.total += dim;
    out.weights.push_back(std::move(w));
    out.dims.push_back(std::move(dim));
  }
  out.identity_holds = out.total == out.expected_total;
  if (out.nontrivial_summands == 1) {
    out.verdict = out.has_trivial ? Wedge2Verdict::SimplePlusTrivial : Wedge2Verdict::Simple;
  }
  return out;
}

SpectrumAnalysis subset_sum_spectrum(int p, int q, int j, const Rational& a, const Rational& b) {
  if (p < 1 || q < 1) throw Error(ErrorKind::BadParameter, "multiplicities p, q must be positive");
  if (j < 1 || j > p + q - 1) {
    throw Error(ErrorKind::BadParameter, "j must lie in [1, p + q - 1], got " + std::to_string(j));
  }
  if (a == b) throw Error(ErrorKind::EqualEigenvalues, "a and b must differ");
  if (p * a + q * b != 0) throw Error(ErrorKind::BadParameter, "p·a + q·b must vanish");
  SpectrumAnalysis out{p, q, j, a, b, {}, 0};
  for (int k = std::max(0, j - q); k <= std::min(j, p); ++k) {
    Integer mult = binomial(p, k) * binomial(q, j - k);
    out.total += mult;
    out.spectrum.emplace_back(k * a + (j - k) * b, std::move(mult));
  }
  std::sort(out.spectrum.begin(), out.spectrum.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

BalancedVerdict two_value_balanced_check(int p, int q, int j) {
  const auto spectrum = subset_sum_spectrum(p, q, j, q, -p);
  BalancedVerdict out;
  out.l = p + q - 1;
  out.balanced = spectrum.spectrum.size() == 2 && spectrum.spectrum[0].second == spectrum.spectrum[1].second;
  if (out.balanced && j > 1 && j < out.l) {
    out.forced_relation = "l = 2j-1";
    out.relation_holds = out.l == 2 * j - 1;
  }
  return out;
}

std::string HodgeGroupCandidate::label() const {
  std::string out = std::string(1, type) + std::to_string(rank);
  if (j > 1) out += "(j=" + std::to_string(j) + ")";
  return out;
}

std::vector<HodgeGroupCandidate> bor_tabs_enumerate(int g, bool relax_power_guard) {
  if (g < 3) throw Error(ErrorKind::BadDimension, "g must be at least 3, got " + std::to_string(g));
  const long two_g = 2L * g;
  if (!relax_power_guard && is_perfect_power(two_g)) {
    throw Error(ErrorKind::PowerGuard, "2g = " + std::to_string(two_g) + " is a perfect power");
  }
  std::vector<HodgeGroupCandidate> out{{'A', 2 * g - 1, 1}, {'C', g, 1}, {'D', g, 1}};
  for (int r = 2; r < 2 * g - 1; ++r) {
    // C(r+1, j) = C(r+1, r+1-j): scanning j ≤ (r+1)/2 keeps the smallest.
    for (int j = 2; j <= (r + 1) / 2 && j < 2 * g - 1; ++j) {
      const Integer c = binomial(r + 1, j);
      if (c == two_g) {
        out.push_back({'A', r, j});
        break;
      }
      if (c > two_g) break;
    }
  }
  return out;
}

std::pair<Integer, Integer> sp_wedge2_dims(int g) {
  if (g < 2) throw Error(ErrorKind::BadParameter, "g must be at least 2, got " + std::to_string(g));
  return {binomial(2 * g, 2) - 1, 1};
}

Wedge2Scan sl_wedge2_verdict_scan(int m_max) {
  if (m_max < 3) throw Error(ErrorKind::BadParameter, "m_max must be at least 3, got " + std::to_string(m_max));
  Wedge2Scan out;
  for (int m = 2; m <= m_max; ++m) {
    Wedge2ScanRow row;
    row.m = m;
    row.two_g = binomial(2 * m, m);
    row.g = row.two_g / 2;
    row.decomposition = wedge2_omega_m_decomposition(m);
    row.two_simple_compatible = m >= 3 && row.decomposition.verdict == Wedge2Verdict::SimplePlusTrivial;
    if (row.two_simple_compatible) out.compatible_g.push_back(row.g);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace ttl
