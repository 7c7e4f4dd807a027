#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttl/polynomial.hpp"

namespace ttl {

Integer binomial(long n, long k);

/// True when n = m^d for integers m >= 2, d >= 2.
bool is_perfect_power(long n);

struct MinusculeEntry {
  std::string weight;
  Integer dim;
};

/// Minuscule representations of A_l, B_l, C_l, D_l and their dimensions.
/// Throws BadRank, BadParameter (unknown type).
std::vector<MinusculeEntry> minuscule_dims(char type, int rank);

/// Dominant weight of A_l in fundamental-weight coordinates.
struct WeightA {
  int rank = 0;
  std::vector<int> coeffs;  // coefficients of ω_1 .. ω_l

  bool is_zero() const;
  /// "ω4+ω2" style, highest index first; "0" for the zero weight.
  std::string to_string() const;
  /// ω_i on A_l; i = 0 and i = l + 1 give the zero weight.
  static WeightA fundamental(int rank, int i);
  friend WeightA operator+(const WeightA& a, const WeightA& b);
  friend bool operator==(const WeightA&, const WeightA&) = default;
};

/// Weyl dimension ∏_{i<j} (λ_i - λ_j + j - i) / (j - i) over the partition
/// λ_i = a_i + ... + a_l. Throws BadRank, BadParameter (non-dominant).
Integer weyl_dim_A(const WeightA& w);

enum class Wedge2Verdict { Simple, SimplePlusTrivial, Other };
std::string_view to_string(Wedge2Verdict v);

struct Wedge2Decomposition {
  int m = 0;
  int rank = 0;  // 2m - 1
  std::vector<WeightA> weights;  // i = 1, 3, 5, ... ≤ m
  std::vector<Integer> dims;
  Integer expected_total;  // C(C(2m, m), 2)
  Integer total;
  bool identity_holds = false;
  bool has_trivial = false;
  int nontrivial_summands = 0;
  Wedge2Verdict verdict = Wedge2Verdict::Other;
};

/// ∧² V(ω_m) on A_{2m-1} = ⊕ V(ω_{m+i} + ω_{m-i}) over odd i ≤ m, with
/// ω_0 = ω_{2m} = 0. Throws BadParameter (m < 2).
Wedge2Decomposition wedge2_omega_m_decomposition(int m);

struct SpectrumAnalysis {
  int p = 0;
  int q = 0;
  int j = 0;
  Rational a;
  Rational b;
  /// (value k·a + (j-k)·b, multiplicity C(p,k)·C(q,j-k)), ascending by value.
  std::vector<std::pair<Rational, Integer>> spectrum;
  Integer total;
};

/// Eigenvalues of ∧^j on a space where z has eigenvalue a with multiplicity
/// p and b with multiplicity q. Throws BadParameter, EqualEigenvalues.
SpectrumAnalysis subset_sum_spectrum(int p, int q, int j, const Rational& a, const Rational& b);

struct BalancedVerdict {
  int l = 0;  // p + q - 1
  bool balanced = false;
  /// "l = 2j-1", reported when balanced with 1 < j < l.
  std::optional<std::string> forced_relation;
  bool relation_holds = true;
};

/// Two eigenvalues of equal multiplicity for a = q, b = -p.
BalancedVerdict two_value_balanced_check(int p, int q, int j);

struct HodgeGroupCandidate {
  char type = 'A';
  int rank = 0;
  /// 1 for standard representations, otherwise the exterior power j.
  int j = 1;
  std::string label() const;  // "A19", "C10", "A5(j=3)"
};

/// Types A_{2g-1}, C_g, D_g and every A_r, 1 < r < 2g - 1, with
/// C(r + 1, j) = 2g for some 1 < j < 2g - 1 (smallest j of each symmetric
/// pair). Throws PowerGuard when 2g is a perfect power unless relaxed,
/// BadDimension (g < 3).
std::vector<HodgeGroupCandidate> bor_tabs_enumerate(int g, bool relax_power_guard = false);

/// ∧² of the standard C_g module: (C(2g, 2) - 1, 1). Throws BadParameter (g < 2).
std::pair<Integer, Integer> sp_wedge2_dims(int g);

struct Wedge2ScanRow {
  int m = 0;
  Integer two_g;  // C(2m, m)
  Integer g;
  Wedge2Decomposition decomposition;
  bool two_simple_compatible = false;  // m >= 3 and simple plus trivial
};

struct Wedge2Scan {
  std::vector<Wedge2ScanRow> rows;
  std::vector<Integer> compatible_g;
};

/// Rows for 2 ≤ m ≤ m_max. Throws BadParameter (m_max < 3).
Wedge2Scan sl_wedge2_verdict_scan(int m_max);

}  // namespace ttl
