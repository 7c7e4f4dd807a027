#pragma once

// Slow, independent reference computations used only by the tests.

#include <vector>

#include "ttl/polynomial.hpp"

namespace oracle {

using ttl::Integer;
using ttl::Polynomial;
using ttl::Rational;

/// Determinant of the Sylvester matrix by Gaussian elimination over Q.
inline Rational sylvester_resultant(const Polynomial& f, const Polynomial& g) {
  const int m = f.degree();
  const int n = g.degree();
  const int size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(size), std::vector<Rational>(static_cast<std::size_t>(size)));
  // Rows hold descending coefficients, shifted.
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = f.coeff(static_cast<std::size_t>(m - k));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = g.coeff(static_cast<std::size_t>(n - k));
  Rational det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rational p = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= p;
    for (int r = col + 1; r < size; ++r) {
      const Rational factor = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (factor == 0) continue;
      for (int c = col; c < size; ++c)
        a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -= factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return det;
}

/// Power sums p_1..p_count of the roots of a monic polynomial (Newton's identities).
inline std::vector<Rational> power_sums(const Polynomial& f, int count) {
  const int n = f.degree();
  auto c = [&](int i) { return f.coeff(static_cast<std::size_t>(n - i)); };  // c(0) = 1
  std::vector<Rational> p(static_cast<std::size_t>(count + 1));
  p[0] = n;
  for (int k = 1; k <= count; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= std::min(k - 1, n); ++i) acc += c(i) * p[static_cast<std::size_t>(k - i)];
    if (k <= n) acc += k * c(k);
    p[static_cast<std::size_t>(k)] = -acc;
  }
  return p;
}

/// Monic polynomial of degree n from its root power sums p_0..p_n.
inline Polynomial from_power_sums(const std::vector<Rational>& p, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = p[static_cast<std::size_t>(k)];
    for (int i = 1; i < k; ++i) acc += c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
    c[static_cast<std::size_t>(k)] = -acc / k;
  }
  std::vector<Rational> ascending(c.rbegin(), c.rend());
  return Polynomial(std::move(ascending));
}

inline Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

/// Composed sum via p_k(α + β) = Σ_i C(k, i) p_i(α) p_{k-i}(β).
inline Polynomial composed_sum_by_power_sums(const Polynomial& f, const Polynomial& g) {
  const int n = f.degree() * g.degree();
  const auto pf = power_sums(f, n);
  const auto pg = power_sums(g, n);
  std::vector<Rational> p(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= k; ++i)
      acc += Rational(binomial(k, i)) * pf[static_cast<std::size_t>(i)] * pg[static_cast<std::size_t>(k - i)];
    p[static_cast<std::size_t>(k)] = acc;
  }
  return from_power_sums(p, n);
}

/// Number of semistandard Young tableaux of the given shape with entries in
/// 1..n, by filling cells one at a time.
inline long ssyt_count(const std::vector<int>& shape, int n) {
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(static_cast<std::size_t>(shape[r]), 0);
  long count = 0;
  auto fill = [&](auto&& self, std::size_t idx) -> void {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= n; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      self(self, idx + 1);
    }
  };
  fill(fill, 0);
  return count;
}

}  // namespace oracle
