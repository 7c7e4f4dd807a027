#include "ttl/kernels.hpp"

#include <algorithm>
#include <exception>

#include "ttl/exact.hpp"
#include "ttl/modp.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ttl::kernels {

namespace {

constexpr std::size_t kParallelMultiplyThreshold = 48;

// Exceptions must not cross an OpenMP region boundary; the first one thrown
// by any iteration is rethrown after the loop.
class FirstError {
 public:
  template <typename Fn>
  void run(Fn&& fn) {
    try {
      fn();
    } catch (...) {
#pragma omp critical(ttl_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

Rational convolve_at(std::span<const Rational> a, std::span<const Rational> b, std::size_t k) {
  Rational acc = 0;
  const std::size_t lo = k + 1 > b.size() ? k + 1 - b.size() : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
  return acc;
}

std::optional<FactorizationModP> factor_if_good(const Polynomial& f, std::uint64_t p) {
  ModPolynomial reduced = ModPolynomial::reduce(f, p);
  if (reduced.degree() != f.degree() || !is_squarefree_mod_p(reduced)) return std::nullopt;
  return factor_mod_p(reduced);
}

}  // namespace

std::vector<Rational> multiply_serial(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = convolve_at(a, b, k);
  return out;
}

std::vector<Rational> multiply_parallel(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  const auto n = static_cast<std::ptrdiff_t>(a.size() + b.size() - 1);
  std::vector<Rational> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = convolve_at(a, b, static_cast<std::size_t>(k));
  return out;
}

std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b) {
  if (std::min(a.size(), b.size()) >= kParallelMultiplyThreshold && thread_count() > 1) return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

std::vector<Rational> resultants_at_serial(const Polynomial& f, const NodeFamily& family,
                                           const std::vector<Rational>& nodes) {
  std::vector<Rational> out;
  out.reserve(nodes.size());
  for (const auto& node : nodes) out.push_back(resultant(f, family(node)));
  return out;
}

std::vector<Rational> resultants_at_parallel(const Polynomial& f, const NodeFamily& family,
                                             const std::vector<Rational>& nodes) {
  const auto n = static_cast<std::ptrdiff_t>(nodes.size());
  std::vector<Rational> out(nodes.size());
  FirstError guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    guard.run([&] {
      const auto idx = static_cast<std::size_t>(i);
      out[idx] = resultant(f, family(nodes[idx]));
    });
  }
  guard.rethrow();
  return out;
}

std::vector<std::optional<FactorizationModP>> factor_at_primes_serial(const Polynomial& f,
                                                                      const std::vector<std::uint64_t>& primes) {
  std::vector<std::optional<FactorizationModP>> out;
  out.reserve(primes.size());
  for (auto p : primes) out.push_back(factor_if_good(f, p));
  return out;
}

std::vector<std::optional<FactorizationModP>> factor_at_primes_parallel(const Polynomial& f,
                                                                        const std::vector<std::uint64_t>& primes) {
  const auto n = static_cast<std::ptrdiff_t>(primes.size());
  std::vector<std::optional<FactorizationModP>> out(primes.size());
  FirstError guard;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    guard.run([&] {
      const auto idx = static_cast<std::size_t>(i);
      out[idx] = factor_if_good(f, primes[idx]);
    });
  }
  guard.rethrow();
  return out;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace ttl::kernels
