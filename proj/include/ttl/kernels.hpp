#pragma once

// Data-parallel inner loops of the exact kernel. Each kernel has a serial
// reference implementation that the tests compare against bit for bit and
// that the benchmark target measures the OpenMP variant against.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ttl/polynomial.hpp"

namespace ttl {
struct FactorizationModP;
}

namespace ttl::kernels {

/// Dense coefficient convolution. Each output coefficient is an independent sum.
std::vector<Rational> multiply_serial(std::span<const Rational> a, std::span<const Rational> b);
std::vector<Rational> multiply_parallel(std::span<const Rational> a, std::span<const Rational> b);
/// Dispatches on size: small products stay serial.
std::vector<Rational> multiply(std::span<const Rational> a, std::span<const Rational> b);

/// Produces the second resultant argument for an interpolation node.
using NodeFamily = std::function<Polynomial(const Rational& node)>;

/// Res(f, family(node)) for every node.
std::vector<Rational> resultants_at_serial(const Polynomial& f, const NodeFamily& family,
                                           const std::vector<Rational>& nodes);
std::vector<Rational> resultants_at_parallel(const Polynomial& f, const NodeFamily& family,
                                             const std::vector<Rational>& nodes);

/// Factorization of f modulo each prime; nullopt where the leading
/// coefficient vanishes or the reduction is not square-free.
std::vector<std::optional<FactorizationModP>> factor_at_primes_serial(const Polynomial& f,
                                                                      const std::vector<std::uint64_t>& primes);
std::vector<std::optional<FactorizationModP>> factor_at_primes_parallel(const Polynomial& f,
                                                                        const std::vector<std::uint64_t>& primes);

/// Number of OpenMP threads available (1 without OpenMP).
int thread_count();

}  // namespace ttl::kernels
