#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ttl {

enum class ErrorKind {
  // exact
  ZeroPolynomial,
  NotSquarefree,
  NonMonic,
  NonIntegerCoefficients,
  CompositeModulus,
  LeadingCoefficientVanishesModP,
  ModuliNotCoprime,
  DegreeBoundExceeded,
  // permgrp
  OrderBoundExceeded,
  BadModulus,
  NotClosed,
  // galois
  CollisionDetected,
  BadParameter,
  DegenerateTransform,
  ResolventCollisionUnresolved,
  // torus
  ReduciblePolynomial,
  EmptySignature,
  BadDimension,
  InconsistentSignature,
  WrongPointCount,
  NotTransitive,
  RankOutOfRange,
  SynthesisExhausted,
  // lie
  BadRank,
  EqualEigenvalues,
  PowerGuard,
  // cli
  ParseError,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying a kind, so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ttl
