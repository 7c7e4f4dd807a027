#include "ttl/error.hpp"

namespace ttl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::NonIntegerCoefficients: return "NonIntegerCoefficients";
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::LeadingCoefficientVanishesModP: return "LeadingCoefficientVanishesModP";
    case ErrorKind::ModuliNotCoprime: return "ModuliNotCoprime";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::CollisionDetected: return "CollisionDetected";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::DegenerateTransform: return "DegenerateTransform";
    case ErrorKind::ResolventCollisionUnresolved: return "ResolventCollisionUnresolved";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::EmptySignature: return "EmptySignature";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::InconsistentSignature: return "InconsistentSignature";
    case ErrorKind::WrongPointCount: return "WrongPointCount";
    case ErrorKind::NotTransitive: return "NotTransitive";
    case ErrorKind::RankOutOfRange: return "RankOutOfRange";
    case ErrorKind::SynthesisExhausted: return "SynthesisExhausted";
    case ErrorKind::BadRank: return "BadRank";
    case ErrorKind::EqualEigenvalues: return "EqualEigenvalues";
    case ErrorKind::PowerGuard: return "PowerGuard";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace ttl
