#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ttl/galois.hpp"
#include "ttl/modp.hpp"
#include "ttl/permgrp.hpp"
#include "ttl/polynomial.hpp"

namespace ttl {

/// A number field given by a defining polynomial, with certified invariants.
struct FieldAnalysis {
  Polynomial input;     // as given (monic, possibly rational)
  Polynomial defining;  // D^n · input(x / D): monic with integer coefficients
  Integer scale = 1;    // D
  int n = 0;
  int r = 0;
  int s = 0;
  IrreducibilityCertificate irreducibility;
  std::optional<TransitivityReport> transitivity;  // degree >= 3 only
};

/// Throws ReduciblePolynomial, DegreeBoundExceeded (degree above
/// options.max_degree), NonMonic, NotSquarefree, ZeroPolynomial.
FieldAnalysis analyze_field(const Polynomial& f, const GaloisOptions& options = {});

/// Dirichlet rank r + s - 1. Throws EmptySignature when r + s = 0.
int unit_rank(int r, int s);

enum class EndoDegree { One, G, TwoG, Incompatible };
std::string_view to_string(EndoDegree e);

enum class Tristate { Yes, No, Undetermined };
std::string_view to_string(Tristate t);

struct ConstraintCheck {
  std::string condition;
  std::string status;  // "satisfied", "violated", "reported", "undetermined"
};

struct TorusClassification {
  int g = 0;
  int field_degree = 1;
  std::optional<int> r;
  std::optional<int> s;
  EndoDegree endo_degree = EndoDegree::One;
  std::optional<int> aut_rank;  // d in Aut(T) = {±1} x Z^d
  std::string hodge_group;
  std::optional<int> hodge_group_dim;
  Tristate two_simple = Tristate::Undetermined;
  std::vector<ConstraintCheck> constraints;
  std::optional<std::string> violated;
  std::vector<std::string> notes;
};

/// Endomorphism algebra Q. Throws BadDimension (g < 3).
TorusClassification classify_torus(int g);
/// Endomorphism algebra the analyzed field. Throws BadDimension (g < 3).
TorusClassification classify_torus(int g, const FieldAnalysis& field);

/// Smallest admissible rank for a degree-g field: the ceiling of g/2 - 1.
int min_aut_rank(int g);

struct MultiplicityVector {
  int g = 0;
  int d_E = 0;
  std::vector<int> real_entries;
  std::vector<std::pair<int, int>> pair_entries;  // (n_σ, n_σ̄)
  long h20_dim = 0;
  /// h20_dim is 0 or g(g-1)/2 and the vector is not excluded below.
  bool two_simple_compatible = false;
  /// All entries in {0, d_E} with d_E >= 2 and g >= 3: the complex structure
  /// lies in E ⊗ R, so every E-subspace of the rational homology spans a
  /// subtorus and the torus is not simple.
  bool excluded_not_simple = false;
};

struct MultiplicityEnumeration {
  std::vector<MultiplicityVector> vectors;
  std::optional<std::string> no_vector_reason;
};

/// All n_σ with n_σ + n_σ̄ = d_E, real entries d_E / 2 and Σ n_σ = g.
/// Throws InconsistentSignature, BadDimension (g < 2).
MultiplicityEnumeration enumerate_multiplicity_vectors(int g, int field_degree, int r, int s);

enum class H2Case { DegreeG, Degree2G };
std::string_view to_string(H2Case c);

struct H2Decomposition {
  int g = 0;
  H2Case h2_case = H2Case::DegreeG;
  long invariant_dim = 0;
  std::vector<std::size_t> orbit_sizes;
  std::vector<long> moving_summands;
  long total_dim = 0;
  bool simple_verdict = false;  // single orbit on 2-subsets
};

/// Throws WrongPointCount, NotTransitive, NotClosed, BadDimension.
H2Decomposition h2_decomposition(int g, H2Case c, const PermGroup& action);

/// (2(d + 1) - g, g - d - 1). Throws RankOutOfRange, BadDimension.
std::pair<int, int> aut_rank_to_signature(int g, int d);

struct SynthesisOptions {
  int max_retries = 20;
  GaloisOptions galois;
};

struct SynthesisResult {
  Polynomial f;
  FieldAnalysis analysis;
  Integer scale_K;
  int attempts = 0;
  Residue p = 2;
  Residue ell = 3;
  ModPolynomial u_ell{3};
};

/// Monic integer polynomial of degree n with signature (r, s) whose Galois
/// action on roots is doubly transitive, built by matching an archimedean
/// model, an Eisenstein class mod 4 and x·u(x) mod 3 with u irreducible of
/// degree n - 1, then certified a posteriori.
/// Throws InconsistentSignature, BadParameter (n < 3), SynthesisExhausted.
SynthesisResult synthesize_field(int n, int r, int s, const SynthesisOptions& options = {});

/// Lexicographically first monic irreducible polynomial of the given degree mod p.
ModPolynomial first_irreducible(Residue p, int degree);

struct TorusProfile {
  SynthesisResult synthesis;
  TorusClassification classification;
};

/// Throws RankOutOfRange, BadDimension, and synthesis errors.
TorusProfile synthesize_torus_profile(int g, int d, const SynthesisOptions& options = {});

}  // namespace ttl
