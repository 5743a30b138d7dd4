#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "acbm/bianchi.hpp"
#include "acbm/classify.hpp"
#include "acbm/connection.hpp"
#include "acbm/curvature.hpp"
#include "acbm/family.hpp"
#include "acbm/structure.hpp"

// Deterministic renderers for every analysis the engine performs: a plain
// text form for terminals and an ordered JSON form for machines. Both forms
// are produced from the same computed data, print polynomials in canonical
// order, and list tensor components in row-major index order, so byte-exact
// golden files are stable across runs and platforms.

namespace acbm {

// --- Analysis bundles -------------------------------------------------------

// Axiom and integrability diagnostics for a loaded manifold description.
struct ValidationResult {
  int dimension = 0;
  std::vector<std::string> parameters;
  std::vector<StructureViolation> violations;
  ConditionSet jacobi;  // conditions for the bracket to satisfy Jacobi

  bool clean() const { return violations.empty() && jacobi.holds_identically(); }
};

ValidationResult validate_manifold(const AcbmManifold<Polynomial>& M);

// Levi-Civita data, the fundamental tensor with its Lee forms and norms, and
// the canonical connection with its naturality verdicts.
struct ConnectionAnalysis {
  Connection<Polynomial> levi_civita;
  Tensor<Polynomial> fundamental;
  LeeForms<Polynomial> lee;
  SquareNorms<Polynomial> norms;
  Connection<Polynomial> phi_b;
  Tensor<Polynomial> phi_b_torsion;
  NaturalityResult naturality;
  ConditionSet canonical_identity;
};

ConnectionAnalysis analyze_connection(const AcbmManifold<Polynomial>& M);

// One frame plane span(e_i, e_j): its sectional curvature when the induced
// metric is nondegenerate, and its type relative to the structure.
struct SectionalEntry {
  int i = 0;
  int j = 0;
  bool defined = false;  // false for degenerate planes
  Polynomial value;
  SectionType type{SectionType::Tag::Generic, false};
};

struct CurvatureAnalysis {
  CurvatureData<Polynomial> data;
  std::vector<SectionalEntry> sections;  // all frame planes i < j
  GeometricPredicates<Polynomial> predicates;
};

CurvatureAnalysis analyze_curvature(const AcbmManifold<Polynomial>& M);

// --- Renderers --------------------------------------------------------------

std::string to_text(const ValidationResult& r);
std::string to_text(const ClassReport<Polynomial>& r);
std::string to_text(const ConnectionAnalysis& r);
std::string to_text(const CurvatureAnalysis& r);
std::string to_text(const BianchiType& t);
std::string to_text(const VerificationReport& r);

nlohmann::ordered_json to_json(const ValidationResult& r);
nlohmann::ordered_json to_json(const ClassReport<Polynomial>& r);
nlohmann::ordered_json to_json(const ConnectionAnalysis& r);
nlohmann::ordered_json to_json(const CurvatureAnalysis& r);
nlohmann::ordered_json to_json(const BianchiType& t);
nlohmann::ordered_json to_json(const VerificationReport& r);

// The full document: validation, classification (when the frame is adapted),
// connection, and curvature in one report.
std::string report_text(const AcbmManifold<Polynomial>& M);
nlohmann::ordered_json report_json(const AcbmManifold<Polynomial>& M);

}  // namespace acbm
