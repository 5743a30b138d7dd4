#include "acbm/report.hpp"

#include <sstream>
#include <utility>

#include "acbm/manifold_io.hpp"

namespace acbm {
namespace {

using nlohmann::ordered_json;

// --- text helpers -----------------------------------------------------------

void tensor_lines(std::ostream& os, const Tensor<Polynomial>& t, const std::string& sym) {
  bool any = false;
  for (size_t f = 0; f < t.size(); ++f) {
    if (t.component(f).is_zero()) continue;
    os << "  " << sym << "(";
    auto idx = t.unflat(f);
    for (size_t s = 0; s < idx.size(); ++s) os << (s ? "," : "") << idx[s];
    os << ") = " << t.component(f).str() << "\n";
    any = true;
  }
  if (!any) os << "  (all components zero)\n";
}

std::string condition_phrase(const ConditionSet& s) {
  if (s.holds_identically()) return "holds";
  return "requires " + s.describe();
}

// Like tensor_lines, but a zero form prints as "sym = 0" so adjacent forms
// under one heading stay distinguishable.
void form_lines(std::ostream& os, const Tensor<Polynomial>& t, const std::string& sym) {
  for (size_t f = 0; f < t.size(); ++f)
    if (!t.component(f).is_zero()) {
      tensor_lines(os, t, sym);
      return;
    }
  os << "  " << sym << " = 0\n";
}

// --- json helpers -----------------------------------------------------------

ordered_json tensor_json(const Tensor<Polynomial>& t) {
  ordered_json out = ordered_json::array();
  for (size_t f = 0; f < t.size(); ++f) {
    if (t.component(f).is_zero()) continue;
    out.push_back({{"indices", t.unflat(f)}, {"value", t.component(f).str()}});
  }
  return out;
}

ordered_json condition_json(const ConditionSet& s) {
  ordered_json polys = ordered_json::array();
  for (const Polynomial& p : s.polynomials()) polys.push_back(p.str());
  return {{"polynomials", std::move(polys)}, {"describe", s.describe()}};
}

ordered_json envelope(const char* kind) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["kind"] = kind;
  return doc;
}

// --- payload builders (shared between the standalone and combined forms) ----

ordered_json validation_payload(const ValidationResult& r) {
  ordered_json doc;
  doc["dimension"] = r.dimension;
  doc["parameters"] = r.parameters;
  ordered_json violations = ordered_json::array();
  for (const StructureViolation& v : r.violations)
    violations.push_back({{"axiom", v.axiom}, {"indices", v.indices}, {"describe", v.str()}});
  doc["violations"] = std::move(violations);
  doc["jacobi"] = condition_json(r.jacobi);
  doc["valid"] = r.clean();
  return doc;
}

ordered_json classification_payload(const ClassReport<Polynomial>& r) {
  ordered_json doc;
  doc["class"] = r.verdict();
  doc["theta0"] = r.theta0.str();
  doc["theta_star0"] = r.theta_star0.str();
  ordered_json membership;
  membership["F4"] = condition_json(r.in_f4);
  membership["F5"] = condition_json(r.in_f5);
  membership["F4+F5"] = condition_json(r.in_f45);
  membership["F0"] = condition_json(r.in_f0);
  doc["membership"] = std::move(membership);
  doc["fundamental"] = tensor_json(r.f);
  doc["f4"] = tensor_json(r.f4);
  doc["f5"] = tensor_json(r.f5);
  doc["residual"] = tensor_json(r.residual);
  doc["note"] = r.note;
  return doc;
}

ordered_json connection_payload(const ConnectionAnalysis& r) {
  ordered_json doc;
  doc["levi_civita"] = tensor_json(r.levi_civita.coefficients());
  doc["fundamental"] = tensor_json(r.fundamental);
  ordered_json lee;
  lee["theta"] = tensor_json(r.lee.theta);
  lee["theta_star"] = tensor_json(r.lee.theta_star);
  lee["omega"] = tensor_json(r.lee.omega);
  lee["theta0"] = r.lee.theta0.str();
  lee["theta_star0"] = r.lee.theta_star0.str();
  doc["lee"] = std::move(lee);
  ordered_json norms;
  norms["nabla_phi"] = r.norms.nabla_phi.str();
  norms["nabla_eta"] = r.norms.nabla_eta.str();
  norms["nabla_xi"] = r.norms.nabla_xi.str();
  doc["square_norms"] = std::move(norms);
  ordered_json pb;
  pb["coefficients"] = tensor_json(r.phi_b.coefficients());
  pb["torsion"] = tensor_json(r.phi_b_torsion);
  pb["natural"] = r.naturality.natural;
  pb["violations"] = r.naturality.violations;
  pb["canonical_identity"] = condition_json(r.canonical_identity);
  doc["phi_b"] = std::move(pb);
  return doc;
}

ordered_json curvature_payload(const CurvatureAnalysis& r) {
  ordered_json doc;
  doc["riemann"] = tensor_json(r.data.riemann);
  doc["ricci"] = tensor_json(r.data.ricci);
  doc["tau"] = r.data.tau.str();
  doc["ricci_star"] = tensor_json(r.data.ricci_star);
  doc["tau_star"] = r.data.tau_star.str();
  ordered_json sections = ordered_json::array();
  for (const SectionalEntry& s : r.sections) {
    ordered_json entry;
    entry["plane"] = {s.i, s.j};
    entry["defined"] = s.defined;
    entry["value"] = s.defined ? ordered_json(s.value.str()) : ordered_json(nullptr);
    entry["section"] = s.type.name();
    entry["degenerate"] = s.type.degenerate;
    sections.push_back(std::move(entry));
  }
  doc["sectional"] = std::move(sections);
  ordered_json conditions;
  for (const auto& [name, cs] : r.predicates.conditions) conditions[name] = condition_json(cs);
  doc["conditions"] = std::move(conditions);
  doc["einstein_factor"] = r.predicates.einstein_lambda.str();
  doc["space_form_constant"] = r.predicates.space_form_constant.str();
  return doc;
}

ordered_json bianchi_payload(const BianchiType& t) {
  ordered_json doc;
  doc["type"] = t.tag_name();
  doc["description"] = t.to_string();
  doc["h"] = t.h ? ordered_json(*t.h) : ordered_json(nullptr);
  doc["h_exact"] = t.h_exact ? ordered_json(t.h_exact->str()) : ordered_json(nullptr);
  doc["trace"] = t.trace_a ? ordered_json(t.trace_a->str()) : ordered_json(nullptr);
  doc["det"] = t.det_a ? ordered_json(t.det_a->str()) : ordered_json(nullptr);
  return doc;
}

ordered_json verification_payload(const VerificationReport& r) {
  ordered_json doc;
  doc["grid_radius"] = r.grid_radius;
  ordered_json checks = ordered_json::array();
  for (const CheckEntry& c : r.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["claim"] = c.claim;
    entry["status"] = status_name(c.status);
    entry["expected"] = c.expected;
    entry["computed"] = c.computed;
    entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  ordered_json census = ordered_json::array();
  for (const auto& [name, count] : r.bianchi_counts)
    census.push_back({{"type", name}, {"count", count}});
  doc["census"] = std::move(census);
  doc["all_passed"] = r.all_passed();
  doc["trailer"] = r.trailer();
  return doc;
}

}  // namespace

// --- analysis ----------------------------------------------------------------

ValidationResult validate_manifold(const AcbmManifold<Polynomial>& M) {
  return ValidationResult{M.dimension(), manifold_parameters(M), validate_structure(M),
                          check_jacobi(M.algebra)};
}

ConnectionAnalysis analyze_connection(const AcbmManifold<Polynomial>& M) {
  Connection<Polynomial> conn = levi_civita(M);
  Tensor<Polynomial> F = fundamental_tensor(M, conn);
  LeeForms<Polynomial> lee = lee_forms(M, F);
  SquareNorms<Polynomial> norms = square_norms(M, conn);
  Connection<Polynomial> pb = phi_b_connection(M, conn);
  Tensor<Polynomial> T = torsion(pb, M.algebra);
  NaturalityResult nat = is_natural(M, pb);
  ConditionSet identity = phi_canonical_identity_holds(M, pb);
  return ConnectionAnalysis{std::move(conn), std::move(F),        std::move(lee),
                            std::move(norms), std::move(pb),       std::move(T),
                            std::move(nat),   std::move(identity)};
}

CurvatureAnalysis analyze_curvature(const AcbmManifold<Polynomial>& M) {
  Connection<Polynomial> conn = levi_civita(M);
  CurvatureData<Polynomial> data = curvature(M, conn);
  Tensor<Polynomial> F = fundamental_tensor(M, conn);
  LeeForms<Polynomial> lee = lee_forms(M, F);
  SquareNorms<Polynomial> norms = square_norms(M, conn);
  GeometricPredicates<Polynomial> preds = predicates(M, data, norms, lee);

  const int d = M.dimension();
  std::vector<SectionalEntry> sections;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Tensor<Polynomial> ei(d, {IndexKind::Upper}), ej(d, {IndexKind::Upper});
      ei(i) = ring_traits<Polynomial>::one();
      ej(j) = ring_traits<Polynomial>::one();
      SectionalEntry entry;
      entry.i = i;
      entry.j = j;
      entry.type = section_type(M, ei, ej);
      try {
        entry.value = sectional_curvature(M, data, ei, ej);
        entry.defined = true;
      } catch (const std::domain_error&) {
        entry.defined = false;
      }
      sections.push_back(std::move(entry));
    }
  return CurvatureAnalysis{std::move(data), std::move(sections), std::move(preds)};
}

// --- text renderers -----------------------------------------------------------

std::string to_text(const ValidationResult& r) {
  std::ostringstream os;
  os << "dimension: " << r.dimension << "\n";
  os << "parameters:";
  if (r.parameters.empty()) os << " (none)";
  for (const std::string& p : r.parameters) os << " " << p;
  os << "\n";
  if (r.violations.empty()) {
    os << "structure axioms: satisfied\n";
  } else {
    os << "structure axioms: " << r.violations.size() << " violation(s)\n";
    for (const StructureViolation& v : r.violations) os << "  - " << v.str() << "\n";
  }
  os << "jacobi identity: " << condition_phrase(r.jacobi) << "\n";
  os << "status: " << (r.clean() ? "valid" : "invalid") << "\n";
  return os.str();
}

std::string to_text(const ClassReport<Polynomial>& r) {
  std::ostringstream os;
  os << "class: " << r.verdict() << "\n";
  os << "theta_0 = " << r.theta0.str() << "\n";
  os << "theta*_0 = " << r.theta_star0.str() << "\n";
  os << "membership conditions:\n";
  os << "  F4: " << r.in_f4.describe() << "\n";
  os << "  F5: " << r.in_f5.describe() << "\n";
  os << "  F4+F5: " << r.in_f45.describe() << "\n";
  os << "  F0: " << r.in_f0.describe() << "\n";
  os << "fundamental tensor:\n";
  tensor_lines(os, r.f, "F");
  os << "component in F4:\n";
  tensor_lines(os, r.f4, "F4");
  os << "component in F5:\n";
  tensor_lines(os, r.f5, "F5");
  os << "residual:\n";
  tensor_lines(os, r.residual, "F-F4-F5");
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

std::string to_text(const ConnectionAnalysis& r) {
  std::ostringstream os;
  os << "levi-civita coefficients:\n";
  tensor_lines(os, r.levi_civita.coefficients(), "G");
  os << "fundamental tensor:\n";
  tensor_lines(os, r.fundamental, "F");
  os << "lee forms:\n";
  form_lines(os, r.lee.theta, "theta");
  form_lines(os, r.lee.theta_star, "theta*");
  form_lines(os, r.lee.omega, "omega");
  os << "  theta_0 = " << r.lee.theta0.str() << "\n";
  os << "  theta*_0 = " << r.lee.theta_star0.str() << "\n";
  os << "square norms:\n";
  os << "  |nabla phi|^2 = " << r.norms.nabla_phi.str() << "\n";
  os << "  |nabla eta|^2 = " << r.norms.nabla_eta.str() << "\n";
  os << "  |nabla xi|^2 = " << r.norms.nabla_xi.str() << "\n";
  os << "phi-b connection coefficients:\n";
  tensor_lines(os, r.phi_b.coefficients(), "D");
  os << "phi-b torsion:\n";
  tensor_lines(os, r.phi_b_torsion, "T");
  if (r.naturality.natural) {
    os << "naturality: natural for the structure\n";
  } else {
    os << "naturality: not natural\n";
    for (const std::string& v : r.naturality.violations) os << "  - " << v << "\n";
  }
  os << "canonical torsion identity: " << condition_phrase(r.canonical_identity) << "\n";
  return os.str();
}

std::string to_text(const CurvatureAnalysis& r) {
  std::ostringstream os;
  os << "riemann tensor:\n";
  tensor_lines(os, r.data.riemann, "R");
  os << "ricci tensor:\n";
  tensor_lines(os, r.data.ricci, "ricci");
  os << "scalar curvature: tau = " << r.data.tau.str() << "\n";
  os << "star ricci tensor:\n";
  tensor_lines(os, r.data.ricci_star, "ricci*");
  os << "star scalar curvature: tau* = " << r.data.tau_star.str() << "\n";
  os << "sectional curvatures of the frame planes:\n";
  for (const SectionalEntry& s : r.sections) {
    os << "  k(" << s.i << "," << s.j << ") = ";
    if (s.defined) os << s.value.str();
    else os << "undefined (degenerate plane)";
    os << " [" << s.type.name() << (s.type.degenerate ? "; degenerate" : "") << "]\n";
  }
  os << "geometric conditions:\n";
  for (const auto& [name, cs] : r.predicates.conditions)
    os << "  " << name << ": " << cs.describe() << "\n";
  os << "einstein factor: lambda = " << r.predicates.einstein_lambda.str() << "\n";
  os << "space-form constant: k = " << r.predicates.space_form_constant.str() << "\n";
  return os.str();
}

std::string to_text(const BianchiType& t) { return t.to_string() + "\n"; }

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "family verification (grid radius " << r.grid_radius << ")\n";
  for (const CheckEntry& c : r.checks) {
    os << "[" << status_name(c.status) << "] " << c.name << " (" << c.claim << ")\n";
    os << "  expected: " << c.expected << "\n";
    os << "  computed: " << c.computed << "\n";
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
  }
  os << "type census:";
  for (size_t i = 0; i < r.bianchi_counts.size(); ++i)
    os << (i ? ", " : " ") << r.bianchi_counts[i].first << ":" << r.bianchi_counts[i].second;
  os << "\n";
  os << r.trailer() << "\n";
  return os.str();
}

// --- json renderers -----------------------------------------------------------

nlohmann::ordered_json to_json(const ValidationResult& r) {
  ordered_json doc = envelope("validation");
  doc.update(validation_payload(r));
  return doc;
}

nlohmann::ordered_json to_json(const ClassReport<Polynomial>& r) {
  ordered_json doc = envelope("classification");
  doc.update(classification_payload(r));
  return doc;
}

nlohmann::ordered_json to_json(const ConnectionAnalysis& r) {
  ordered_json doc = envelope("connection");
  doc.update(connection_payload(r));
  return doc;
}

nlohmann::ordered_json to_json(const CurvatureAnalysis& r) {
  ordered_json doc = envelope("curvature");
  doc.update(curvature_payload(r));
  return doc;
}

nlohmann::ordered_json to_json(const BianchiType& t) {
  ordered_json doc = envelope("bianchi-type");
  doc.update(bianchi_payload(t));
  return doc;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  ordered_json doc = envelope("verification");
  doc.update(verification_payload(r));
  return doc;
}

// --- combined document ----------------------------------------------------------

std::string report_text(const AcbmManifold<Polynomial>& M) {
  std::ostringstream os;
  os << "== structure ==\n" << to_text(validate_manifold(M));
  os << "\n== class ==\n";
  try {
    os << to_text(classify(M));
  } catch (const std::invalid_argument& e) {
    os << "not computed: " << e.what() << "\n";
  }
  os << "\n== connection ==\n" << to_text(analyze_connection(M));
  os << "\n== curvature ==\n" << to_text(analyze_curvature(M));
  return os.str();
}

nlohmann::ordered_json report_json(const AcbmManifold<Polynomial>& M) {
  ordered_json doc = envelope("report");
  ValidationResult v = validate_manifold(M);
  doc["dimension"] = v.dimension;
  doc["parameters"] = v.parameters;
  doc["validation"] = validation_payload(v);
  try {
    doc["classification"] = classification_payload(classify(M));
  } catch (const std::invalid_argument& e) {
    doc["classification"] = nullptr;
    doc["classification_error"] = e.what();
  }
  doc["connection"] = connection_payload(analyze_connection(M));
  doc["curvature"] = curvature_payload(analyze_curvature(M));
  return doc;
}

}  // namespace acbm
