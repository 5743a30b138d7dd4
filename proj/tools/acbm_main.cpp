#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acbm/family.hpp"
#include "acbm/manifold_io.hpp"
#include "acbm/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

// Parses "--at a=1,b=-2/3" into a point for every declared parameter.
std::map<std::string, acbm::Rational> parse_point(const std::string& text,
                                                  const std::vector<std::string>& params) {
  std::map<std::string, acbm::Rational> point;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw acbm::ManifoldFileError("--at: entry '" + item + "' is not of the form name=value");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw acbm::ManifoldFileError("--at: '" + name + "' is not a parameter of this manifold");
    if (point.count(name))
      throw acbm::ManifoldFileError("--at: duplicate value for '" + name + "'");
    try {
      point.emplace(std::move(name), acbm::Rational::parse(value));
    } catch (const std::invalid_argument& e) {
      throw acbm::ManifoldFileError(std::string("--at: ") + e.what());
    }
  }
  for (const std::string& p : params)
    if (!point.count(p))
      throw acbm::ManifoldFileError("--at: missing a value for parameter '" + p + "'");
  return point;
}

void emit(const nlohmann::ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact symbolic geometry of 3-dimensional Lie groups carrying an almost "
      "contact B-metric structure"};
  app.require_subcommand(1);

  std::string file = "-";
  bool as_json = false;
  auto add_file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", file, "manifold description (JSON; '-' reads standard input)")
        ->capture_default_str();
    cmd->add_flag("--json", as_json, "machine-readable output");
    return cmd;
  };

  CLI::App* validate =
      add_file_command("validate", "check the structure axioms and the Jacobi identity");
  CLI::App* classify =
      add_file_command("classify", "class membership relative to the two vertical basic classes");
  CLI::App* connection = add_file_command(
      "connection", "Levi-Civita and canonical connections with Lee forms and square norms");
  CLI::App* curvature = add_file_command(
      "curvature", "curvature tensors, sectional curvatures, and geometric conditions");
  CLI::App* report = add_file_command("report", "every analysis in one document");

  CLI::App* bianchi = add_file_command("bianchi", "Bianchi type of the underlying Lie algebra");
  std::string at;
  bianchi->add_option("--at", at, "parameter values, e.g. a=1,b=-2/3");

  CLI::App* family = app.add_subcommand(
      "family", "emit the two-parameter family of structures as a manifold description");
  std::string a_expr = "a";
  std::string b_expr = "b";
  std::string emit_path;
  family->add_option("--a", a_expr, "expression for the first coefficient")
      ->capture_default_str();
  family->add_option("--b", b_expr, "expression for the second coefficient")
      ->capture_default_str();
  family->add_option("--emit", emit_path, "write the description to a file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "re-derive and check every published claim about the family");
  int grid_radius = 2;
  verify->add_option("--grid", grid_radius, "integer census radius")
      ->capture_default_str()
      ->check(CLI::Range(0, 64));
  verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*validate) {
      auto M = acbm::load_manifold_file(file);
      auto r = acbm::validate_manifold(M);
      if (as_json) emit(acbm::to_json(r));
      else std::cout << acbm::to_text(r);
      return r.clean() ? kExitOk : kExitCheckFailed;
    }
    if (*classify) {
      auto M = acbm::load_manifold_file(file);
      auto r = acbm::classify(M);
      if (as_json) emit(acbm::to_json(r));
      else std::cout << acbm::to_text(r);
      return kExitOk;
    }
    if (*connection) {
      auto M = acbm::load_manifold_file(file);
      auto r = acbm::analyze_connection(M);
      if (as_json) emit(acbm::to_json(r));
      else std::cout << acbm::to_text(r);
      return kExitOk;
    }
    if (*curvature) {
      auto M = acbm::load_manifold_file(file);
      auto r = acbm::analyze_curvature(M);
      if (as_json) emit(acbm::to_json(r));
      else std::cout << acbm::to_text(r);
      return kExitOk;
    }
    if (*report) {
      auto M = acbm::load_manifold_file(file);
      if (as_json) emit(acbm::report_json(M));
      else std::cout << acbm::report_text(M);
      return kExitOk;
    }
    if (*bianchi) {
      auto M = acbm::load_manifold_file(file);
      auto point = parse_point(at, acbm::manifold_parameters(M));
      auto type = acbm::bianchi_classify(acbm::specialize(M.algebra, point));
      if (as_json) {
        auto doc = acbm::to_json(type);
        nlohmann::ordered_json at_doc;
        for (const auto& [name, value] : point) at_doc[name] = value.str();
        doc["at"] = std::move(at_doc);
        emit(doc);
      } else {
        std::cout << acbm::to_text(type);
      }
      return kExitOk;
    }
    if (*family) {
      const std::vector<std::string> params{"a", "b"};
      acbm::FamilySpec<acbm::Polynomial> spec{acbm::Polynomial::parse(a_expr, params),
                                              acbm::Polynomial::parse(b_expr, params)};
      auto doc = acbm::manifold_to_json(acbm::build_family(spec));
      if (emit_path.empty()) {
        emit(doc);
      } else {
        std::ofstream out(emit_path);
        if (!out) throw acbm::ManifoldFileError(emit_path + ": cannot open file for writing");
        out << doc.dump(2) << "\n";
      }
      return kExitOk;
    }
    if (*verify) {
      auto rep = acbm::verify_family(grid_radius);
      if (as_json) emit(acbm::to_json(rep));
      else std::cout << acbm::to_text(rep);
      return rep.all_passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;  // unreachable: a subcommand is required
}
