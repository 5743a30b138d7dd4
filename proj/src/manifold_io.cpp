#include "acbm/manifold_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

namespace acbm {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& reason) {
  throw ManifoldFileError(origin + ": " + (path.empty() ? reason : path + ": " + reason));
}

std::string element(const std::string& path, size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

const json& member(const json& obj, const std::string& origin, const std::string& path,
                   const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(origin, path, "missing required field '" + key + "'");
  return *it;
}

int integer_in_range(const json& v, const std::string& origin, const std::string& path, int lo,
                     int hi) {
  if (!v.is_number_integer()) fail(origin, path, "expected an integer");
  auto n = v.get<long long>();
  if (n < lo || n > hi)
    fail(origin, path,
         "value " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
             std::to_string(hi) + "]");
  return static_cast<int>(n);
}

std::string value_string(const json& v, const std::string& origin, const std::string& path) {
  if (!v.is_string()) fail(origin, path, "expected a string value");
  return v.get<std::string>();
}

Polynomial parse_poly(const json& v, const std::string& origin, const std::string& path,
                      const std::vector<std::string>& params) {
  std::string text = value_string(v, origin, path);
  try {
    return Polynomial::parse(text, params);
  } catch (const std::exception& e) {
    fail(origin, path, std::string("cannot parse polynomial '") + text + "': " + e.what());
  }
}

Rational parse_rational(const json& v, const std::string& origin, const std::string& path) {
  std::string text = value_string(v, origin, path);
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    fail(origin, path, std::string("cannot parse rational '") + text + "': " + e.what());
  }
}

// A d-vector or d x d matrix of polynomial strings as a tensor of the given
// variance (rank 1 or 2, row-major: slot order matches nesting order).
Tensor<Polynomial> tensor_field(const json& v, const std::string& origin, const std::string& path,
                                int d, Variance variance,
                                const std::vector<std::string>& params) {
  Tensor<Polynomial> out(d, variance);
  if (variance.size() == 1) {
    if (!v.is_array() || v.size() != size_t(d))
      fail(origin, path, "expected an array of " + std::to_string(d) + " strings");
    for (int i = 0; i < d; ++i) out(i) = parse_poly(v[size_t(i)], origin, element(path, i), params);
    return out;
  }
  if (!v.is_array() || v.size() != size_t(d))
    fail(origin, path, "expected a " + std::to_string(d) + " x " + std::to_string(d) + " matrix");
  for (int r = 0; r < d; ++r) {
    const json& row = v[size_t(r)];
    if (!row.is_array() || row.size() != size_t(d))
      fail(origin, element(path, r), "expected a row of " + std::to_string(d) + " strings");
    for (int c = 0; c < d; ++c)
      out(r, c) = parse_poly(row[size_t(c)], origin, element(element(path, r), c), params);
  }
  return out;
}

}  // namespace

AcbmManifold<Polynomial> parse_manifold(const json& doc, const std::string& origin) {
  if (!doc.is_object()) fail(origin, "", "top level must be a JSON object");

  static const std::set<std::string> known{"schema_version", "dimension",          "parameters",
                                           "phi",            "structure_constants", "xi",
                                           "eta",            "g"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) fail(origin, key, "unknown field");

  if (auto it = doc.find("schema_version"); it != doc.end()) {
    int version = integer_in_range(*it, origin, "schema_version", 0, 1 << 20);
    if (version != 1)
      fail(origin, "schema_version", "unsupported version " + std::to_string(version));
  }

  const int d = integer_in_range(member(doc, origin, "", "dimension"), origin, "dimension", 1, 16);

  std::vector<std::string> params;
  if (auto it = doc.find("parameters"); it != doc.end()) {
    if (!it->is_array()) fail(origin, "parameters", "expected an array of names");
    for (size_t i = 0; i < it->size(); ++i) {
      std::string name = value_string((*it)[i], origin, element("parameters", i));
      if (name.empty()) fail(origin, element("parameters", i), "empty parameter name");
      if (std::find(params.begin(), params.end(), name) != params.end())
        fail(origin, element("parameters", i), "duplicate parameter '" + name + "'");
      params.push_back(std::move(name));
    }
  }

  std::vector<std::tuple<int, int, int, Polynomial>> brackets;
  if (auto it = doc.find("structure_constants"); it != doc.end()) {
    if (!it->is_array()) fail(origin, "structure_constants", "expected an array of entries");
    std::set<std::tuple<int, int, int>> seen;
    for (size_t n = 0; n < it->size(); ++n) {
      const std::string path = element("structure_constants", n);
      const json& entry = (*it)[n];
      if (!entry.is_object()) fail(origin, path, "expected an {i, j, k, value} object");
      for (const auto& [key, value] : entry.items())
        if (key != "i" && key != "j" && key != "k" && key != "value")
          fail(origin, path + "." + key, "unknown field");
      int i = integer_in_range(member(entry, origin, path, "i"), origin, path + ".i", 0, d - 1);
      int j = integer_in_range(member(entry, origin, path, "j"), origin, path + ".j", 0, d - 1);
      int k = integer_in_range(member(entry, origin, path, "k"), origin, path + ".k", 0, d - 1);
      if (i >= j)
        fail(origin, path, "entries need i < j (the antisymmetric completion is implied)");
      if (!seen.insert({i, j, k}).second)
        fail(origin, path,
             "duplicate entry for (i, j, k) = (" + std::to_string(i) + ", " + std::to_string(j) +
                 ", " + std::to_string(k) + ")");
      brackets.emplace_back(
          i, j, k, parse_poly(member(entry, origin, path, "value"), origin, path + ".value", params));
    }
  }

  Tensor<Polynomial> phi =
      tensor_field(member(doc, origin, "", "phi"), origin, "phi", d,
                   {IndexKind::Upper, IndexKind::Lower}, params);
  Tensor<Polynomial> xi = tensor_field(member(doc, origin, "", "xi"), origin, "xi", d,
                                       {IndexKind::Upper}, params);
  Tensor<Polynomial> eta = tensor_field(member(doc, origin, "", "eta"), origin, "eta", d,
                                        {IndexKind::Lower}, params);

  const json& gval = member(doc, origin, "", "g");
  Tensor<Polynomial> g(d, {IndexKind::Lower, IndexKind::Lower});
  if (!gval.is_array() || gval.size() != size_t(d))
    fail(origin, "g", "expected a " + std::to_string(d) + " x " + std::to_string(d) + " matrix");
  for (int r = 0; r < d; ++r) {
    const json& row = gval[size_t(r)];
    if (!row.is_array() || row.size() != size_t(d))
      fail(origin, element("g", r), "expected a row of " + std::to_string(d) + " strings");
    for (int c = 0; c < d; ++c)
      g(r, c) = Polynomial::constant(
          parse_rational(row[size_t(c)], origin, element(element("g", r), c)), params);
  }

  try {
    return AcbmManifold<Polynomial>(LieAlgebra<Polynomial>::from_brackets(d, brackets),
                                    std::move(phi), std::move(xi), std::move(eta),
                                    MetricPair<Polynomial>::from_metric(g));
  } catch (const std::exception& e) {
    fail(origin, "", e.what());
  }
}

AcbmManifold<Polynomial> load_manifold(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifoldFileError(origin + ": invalid JSON: " + e.what());
  }
  return parse_manifold(doc, origin);
}

AcbmManifold<Polynomial> load_manifold_file(const std::string& path) {
  if (path == "-") return load_manifold(std::cin, "<stdin>");
  std::ifstream in(path);
  if (!in) throw ManifoldFileError(path + ": cannot open file");
  return load_manifold(in, path);
}

std::vector<std::string> manifold_parameters(const AcbmManifold<Polynomial>& M) {
  std::vector<std::string> out;
  auto merge = [&out](const Tensor<Polynomial>& t) {
    for (size_t f = 0; f < t.size(); ++f)
      for (const std::string& name : t.component(f).parameters())
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  merge(M.algebra.structure());
  merge(M.phi);
  merge(M.xi);
  merge(M.eta);
  merge(M.metric.g);
  return out;
}

nlohmann::ordered_json manifold_to_json(const AcbmManifold<Polynomial>& M) {
  const int d = M.dimension();
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["dimension"] = d;
  doc["parameters"] = manifold_parameters(M);

  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const Polynomial& c = M.algebra.c(k, i, j);
        if (c.is_zero()) continue;
        entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", c.str()}});
      }
  doc["structure_constants"] = std::move(entries);

  auto matrix = [d](const Tensor<Polynomial>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int r = 0; r < d; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < d; ++c) row.push_back(t(r, c).str());
      rows.push_back(std::move(row));
    }
    return rows;
  };
  auto vector = [d](const Tensor<Polynomial>& t) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int i = 0; i < d; ++i) row.push_back(t(i).str());
    return row;
  };

  doc["phi"] = matrix(M.phi);
  doc["xi"] = vector(M.xi);
  doc["eta"] = vector(M.eta);

  nlohmann::ordered_json grows = nlohmann::ordered_json::array();
  for (int r = 0; r < d; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < d; ++c)
      row.push_back(ring_traits<Polynomial>::to_rational(M.metric.g(r, c)).str());
    grows.push_back(std::move(row));
  }
  doc["g"] = std::move(grows);
  return doc;
}

}  // namespace acbm
