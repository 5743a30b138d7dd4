#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "acbm/structure.hpp"

namespace acbm {

// Raised for any defect in a manifold description: malformed JSON, missing or
// ill-typed fields, out-of-range indices, unparseable values. The message
// names the originating stream and the field path of the offending value.
class ManifoldFileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The on-disk description is a JSON object:
//
//   {
//     "schema_version": 1,
//     "dimension": 3,
//     "parameters": ["a", "b"],
//     "structure_constants": [{"i": 0, "j": 1, "k": 1, "value": "-b"}, ...],
//     "phi": [["0", "0", "0"], ["0", "0", "-1"], ["0", "1", "0"]],
//     "xi":  ["1", "0", "0"],
//     "eta": ["1", "0", "0"],
//     "g":   [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "-1"]]
//   }
//
// Structure-constant entries give the e_k-coefficient of [e_i, e_j] for
// i < j; omitted pairs are zero and the antisymmetric completion is implied.
// phi rows are indexed by the output slot: phi[k][j] is the e_k-component of
// phi(e_j). All values are exact strings: polynomial strings over the
// declared parameters, except g whose entries must be rational constants.
// Loading validates shapes, indices, and value syntax; it does not check the
// structure axioms — `validate_structure` does that on the loaded manifold.
AcbmManifold<Polynomial> parse_manifold(const nlohmann::json& doc, const std::string& origin);

// Reads and parses one JSON document from the stream. `origin` names the
// stream in diagnostics (a file path, or "<stdin>").
AcbmManifold<Polynomial> load_manifold(std::istream& in, const std::string& origin);

// Opens `path` ("-" means standard input) and loads the manifold from it.
AcbmManifold<Polynomial> load_manifold_file(const std::string& path);

// The parameter names appearing across the manifold's components, in
// first-seen component order. A manifold loaded from a file reproduces the
// file's declared list.
std::vector<std::string> manifold_parameters(const AcbmManifold<Polynomial>& M);

// Serializes the manifold in the schema above: keys in schema order, only
// the nonzero i < j structure constants, entries sorted by (i, j, k),
// canonical polynomial strings. Inverse of parse_manifold up to zero entries.
nlohmann::ordered_json manifold_to_json(const AcbmManifold<Polynomial>& M);

}  // namespace acbm
