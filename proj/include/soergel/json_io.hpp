#pragma once

#include <filesystem>
#include <optional>

#include <json.hpp>

#include "soergel/laurent.hpp"
#include "soergel/reps.hpp"

namespace soergel {

using json = nlohmann::ordered_json;

/// Malformed input files: the CLI maps these to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::filesystem::path& path);

/// {"v^k": "coefficient"} with signed integer exponents, ascending.
json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

/// {"minimal_poly": [c0, c1, ...], "interval": [lo, hi]}, coefficients as rational strings.
json field_to_json(const TowerField& f);
const TowerField& field_from_json(const json& j);

/// A rational string, or a list of rational strings (coefficients in the field generator).
json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const json& j, const TowerField& f);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const TowerField& f, int rows, int cols);

/// {"labels": [...], "m": [[1, 3], [3, 1]]}; "inf" for infinite order.
json coxeter_to_json(const CoxeterMatrix& cm);
CoxeterMatrix coxeter_from_json(const json& j);

struct RepresentationFile {
  Representation rep;
  /// Columns span V'; the file lists one basis vector of V' per entry.
  std::optional<Matrix> subspace;
};

/// {"field": ..., "dim": n, "matrices": {"s": [[...]], ...}, "subspace": [[...]],
///  "coxeter": {...}}. `coxeter` is optional when `cm` is supplied.
RepresentationFile representation_from_json(const json& j, const std::optional<CoxeterMatrix>& cm);
json representation_to_json(const Representation& rep, const Matrix* subspace = nullptr);

}  // namespace soergel
