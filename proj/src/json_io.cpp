#include "soergel/json_io.hpp"

#include <fstream>

namespace soergel {

namespace {

std::string as_text(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError(std::string("expected a string or integer for ") + what);
}

Rational rational_from(const json& j, const char* what) {
  try {
    return parse_rational(as_text(j, what));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad rational in ") + what + ": " + e.what());
  }
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

json laurent_to_json(const LaurentPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out["v^" + std::to_string(e)] = to_string(c);
  return out;
}

LaurentPoly laurent_from_json(const json& j) {
  if (!j.is_object()) throw InputError("Laurent polynomial must be an object");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) {
    if (key.rfind("v^", 0) != 0) throw InputError("bad Laurent key " + key);
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(key.substr(2), &used);
      if (used != key.size() - 2) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("bad Laurent exponent in " + key);
    }
    Rational c = rational_from(value, "Laurent coefficient");
    if (c.get_den() != 1) throw InputError("Laurent coefficients must be integers");
    p += LaurentPoly::monomial(c.get_num(), e);
  }
  return p;
}

json field_to_json(const TowerField& f) {
  json poly = json::array();
  for (const auto& c : f.minimal_poly()) poly.push_back(to_string(c));
  return {{"minimal_poly", poly}, {"interval", {to_string(f.lower()), to_string(f.upper())}}};
}

const TowerField& field_from_json(const json& j) {
  const json& poly = member(j, "minimal_poly");
  const json& interval = member(j, "interval");
  if (!poly.is_array() || !interval.is_array() || interval.size() != 2)
    throw InputError("field spec needs a coefficient list and a two-point interval");
  upoly::Poly p;
  for (const auto& c : poly) p.push_back(rational_from(c, "minimal_poly"));
  try {
    return TowerField::make(p, rational_from(interval[0], "interval"), rational_from(interval[1], "interval"));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid field spec: ") + e.what());
  }
}

json scalar_to_json(const Scalar& x) {
  if (x.is_rational()) return to_string(x.rational_value());
  json out = json::array();
  for (const auto& c : x.coeffs()) out.push_back(to_string(c));
  return out;
}

Scalar scalar_from_json(const json& j, const TowerField& f) {
  std::vector<std::string> parts;
  if (j.is_array()) {
    for (const auto& c : j) parts.push_back(as_text(c, "field element"));
  } else {
    parts.push_back(as_text(j, "field element"));
  }
  try {
    return parse_field_element(f, parts);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad field element: ") + e.what());
  }
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    out.push_back(row);
  }
  return out;
}

Matrix matrix_from_json(const json& j, const TowerField& f, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw InputError("matrix has the wrong number of rows");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw InputError("matrix row has the wrong length");
    for (int c = 0; c < cols; ++c) m(i, c) = scalar_from_json(j[i][c], f);
  }
  return m;
}

json coxeter_to_json(const CoxeterMatrix& cm) {
  json m = json::array();
  for (const auto& row : cm.entries()) {
    json r = json::array();
    for (int x : row) x == kInfinity ? r.push_back("inf") : r.push_back(x);
    m.push_back(r);
  }
  return {{"labels", cm.labels()}, {"m", m}};
}

CoxeterMatrix coxeter_from_json(const json& j) {
  const json& labels = member(j, "labels");
  const json& m = member(j, "m");
  if (!labels.is_array() || !m.is_array()) throw InputError("labels and m must be arrays");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) throw InputError("labels must be strings");
    names.push_back(l.get<std::string>());
  }
  std::vector<std::vector<int>> entries;
  for (const auto& row : m) {
    if (!row.is_array()) throw InputError("m must be a list of rows");
    std::vector<int> r;
    for (const auto& x : row) {
      if (x.is_string() && x.get<std::string>() == "inf")
        r.push_back(kInfinity);
      else if (x.is_number_integer())
        r.push_back(x.get<int>());
      else
        throw InputError("Coxeter matrix entries are integers or \"inf\"");
    }
    entries.push_back(std::move(r));
  }
  try {
    return CoxeterMatrix(std::move(names), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid Coxeter matrix: ") + e.what());
  }
}

RepresentationFile representation_from_json(const json& j, const std::optional<CoxeterMatrix>& cm) {
  std::optional<CoxeterMatrix> system = cm;
  if (j.contains("coxeter")) {
    CoxeterMatrix own = coxeter_from_json(j.at("coxeter"));
    if (system && !(*system == own)) throw InputError("representation file disagrees with the Coxeter system");
    system = std::move(own);
  }
  if (!system) throw InputError("no Coxeter system given for the representation");
  const TowerField& f = j.contains("field") ? field_from_json(j.at("field")) : TowerField::rationals();
  const json& dim_j = member(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<int>() < 0) throw InputError("dim must be a nonnegative integer");
  const int dim = dim_j.get<int>();
  const json& mats = member(j, "matrices");
  std::vector<Matrix> matrices;
  for (const auto& label : system->labels()) {
    if (!mats.contains(label)) throw InputError("no matrix for generator " + label);
    matrices.push_back(matrix_from_json(mats.at(label), f, dim, dim));
  }
  std::optional<Representation> rep;
  try {
    rep.emplace(*system, dim, std::move(matrices));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid representation: ") + e.what());
  }
  RepresentationFile out{std::move(*rep), std::nullopt};
  if (j.contains("subspace")) {
    const json& sub = j.at("subspace");
    if (!sub.is_array()) throw InputError("subspace must be a list of vectors");
    Matrix rows = matrix_from_json(sub, f, static_cast<int>(sub.size()), dim);
    out.subspace = rows.transpose();
  }
  return out;
}

json representation_to_json(const Representation& rep, const Matrix* subspace) {
  json mats = json::object();
  for (int s = 0; s < rep.coxeter().rank(); ++s) mats[rep.coxeter().labels()[s]] = matrix_to_json(rep.matrix(s));
  json out = {{"coxeter", coxeter_to_json(rep.coxeter())},
              {"field", field_to_json(rep.field())},
              {"dim", rep.dim()},
              {"matrices", mats}};
  if (subspace != nullptr) out["subspace"] = matrix_to_json(subspace->transpose());
  return out;
}

}  // namespace soergel
