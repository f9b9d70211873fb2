#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soergel/coxeter.hpp"
#include "soergel/linalg.hpp"

namespace soergel {

/// A representation of W: one invertible matrix per simple reflection, acting
/// on column vectors. Linear forms are row vectors and w acts on them by
/// l -> l * M_w^-1.
class Representation {
 public:
  /// Validates shapes, invertibility, M_s^2 = 1 and (M_s M_r)^m = 1 for finite m.
  Representation(CoxeterMatrix cm, int dim, std::vector<Matrix> matrices);

  const CoxeterMatrix& coxeter() const { return cm_; }
  int dim() const { return dim_; }
  const Matrix& matrix(int s) const { return m_.at(s); }
  const std::vector<Matrix>& matrices() const { return m_; }
  /// The common field of all entries.
  const TowerField& field() const { return *field_; }

  /// M_w along the canonical word of w.
  Matrix element_matrix(const GroupTable& g, Element w) const;

 private:
  CoxeterMatrix cm_;
  int dim_;
  std::vector<Matrix> m_;
  const TowerField* field_;
};

/// Basis alpha_s, s(alpha_r) = alpha_r + 2cos(pi/m(s,r)) alpha_s.
Representation geometric_rep(const CoxeterMatrix& cm);

/// V' inside V, given by a matrix whose columns form a basis of V'.
class SubRep {
 public:
  SubRep(Representation ambient, Matrix basis);

  const Representation& ambient() const { return ambient_; }
  const Matrix& basis() const { return basis_; }
  int dim() const { return basis_.cols(); }

  bool is_stable() const;
  /// W acts trivially on V/V'.
  bool quotient_trivial() const;
  /// The action on V' in the basis given by the columns. Requires stability.
  Representation restricted() const;
  /// Rows form a basis of the annihilator of V' in V*.
  Matrix annihilator() const;

 private:
  Representation ambient_;
  Matrix basis_;
};

/// V plus d trivial summands, with V as the subrepresentation.
std::pair<Representation, SubRep> direct_sum_trivial(const Representation& rep, int d);

struct ReflectionData {
  std::vector<std::vector<Scalar>> alpha;  // -1 eigenvector per generator
  std::vector<std::vector<Scalar>> x;      // hyperplane equation, x_s(alpha_s) = 2
};

struct ReflectionReport {
  bool ok = false;
  std::vector<int> offending;
  std::optional<ReflectionData> data;
};

ReflectionReport check_reflections(const Representation& rep);

struct RVFReport {
  bool holds = false;
  std::vector<Element> witness;  // two reflections sharing an eigenline, or one non-reflection
  int reflections_checked = 0;
};

RVFReport check_rvf(const Representation& rep, const GroupTable& g);

struct RFReport {
  bool holds = false;
  /// Set for infinite groups when no witness was found inside the truncation.
  bool inconclusive = false;
  bool faithful = true;
  std::vector<Element> witness;
  std::string reason;
  int elements_checked = 0;
};

RFReport check_rf(const Representation& rep, const GroupTable& g);

struct GoodPairReport {
  bool reflections_on_v = false;
  bool reflections_on_vprime = false;
  bool stable = false;
  bool quotient_trivial = false;
  RFReport rf;
  std::vector<std::string> failures;
  bool ok() const { return reflections_on_v && reflections_on_vprime && stable && quotient_trivial; }
};

GoodPairReport check_good_pair(const SubRep& sub, const GroupTable& g);

}  // namespace soergel
