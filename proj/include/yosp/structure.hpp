#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yosp/module.hpp"

namespace yosp {

/// Column span of basis inside a module's space; columns are independent.
struct Subspace {
  Mat basis;

  Index dim() const { return basis.cols(); }
  Index ambient_dim() const { return basis.rows(); }
};

/// Common kernel of every u-coefficient of T_12, T_13, T_23, computed weight
/// space by weight space. Basis vectors are weight vectors.
Subspace singular_vectors(const ModuleRep& m);

/// Smallest subspace containing v and stable under all coefficients of all T_ij.
Subspace cyclic_span(const ModuleRep& m, const Vec& v);

/// Action on V/K through the complement spanned by the non-pivot basis vectors.
ModuleRep quotient_module(const ModuleRep& m, const Subspace& k);
/// Action on an invariant subspace K in its reduced echelon basis.
ModuleRep submodule(const ModuleRep& m, const Subspace& k);

struct IrreducibilityResult {
  bool irreducible = false;
  Index singular_dim = 0;
  Index cyclic_dim = 0;
  /// Singular vector other than the highest one, or a vector outside the
  /// cyclic span of the highest vector.
  std::optional<Vec> witness;
  std::string reason;
};

IrreducibilityResult is_irreducible(const ModuleRep& m);

/// Sufficient condition for L(a_1, b_1) (x) ... (x) L(a_k, b_k) to be irreducible.
bool check_tensor_criterion(const std::vector<std::pair<Rational, Rational>>& params);

}  // namespace yosp
