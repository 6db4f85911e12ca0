#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "yosp/rational_function.hpp"
#include "yosp/super_linalg.hpp"

namespace yosp {

enum class FactorKind { SmallVerma, Elementary, Vector, Dual };

std::string to_string(FactorKind kind);
FactorKind parse_factor_kind(const std::string& text);

/// One tensor factor of a module: its parameters and truncation depth.
struct Factor {
  FactorKind kind = FactorKind::Elementary;
  Rational alpha;
  Rational beta;
  std::optional<int> depth;
};

/// (lambda_1, lambda_2, lambda_3), each equal to 1 at u = infinity.
struct HighestWeight {
  RatFunc l1;
  RatFunc l2;
  RatFunc l3;

  /// lambda_1(u) lambda_3(u + 1/2) == lambda_2(u) lambda_2(u + 1/2)
  bool consistent() const;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
};

HighestWeight operator*(const HighestWeight& a, const HighestWeight& b);

/// A representation: T_ij(u) = d(u) t_ij(u) as matrix polynomials.
struct ModuleRep {
  GradedSpace space;
  UniPoly denom;
  std::array<OperatorPoly, 9> T;
  RatFunc c;
  Index highest_index = 0;
  std::vector<Factor> factors;

  Index dim() const { return space.dim(); }
  const OperatorPoly& op(int i, int j) const { return T[static_cast<std::size_t>(3 * i + j)]; }
  OperatorPoly& op(int i, int j) { return T[static_cast<std::size_t>(3 * i + j)]; }
  bool truncated() const;
  /// Smallest truncation depth among the factors.
  std::optional<int> depth() const;
  /// Basis vectors at distance >= margin from every truncation boundary.
  std::vector<bool> interior(int margin = 2) const;
  std::vector<Index> interior_indices(int margin = 2) const;
};

/// Coefficient t_ij^(1) of u^{-1} in t_ij(u).
SpMat first_coefficient(const ModuleRep& m, int i, int j);

ModuleRep build_small_verma(const Rational& alpha, const Rational& beta, int depth);
ModuleRep build_elementary(const Rational& alpha, const Rational& beta,
                           std::optional<int> depth = std::nullopt);
ModuleRep vector_representation();

/// Fills T_22, T_13, T_23, T_31, T_32, T_33 from T_11, T_12, T_21 and
/// spot-checks the result.
ModuleRep reconstruct_full_T(ModuleRep partial);

HighestWeight elementary_highest_weight(const Rational& alpha, const Rational& beta);
RatFunc elementary_central(const Rational& alpha, const Rational& beta);

/// t_ij(u) -> f(u) t_ij(u); f must be finite and equal to 1 at infinity.
ModuleRep apply_twist(const ModuleRep& m, const RatFunc& f);
/// t_ij(u) -> t_ij(u + a)
ModuleRep apply_shift(const ModuleRep& m, const Rational& a);

/// Mismatch between the two sides of a matrix identity.
struct EntryWitness {
  int i = 0;
  int j = 0;
  Index row = 0;
  Index col = 0;
  Rational lhs;
  Rational rhs;
};

/// Checks T(u - kappa) T^t(u) = c(u) d(u - kappa) d(u) on interior columns.
std::optional<EntryWitness> central_defect(const ModuleRep& m, const Rational& u);

/// Restricts a module to the span of the given basis positions, which must be
/// invariant under every coefficient (unchecked).
ModuleRep compress(const ModuleRep& m, const std::vector<Index>& keep);

}  // namespace yosp
