#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "yosp/module.hpp"

namespace yosp {

struct SampleResult {
  Rational u;
  Rational v;
  bool pass = true;
};

struct CheckWitness {
  Rational u;
  Rational v;
  EntryWitness entry;
};

struct CheckReport {
  std::string check;
  bool passed = true;
  /// Degree of the cleared identity in each variable.
  int degree_bound_u = 0;
  int degree_bound_v = 0;
  /// Distinct sample values per variable; certified when it exceeds the bound.
  int grid = 0;
  bool certified = false;
  std::vector<SampleResult> samples;
  std::optional<CheckWitness> witness;
};

/// Throws RelationViolation carrying the witness when the report failed.
void expect_passed(const CheckReport& report);

/// R(u - v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u - v) with cleared denominators,
/// on a grid of at least n_samples pairs.
CheckReport verify_rtt(const ModuleRep& m, int n_samples, std::uint64_t seed, int jobs = 1);

/// T(u - kappa) T^t(u) = c(u) d(u - kappa) d(u) at sample points.
CheckReport verify_central(const ModuleRep& m, int n_samples, std::uint64_t seed = 1);

struct GaussReport {
  Rational u0;
  bool ef_e = false;     // e_12(u0) = -e_23(u0 + 1/2)
  bool ef_f = false;     // f_21(u0) = f_32(u0 + 1/2)
  bool hoht = false;     // h_1(u0) h_3(u0 + 1/2) = h_2(u0) h_2(u0 + 1/2)
  bool cu = false;       // c(u0) = h_1(u0) h_1(u0 + 1)^{-1} h_2(u0 + 1) h_2(u0 + 3/2)
  bool highest = false;  // h_i(u0) xi = lambda_i(u0) xi
  bool passed() const { return ef_e && ef_f && hoht && cu && highest; }
};

/// Gaussian generators at u0 from Schur complements of t(u0).
GaussReport gauss_diagonal_check(const ModuleRep& m, const Rational& u0);

}  // namespace yosp
