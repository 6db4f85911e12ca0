#pragma once

#include <map>
#include <optional>

#include "yosp/module.hpp"

namespace yosp {

/// q^{q_shift} num(z) / den(z) with z = q^{1/2}; den(0) = 1.
struct CharacterForm {
  Rational q_shift;
  UniPoly num;
  UniPoly den;

  /// Coefficients of z^0 .. z^{terms-1} after the shift.
  std::vector<Rational> expand(int terms) const;
};

/// sum over weights gamma of dim V_{-gamma} q^gamma, kept as weight -> multiplicity.
struct WeightCharacter {
  std::map<Rational, Index> multiplicity;
  std::optional<CharacterForm> closed_form;

  Index total() const;
  /// Coefficient of q^gamma.
  Index coefficient(const Rational& gamma) const;
  /// Compares coefficients of q^gamma for gamma <= q_shift + max_level with the closed form.
  bool matches(const CharacterForm& form, int max_level) const;

  friend WeightCharacter operator*(const WeightCharacter& a, const WeightCharacter& b);
};

WeightCharacter character_of(const ModuleRep& m);

/// Closed forms for a single factor: elementary with beta - alpha in Z_+,
/// with beta - alpha + 1/2 in Z_+, and the small Verma module otherwise.
CharacterForm closed_character(const Factor& f);

}  // namespace yosp
