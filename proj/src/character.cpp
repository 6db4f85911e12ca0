#include "yosp/character.hpp"

namespace yosp {

namespace {

// 1 - z^n
UniPoly one_minus_z(int n) { return UniPoly(1) - UniPoly::monomial(n); }

UniPoly verma_denominator() { return one_minus_z(2) * one_minus_z(4); }

}  // namespace

std::vector<Rational> CharacterForm::expand(int terms) const {
  std::vector<Rational> out(static_cast<std::size_t>(terms), Rational(0));
  const Rational d0 = den.coefficient(0);
  for (int k = 0; k < terms; ++k) {
    Rational acc = num.coefficient(k);
    for (int j = 1; j <= k; ++j) acc -= den.coefficient(j) * out[static_cast<std::size_t>(k - j)];
    out[static_cast<std::size_t>(k)] = acc / d0;
  }
  return out;
}

Index WeightCharacter::total() const {
  Index t = 0;
  for (const auto& [w, m] : multiplicity) t += m;
  return t;
}

Index WeightCharacter::coefficient(const Rational& gamma) const {
  const auto it = multiplicity.find(-gamma);
  return it == multiplicity.end() ? 0 : it->second;
}

bool WeightCharacter::matches(const CharacterForm& form, int max_level) const {
  const auto coeffs = form.expand(2 * max_level + 1);
  for (std::size_t n = 0; n < coeffs.size(); ++n)
    if (Rational(coefficient(form.q_shift + Rational(static_cast<int>(n), 2))) != coeffs[n])
      return false;
  // Nothing may sit below the leading exponent.
  for (const auto& [w, m] : multiplicity)
    if (-w < form.q_shift && m > 0) return false;
  return true;
}

WeightCharacter operator*(const WeightCharacter& a, const WeightCharacter& b) {
  WeightCharacter out;
  for (const auto& [wa, ma] : a.multiplicity)
    for (const auto& [wb, mb] : b.multiplicity) out.multiplicity[wa + wb] += ma * mb;
  return out;
}

WeightCharacter character_of(const ModuleRep& m) {
  WeightCharacter ch;
  for (const Rational& w : m.space.weight) ++ch.multiplicity[w];
  if (m.factors.size() == 1 && m.factors.front().kind != FactorKind::Dual)
    ch.closed_form = closed_character(m.factors.front());
  return ch;
}

CharacterForm closed_character(const Factor& f) {
  const Rational k = f.beta - f.alpha;
  const Rational kh = k + Rational(1, 2);
  if (f.kind != FactorKind::SmallVerma && is_nonnegative_integer(k)) {
    const int kk = static_cast<int>(k);
    return {-k, one_minus_z(2 * kk + 2) * one_minus_z(2 * kk + 4), verma_denominator()};
  }
  if (f.kind != FactorKind::SmallVerma && is_nonnegative_integer(kh)) {
    const int kk = static_cast<int>(kh);
    return {-k, one_minus_z(4 * kk + 4), verma_denominator()};
  }
  return {-k, UniPoly(1), verma_denominator()};
}

}  // namespace yosp
