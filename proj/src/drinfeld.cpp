#include "yosp/drinfeld.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "yosp/linalg.hpp"

namespace yosp {

namespace {

// Monic P of the given degree with P(u + 1) D(u) = P(u) N(u), if any.
std::optional<UniPoly> solve_for_p(const UniPoly& num, const UniPoly& den, int degree) {
  // Unknowns p_0 .. p_{degree-1}; the leading coefficient is 1.
  const int eqs = degree + std::max(num.degree(), den.degree()) + 1;
  Mat a = Mat::Zero(eqs, degree + 1);
  for (int k = 0; k <= degree; ++k) {
    const UniPoly basis = UniPoly::monomial(k);
    const UniPoly lhs = shift(basis, Rational(1)) * den - basis * num;
    for (int e = 0; e <= lhs.degree(); ++e) a(e, k) = lhs.coefficient(e);
  }
  // Move the known column (k = degree) to the right-hand side.
  Mat aug(eqs, degree + 1);
  aug.leftCols(degree) = a.leftCols(degree);
  aug.col(degree) = -a.col(degree);
  const auto e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == degree) return std::nullopt;
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs.back() = 1;
  for (Index r = 0; r < e.rank(); ++r) coeffs[static_cast<std::size_t>(e.pivots[static_cast<std::size_t>(r)])] = e.reduced(r, degree);
  UniPoly p(std::move(coeffs));
  if (shift(p, Rational(1)) * den != p * num) return std::nullopt;
  return p;
}

}  // namespace

std::string DrinfeldPoly::to_string() const { return "P(u) = " + to_factored_string(P); }

bool sorted_matching_exists(std::vector<Rational> num_roots, std::vector<Rational> den_roots) {
  if (num_roots.size() != den_roots.size()) return false;
  std::sort(num_roots.begin(), num_roots.end());
  std::sort(den_roots.begin(), den_roots.end());
  for (std::size_t i = 0; i < num_roots.size(); ++i)
    if (!is_nonnegative_integer(den_roots[i] - num_roots[i])) return false;
  return true;
}

bool any_matching_exists(const std::vector<Rational>& num_roots,
                         const std::vector<Rational>& den_roots) {
  if (num_roots.size() != den_roots.size()) return false;
  std::vector<std::size_t> perm(den_roots.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i)
      ok = is_nonnegative_integer(den_roots[perm[i]] - num_roots[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

DrinfeldPoly drinfeld_polynomial(const HighestWeight& hw) {
  const RatFunc mu = hw.l2 / hw.l1;
  const UniPoly& num = mu.num();
  const UniPoly& den = mu.den();
  if (num.degree() != den.degree() || num.leading() != 1)
    throw NotDominant("lambda_2 / lambda_1 is not a ratio of monic polynomials of equal degree");
  if (num.degree() == 0) return {UniPoly(1), {}};

  const auto [nr, nrest] = rational_roots(num);
  const auto [dr, drest] = rational_roots(den);
  if (nrest.degree() > 0 || drest.degree() > 0) {
    // No rational splitting; P is still determined by a linear system.
    const Rational k = num.coefficient(num.degree() - 1) - den.coefficient(den.degree() - 1);
    if (!is_nonnegative_integer(k)) throw NotDominant("degree of P would not be a natural number");
    if (auto p = solve_for_p(num, den, static_cast<int>(k))) return {*p, {}};
    throw NotDominant("no polynomial P satisfies P(u+1)/P(u) = lambda_2/lambda_1");
  }

  std::map<Rational, std::pair<std::vector<Rational>, std::vector<Rational>>> cosets;
  for (const Rational& r : nr) cosets[fractional_part(r)].first.push_back(r);
  for (const Rational& s : dr) cosets[fractional_part(s)].second.push_back(s);

  DrinfeldPoly out{UniPoly(1), {}};
  for (auto& [key, roots] : cosets) {
    auto& [rs, ss] = roots;
    if (!sorted_matching_exists(rs, ss))
      throw NotDominant("roots in the coset " + key.str() + " + Z cannot be matched");
    std::sort(rs.begin(), rs.end());
    std::sort(ss.begin(), ss.end());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      // (u - s)(u - s + 1)...(u - r - 1): P(u+1)/P(u) contributes (u - r)/(u - s).
      for (Rational t = 0; t < ss[i] - rs[i]; t += 1) {
        const Rational root = ss[i] - t;
        out.P = out.P * UniPoly::linear(-root);
        out.roots.push_back(root);
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

bool classify_finite_dim(const HighestWeight& hw) {
  try {
    drinfeld_polynomial(hw);
    return true;
  } catch (const NotDominant&) {
    return false;
  }
}

}  // namespace yosp
