#include "yosp/polynomial.hpp"

#include <map>
#include <sstream>

#include "yosp/rational_function.hpp"

namespace yosp {

namespace {

std::string power(char var, int k) {
  std::string s(1, var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

// Linear factor (u - r) as text: "u", "(u-1)", "(u+3/2)".
std::string linear_factor(const Rational& r, char var) {
  if (r == 0) return std::string(1, var);
  std::string s = "(";
  s += var;
  s += r > 0 ? "-" : "+";
  s += to_string(r > 0 ? r : Rational(-r));
  return s + ")";
}

std::vector<Integer> prime_factors(Integer n) {
  std::vector<Integer> primes;
  if (n < 0) n = -n;
  for (Integer p = 2; p * p <= n && p < 2000000; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  Integer rest = n < 0 ? Integer(-n) : n;
  for (const Integer& p : prime_factors(rest)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    Rational c = p.coefficient(k);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (k == 0) {
      out << to_string(c);
    } else {
      if (c != 1) out << to_string(c) << "*";
      out << power(var, k);
    }
    first = false;
  }
  return out.str();
}

std::pair<std::vector<Rational>, UniPoly> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly rest = monic(p);

  while (rest.degree() > 0 && rest.coefficient(0) == 0) {
    roots.push_back(0);
    rest = divmod(rest, UniPoly::variable()).first;
  }
  if (rest.degree() > 0) {
    Integer lcm = 1;
    for (const Rational& c : rest.coefficients()) {
      const Integer d = denominator_of(c);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    const Integer a0 = numerator_of(rest.coefficient(0) * Rational(lcm));
    const Integer am = lcm;
    const auto nums = divisors(a0);
    const auto dens = divisors(am);
    std::vector<Rational> candidates;
    for (const Integer& q : dens)
      for (const Integer& pn : nums) {
        candidates.emplace_back(pn, q);
        candidates.emplace_back(-pn, q);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Rational& r : candidates) {
      while (rest.degree() > 0 && rest(r) == 0) {
        roots.push_back(r);
        rest = divmod(rest, UniPoly::linear(-r)).first;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return {roots, rest};
}

std::string to_factored_string(const UniPoly& p, char var) {
  if (p.degree() <= 0) return to_string(p, var);
  const auto [roots, rest] = rational_roots(p);
  std::map<Rational, int> mult;
  for (const Rational& r : roots) ++mult[r];
  std::string s;
  if (p.leading() != 1) s += to_string(p.leading()) + "*";
  for (const auto& [r, k] : mult) {
    s += linear_factor(r, var);
    if (k > 1) s += "^" + std::to_string(k);
  }
  if (rest.degree() > 0) s += "(" + to_string(rest, var) + ")";
  return s;
}

std::string to_string(const RatFunc& f, char var) {
  if (f.den() == UniPoly(1)) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

std::string to_factored_string(const RatFunc& f, char var) {
  const std::string num = to_factored_string(f.num(), var);
  if (f.den() == UniPoly(1)) return num;
  const auto [roots, rest] = rational_roots(f.den());
  std::map<Rational, int> mult;
  for (const Rational& r : roots) ++mult[r];
  std::string den = to_factored_string(f.den(), var);
  if (mult.size() + (rest.degree() > 0 ? 1 : 0) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace yosp
