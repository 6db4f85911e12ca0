#include "yosp/module.hpp"

#include <functional>
#include <map>

namespace yosp {

namespace {

// Extra levels built beyond a truncation depth so that products of lowering
// and raising operators are exact on the retained basis.
constexpr int kConstructionMargin = 4;

using Label = std::array<int, 2>;

struct SmallVermaBasis {
  std::vector<Label> labels;
  std::map<Label, Index> position;
};

SmallVermaBasis enumerate_basis(int max_level, const std::function<bool(int, int)>& allowed) {
  SmallVermaBasis b;
  for (int p = 0; p <= max_level; ++p)
    for (int r = 0; 2 * r <= p; ++r) {
      const int s = p - r;
      if (!allowed(r, s)) continue;
      b.position[{r, s}] = static_cast<Index>(b.labels.size());
      b.labels.push_back({r, s});
    }
  return b;
}

UniPoly lin(const Rational& a, const Rational& b) { return UniPoly(std::vector<Rational>{b, a}); }

// Matrix polynomial with the given (row, col, polynomial) entries.
OperatorPoly assemble(Index n, int parity,
                      const std::vector<std::tuple<Index, Index, UniPoly>>& entries) {
  int deg = -1;
  for (const auto& e : entries) deg = std::max(deg, std::get<2>(e).degree());
  std::vector<std::vector<Eigen::Triplet<Rational>>> trips(static_cast<std::size_t>(deg + 1));
  for (const auto& [row, col, p] : entries)
    for (int k = 0; k <= p.degree(); ++k)
      if (p.coefficient(k) != 0)
        trips[static_cast<std::size_t>(k)].emplace_back(row, col, p.coefficient(k));
  std::vector<SpMat> coeffs;
  for (auto& t : trips) {
    SpMat m(n, n);
    m.setFromTriplets(t.begin(), t.end());
    coeffs.push_back(std::move(m));
  }
  return OperatorPoly(std::move(coeffs), n, n, parity);
}

// Module with T_11, T_12, T_21 from the closed-form action on xi_rs.
ModuleRep partial_small_verma(const Rational& alpha, const Rational& beta,
                              const SmallVermaBasis& basis) {
  const auto n = static_cast<Index>(basis.labels.size());
  const Rational half(1, 2);
  ModuleRep m;
  for (const auto& [r, s] : basis.labels) {
    m.space.parity.push_back((r + s) % 2);
    m.space.weight.push_back(beta - alpha - r - s);
    m.space.labels.push_back({{r, s}});
  }
  m.denom = UniPoly::linear(alpha - half) * UniPoly::linear(beta);
  m.c = elementary_central(alpha, beta);

  std::vector<std::tuple<Index, Index, UniPoly>> t11, t21, t12;
  auto target = [&](int r, int s) -> std::optional<Index> {
    if (r > s || r < 0 || s < 0) return std::nullopt;
    auto it = basis.position.find({r, s});
    if (it == basis.position.end()) return std::nullopt;
    return it->second;
  };
  for (Index col = 0; col < n; ++col) {
    const int r = basis.labels[static_cast<std::size_t>(col)][0];
    const int s = basis.labels[static_cast<std::size_t>(col)][1];
    const Rational rr(r), ss(s);
    t11.emplace_back(col, col, UniPoly::linear(alpha + rr - half) * UniPoly::linear(alpha + ss));

    const Rational w = 2 * ss - 2 * rr + 1;
    // 2u + 2 alpha + 2r - 1
    const UniPoly odd_factor = lin(2, 2 * alpha + 2 * rr - 1);
    if (auto t = target(r, s + 1))
      t21.emplace_back(*t, col,
                       odd_factor * (Rational(sign_power(r + 1) * (s - r + 1)) / (Rational(s + 1) * w)));
    if (auto t = target(r + 1, s))
      t21.emplace_back(*t, col, UniPoly::linear(alpha + ss) * (Rational(2) / w));
    if (auto t = target(r - 1, s))
      t12.emplace_back(*t, col,
                       UniPoly::linear(alpha + ss) *
                           (-rr * (ss - rr + 1) * (2 * alpha - 2 * beta + 2 * rr - 3) / (2 * w)));
    if (auto t = target(r, s - 1))
      t12.emplace_back(*t, col,
                       odd_factor * (Rational(sign_power(r + 1)) * ss * (2 * ss + 1) *
                                     (alpha - beta + ss - 1) / (4 * w)));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.op(i, j) = OperatorPoly(n, n, generator_parity(i, j));
  m.op(0, 0) = assemble(n, 0, t11);
  m.op(1, 0) = assemble(n, 1, t21);
  m.op(0, 1) = assemble(n, 1, t12);
  m.highest_index = 0;
  return m;
}

void fill_remaining(ModuleRep& m) {
  const int deg = m.denom.degree();
  const OperatorPoly& T11 = m.op(0, 0);
  const OperatorPoly& T12 = m.op(0, 1);
  const OperatorPoly& T21 = m.op(1, 0);
  const SpMat t12 = T12.coefficient(deg - 1);
  const SpMat t21 = T21.coefficient(deg - 1);
  const SpMat t23 = -t12;

  m.op(2, 0) = super_bracket(T21, t21, 1);
  m.op(1, 1) = T11 - super_bracket(t12, 1, T21);
  m.op(2, 1) = super_bracket(t21, 1, m.op(1, 1)) + T21;
  m.op(2, 2) = super_bracket(t23, 1, m.op(2, 1)) + m.op(1, 1);
  m.op(1, 2) = -super_bracket(t23, 1, m.op(2, 2));
  m.op(0, 2) = -super_bracket(T12, t12, 1);
}

void check_reconstruction(const ModuleRep& m) {
  for (const Rational& u : {Rational(37, 3), Rational(-53, 7)}) {
    if (auto w = central_defect(m, u))
      throw ReconstructionInconsistent(
          "central relation fails after reconstruction at u = " + u.str() + ", entry (" +
          std::to_string(w->i + 1) + "," + std::to_string(w->j + 1) + ")");
  }
}

ModuleRep small_verma_family(const Rational& alpha, const Rational& beta, int max_level,
                             std::optional<int> depth,
                             const std::function<bool(int, int)>& allowed, FactorKind kind) {
  const auto basis = enumerate_basis(max_level, allowed);
  ModuleRep m = partial_small_verma(alpha, beta, basis);
  fill_remaining(m);
  m.factors = {Factor{kind, alpha, beta, depth}};
  if (depth && *depth < max_level) {
    std::vector<Index> keep;
    for (Index k = 0; k < m.dim(); ++k) {
      const auto& l = m.space.labels[static_cast<std::size_t>(k)][0];
      if (l[0] + l[1] <= *depth) keep.push_back(k);
    }
    m = compress(m, keep);
  }
  check_reconstruction(m);
  return m;
}

}  // namespace

std::string to_string(FactorKind kind) {
  switch (kind) {
    case FactorKind::SmallVerma:
      return "small_verma";
    case FactorKind::Elementary:
      return "elementary";
    case FactorKind::Vector:
      return "vector";
    case FactorKind::Dual:
      return "dual";
  }
  return "elementary";
}

FactorKind parse_factor_kind(const std::string& text) {
  if (text == "small_verma") return FactorKind::SmallVerma;
  if (text == "elementary") return FactorKind::Elementary;
  if (text == "vector") return FactorKind::Vector;
  if (text == "dual") return FactorKind::Dual;
  throw ParseError("unknown factor kind '" + text + "'");
}

bool HighestWeight::consistent() const {
  const Rational half(1, 2);
  return l1 * shift(l3, half) == l2 * shift(l2, half);
}

HighestWeight operator*(const HighestWeight& a, const HighestWeight& b) {
  return {a.l1 * b.l1, a.l2 * b.l2, a.l3 * b.l3};
}

bool ModuleRep::truncated() const {
  for (const auto& f : factors)
    if (f.depth) return true;
  return false;
}

std::optional<int> ModuleRep::depth() const {
  std::optional<int> d;
  for (const auto& f : factors)
    if (f.depth && (!d || *f.depth < *d)) d = f.depth;
  return d;
}

std::vector<bool> ModuleRep::interior(int margin) const {
  std::vector<bool> in(static_cast<std::size_t>(dim()), true);
  for (Index k = 0; k < dim(); ++k) {
    const auto& label = space.labels[static_cast<std::size_t>(k)];
    for (std::size_t f = 0; f < factors.size() && f < label.size(); ++f)
      if (factors[f].depth && label[f][0] + label[f][1] > *factors[f].depth - margin)
        in[static_cast<std::size_t>(k)] = false;
  }
  return in;
}

std::vector<Index> ModuleRep::interior_indices(int margin) const {
  const auto in = interior(margin);
  std::vector<Index> idx;
  for (Index k = 0; k < dim(); ++k)
    if (in[static_cast<std::size_t>(k)]) idx.push_back(k);
  return idx;
}

SpMat first_coefficient(const ModuleRep& m, int i, int j) {
  const int deg = m.denom.degree();
  SpMat t = m.op(i, j).coefficient(deg - 1);
  if (i == j) {
    t -= sparse_identity<Rational>(m.dim()) * m.denom.coefficient(deg - 1);
    prune(t);
  }
  return t;
}

HighestWeight elementary_highest_weight(const Rational& alpha, const Rational& beta) {
  const Rational half(1, 2);
  return {RatFunc(UniPoly::linear(alpha), UniPoly::linear(beta)), RatFunc(1),
          RatFunc(UniPoly::linear(beta - half), UniPoly::linear(alpha - half))};
}

RatFunc elementary_central(const Rational& alpha, const Rational& beta) {
  return RatFunc(UniPoly::linear(alpha) * UniPoly::linear(beta + 1),
                 UniPoly::linear(alpha + 1) * UniPoly::linear(beta));
}

ModuleRep build_small_verma(const Rational& alpha, const Rational& beta, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  return small_verma_family(alpha, beta, depth + kConstructionMargin, depth,
                            [](int, int) { return true; }, FactorKind::SmallVerma);
}

ModuleRep build_elementary(const Rational& alpha, const Rational& beta, std::optional<int> depth) {
  const Rational k = beta - alpha;
  if (is_nonnegative_integer(k)) {
    const int kk = static_cast<int>(k);
    return small_verma_family(alpha, beta, 2 * kk, std::nullopt,
                              [kk](int, int s) { return s <= kk; }, FactorKind::Elementary);
  }
  if (!depth)
    throw MissingDepth("L(" + alpha.str() + "," + beta.str() +
                       ") is infinite-dimensional; a truncation depth is required");
  if (*depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const Rational kh = k + Rational(1, 2);
  if (is_nonnegative_integer(kh)) {
    const int kk = static_cast<int>(kh);
    return small_verma_family(alpha, beta, *depth + kConstructionMargin, depth,
                              [kk](int r, int) { return r <= kk; }, FactorKind::Elementary);
  }
  return small_verma_family(alpha, beta, *depth + kConstructionMargin, depth,
                            [](int, int) { return true; }, FactorKind::Elementary);
}

ModuleRep vector_representation() {
  ModuleRep m;
  m.space.parity = {1, 0, 1};
  m.space.weight = {Rational(1), Rational(0), Rational(-1)};
  m.space.labels = {{{0, 0}}, {{0, 1}}, {{1, 1}}};
  m.denom = UniPoly::variable() * UniPoly::linear(kappa());
  m.c = RatFunc(UniPoly(std::vector<Rational>{-1, 0, 1}), UniPoly::monomial(2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<std::tuple<Index, Index, UniPoly>> entries;
      if (i == j)
        for (Index k = 0; k < 3; ++k) entries.emplace_back(k, k, m.denom);
      // (u + kappa)(-1)^{|i|} e_ij
      entries.emplace_back(i, j, UniPoly::linear(kappa()) * Rational(sign_power(index_parity(i))));
      // -u (-1)^{|i||j|} theta_i theta_j e_{j'i'}
      entries.emplace_back(conjugate_index(j), conjugate_index(i),
                           UniPoly::variable() *
                               Rational(-sign_power(index_parity(i) * index_parity(j)) *
                                        theta(i) * theta(j)));
      // Duplicate positions are summed by setFromTriplets.
      m.op(i, j) = assemble(3, generator_parity(i, j), entries);
    }
  m.highest_index = 0;
  m.factors = {Factor{FactorKind::Vector, Rational(-1), Rational(0), std::nullopt}};
  return m;
}

ModuleRep reconstruct_full_T(ModuleRep partial) {
  fill_remaining(partial);
  check_reconstruction(partial);
  return partial;
}

ModuleRep apply_twist(const ModuleRep& m, const RatFunc& f) {
  if (!f.finite_at_infinity() || f.at_infinity() != 1)
    throw DegreeError("multiplier must be regular at infinity with value 1");
  ModuleRep out = m;
  out.denom = m.denom * f.den();
  for (auto& t : out.T) t = f.num() * t;
  out.c = m.c * shift(f, -kappa()) * f;
  return out;
}

ModuleRep apply_shift(const ModuleRep& m, const Rational& a) {
  ModuleRep out = m;
  out.denom = shift(m.denom, a);
  for (auto& t : out.T) t = compose_affine(t, Rational(1), a);
  out.c = shift(m.c, a);
  for (auto& f : out.factors) {
    f.alpha += a;
    f.beta += a;
  }
  return out;
}

ModuleRep compress(const ModuleRep& m, const std::vector<Index>& keep) {
  const auto k = static_cast<Index>(keep.size());
  SpMat sel(k, m.dim());
  for (Index i = 0; i < k; ++i) sel.insert(i, keep[static_cast<std::size_t>(i)]) = 1;
  const SpMat selt = sel.transpose();
  ModuleRep out;
  for (Index idx : keep) {
    out.space.parity.push_back(m.space.parity[static_cast<std::size_t>(idx)]);
    out.space.weight.push_back(m.space.weight[static_cast<std::size_t>(idx)]);
    out.space.labels.push_back(m.space.labels[static_cast<std::size_t>(idx)]);
  }
  out.denom = m.denom;
  out.c = m.c;
  out.factors = m.factors;
  for (std::size_t t = 0; t < 9; ++t)
    out.T[t] = m.T[t].map([&](const SpMat& a) { return SpMat(sel * a * selt); }, k, k);
  out.highest_index = 0;
  for (Index i = 0; i < k; ++i)
    if (keep[static_cast<std::size_t>(i)] == m.highest_index) out.highest_index = i;
  return out;
}

std::optional<EntryWitness> central_defect(const ModuleRep& m, const Rational& u) {
  const Index n = m.dim();
  const auto cols = m.interior_indices();
  SpMat sel(n, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) sel.insert(cols[k], static_cast<Index>(k)) = 1;

  std::array<SpMat, 9> at_shifted, at_u;
  for (std::size_t t = 0; t < 9; ++t) {
    at_shifted[t] = m.T[t](u - kappa());
    at_u[t] = SpMat(m.T[t](u) * sel);
  }
  const Rational scalar = m.c(u) * m.denom(u - kappa()) * m.denom(u);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      SpMat s(n, static_cast<Index>(cols.size()));
      for (int k = 0; k < 3; ++k) {
        const int sg = sign_power(index_parity(k) * index_parity(j) + index_parity(j)) *
                       theta(k) * theta(j);
        s += SpMat(at_shifted[static_cast<std::size_t>(3 * i + k)] *
                   at_u[static_cast<std::size_t>(3 * conjugate_index(j) + conjugate_index(k))]) *
             Rational(sg);
      }
      const Mat lhs = Mat(s);
      for (Index c = 0; c < lhs.cols(); ++c)
        for (Index r = 0; r < lhs.rows(); ++r) {
          const Rational rhs = (i == j && r == cols[static_cast<std::size_t>(c)]) ? scalar : Rational(0);
          if (lhs(r, c) != rhs) return EntryWitness{i, j, r, cols[static_cast<std::size_t>(c)], lhs(r, c), rhs};
        }
    }
  return std::nullopt;
}

}  // namespace yosp
