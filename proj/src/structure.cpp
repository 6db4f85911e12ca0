#include "yosp/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace yosp {

namespace {

std::map<Rational, std::vector<Index>> weight_spaces(const GradedSpace& s) {
  std::map<Rational, std::vector<Index>> ws;
  for (Index k = 0; k < s.dim(); ++k) ws[s.weight[static_cast<std::size_t>(k)]].push_back(k);
  return ws;
}

std::vector<SpMat> all_coefficients(const ModuleRep& m) {
  std::vector<SpMat> ops;
  for (const auto& t : m.T)
    for (const auto& c : t.coefficients())
      if (c.nonZeros() > 0) ops.push_back(c);
  return ops;
}

// Reduced echelon basis of the column span, as columns.
Mat column_echelon(const Mat& cols) {
  const auto e = rref<Rational>(cols.transpose());
  return e.reduced.transpose();
}

bool weight_homogeneous(const ModuleRep& m, const Vec& v, Rational& weight) {
  bool found = false;
  for (Index k = 0; k < v.size(); ++k) {
    if (v(k) == 0) continue;
    const Rational& w = m.space.weight[static_cast<std::size_t>(k)];
    if (!found) {
      weight = w;
      found = true;
    } else if (w != weight) {
      return false;
    }
  }
  return found;
}

std::optional<Rational> min_of(const std::vector<Rational>& xs) {
  if (xs.empty()) return std::nullopt;
  return *std::min_element(xs.begin(), xs.end());
}

}  // namespace

Subspace singular_vectors(const ModuleRep& m) {
  std::vector<SpMat> raising;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    for (const auto& c : m.op(i, j).coefficients()) raising.push_back(c);

  std::vector<Vec> found;
  for (const auto& [w, idx] : weight_spaces(m.space)) {
    const auto k = static_cast<Index>(idx.size());
    std::vector<Index> rows;
    std::map<Index, Index> row_of;
    std::vector<std::vector<std::tuple<Index, Index, Rational>>> entries;
    std::vector<std::tuple<Index, Index, Rational>> trips;
    Index block = 0;
    for (const auto& c : raising) {
      for (Index col = 0; col < k; ++col)
        for (SpMat::InnerIterator it(c, idx[static_cast<std::size_t>(col)]); it; ++it)
          trips.emplace_back(block * m.dim() + it.row(), col, it.value());
      ++block;
    }
    for (const auto& [r, c, v] : trips)
      if (!row_of.count(r)) row_of.emplace(r, static_cast<Index>(row_of.size()));
    Mat a = Mat::Zero(static_cast<Index>(row_of.size()), k);
    for (const auto& [r, c, v] : trips) a(row_of[r], c) += v;
    const Mat ns = nullspace(a);
    for (Index c = 0; c < ns.cols(); ++c) {
      Vec v = Vec::Zero(m.dim());
      for (Index r = 0; r < k; ++r) v(idx[static_cast<std::size_t>(r)]) = ns(r, c);
      found.push_back(std::move(v));
    }
  }
  // Highest weight first.
  std::reverse(found.begin(), found.end());
  Subspace s{Mat::Zero(m.dim(), static_cast<Index>(found.size()))};
  for (std::size_t c = 0; c < found.size(); ++c) s.basis.col(static_cast<Index>(c)) = found[c];
  return s;
}

Subspace cyclic_span(const ModuleRep& m, const Vec& v) {
  if (is_zero(v)) throw std::invalid_argument("cyclic span of the zero vector");
  const auto ops = all_coefficients(m);
  EchelonBasis<Rational> echelon(m.dim());
  std::vector<Vec> kept;
  std::deque<Vec> queue{v};
  while (!queue.empty()) {
    Vec x = std::move(queue.front());
    queue.pop_front();
    if (!echelon.insert(x)) continue;
    for (const auto& op : ops) {
      Vec y = op * x;
      if (!is_zero(y)) queue.push_back(std::move(y));
    }
    kept.push_back(std::move(x));
  }
  Subspace s{Mat::Zero(m.dim(), static_cast<Index>(kept.size()))};
  for (std::size_t c = 0; c < kept.size(); ++c) s.basis.col(static_cast<Index>(c)) = kept[c];
  return s;
}

ModuleRep quotient_module(const ModuleRep& m, const Subspace& k) {
  const Index n = m.dim();
  const auto e = rref<Rational>(k.basis.transpose());
  if (e.rank() != k.dim()) throw std::invalid_argument("subspace basis is not independent");
  // reduce(x) = x - sum_i x[p_i] r_i kills the pivot coordinates.
  Mat reduce = Mat::Identity(n, n);
  for (Index i = 0; i < e.rank(); ++i)
    reduce.col(e.pivots[static_cast<std::size_t>(i)]) -= e.reduced.row(i).transpose();
  for (const auto& op : all_coefficients(m))
    if (!is_zero(Mat(reduce * (op * k.basis))))
      throw NotInvariant("subspace is not stable under the action");

  std::vector<bool> pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> keep;
  for (Index j = 0; j < n; ++j)
    if (!pivot[static_cast<std::size_t>(j)]) keep.push_back(j);
  const auto q = static_cast<Index>(keep.size());
  Mat sel = Mat::Zero(q, n);
  for (Index i = 0; i < q; ++i) sel(i, keep[static_cast<std::size_t>(i)]) = 1;
  const SpMat left = to_sparse<Rational>(Mat(sel * reduce));
  const SpMat right = to_sparse<Rational>(Mat(sel.transpose()));

  ModuleRep out = compress(m, keep);
  for (std::size_t t = 0; t < 9; ++t)
    out.T[t] = m.T[t].map([&](const SpMat& a) { return SpMat(left * a * right); }, q, q);
  return out;
}

ModuleRep submodule(const ModuleRep& m, const Subspace& k) {
  const Mat b = column_echelon(k.basis);
  if (b.cols() != k.dim()) throw std::invalid_argument("subspace basis is not independent");
  const auto e = rref<Rational>(Mat(b.transpose()));
  ModuleRep out;
  for (Index c = 0; c < b.cols(); ++c) {
    Rational w;
    if (!weight_homogeneous(m, b.col(c), w))
      throw NotInvariant("subspace has no weight basis, so it is not a submodule");
    const Index p = e.pivots[static_cast<std::size_t>(c)];
    out.space.parity.push_back(m.space.parity[static_cast<std::size_t>(p)]);
    out.space.weight.push_back(w);
    out.space.labels.push_back(m.space.labels[static_cast<std::size_t>(p)]);
  }
  out.denom = m.denom;
  out.c = m.c;
  out.factors = m.factors;
  const Index d = b.cols();
  for (std::size_t t = 0; t < 9; ++t) {
    out.T[t] = m.T[t].map(
        [&](const SpMat& a) {
          const Mat ab = a * b;
          Mat x(d, d);
          for (Index r = 0; r < d; ++r) x.row(r) = ab.row(e.pivots[static_cast<std::size_t>(r)]);
          if (!is_zero(Mat(ab - b * x))) throw NotInvariant("subspace is not stable under the action");
          return to_sparse<Rational>(x);
        },
        d, d);
  }
  out.highest_index = 0;
  for (Index i = 1; i < d; ++i)
    if (out.space.weight[static_cast<std::size_t>(i)] >
        out.space.weight[static_cast<std::size_t>(out.highest_index)])
      out.highest_index = i;
  return out;
}

IrreducibilityResult is_irreducible(const ModuleRep& m) {
  if (m.truncated())
    throw TruncatedInput("irreducibility is undecidable on a truncated module");
  IrreducibilityResult res;
  const Subspace sing = singular_vectors(m);
  res.singular_dim = sing.dim();
  Vec xi = Vec::Zero(m.dim());
  xi(m.highest_index) = 1;
  const Subspace span = cyclic_span(m, xi);
  res.cyclic_dim = span.dim();
  if (sing.dim() != 1) {
    res.reason = "singular space has dimension " + std::to_string(sing.dim());
    for (Index c = 0; c < sing.dim(); ++c) {
      const Vec v = sing.basis.col(c);
      if (!is_zero(Vec(v - xi * v(m.highest_index)))) {
        res.witness = v;
        break;
      }
    }
    return res;
  }
  if (span.dim() != m.dim()) {
    res.reason = "highest vector generates a proper submodule of dimension " +
                 std::to_string(span.dim());
    EchelonBasis<Rational> echelon(m.dim());
    for (Index c = 0; c < span.dim(); ++c) echelon.insert(span.basis.col(c));
    for (Index k = 0; k < m.dim(); ++k) {
      Vec e = Vec::Zero(m.dim());
      e(k) = 1;
      if (!echelon.contains(e)) {
        res.witness = e;
        break;
      }
    }
    return res;
  }
  res.irreducible = true;
  res.reason = "one singular direction and the highest vector is cyclic";
  return res;
}

bool check_tensor_criterion(const std::vector<std::pair<Rational, Rational>>& params) {
  const std::size_t k = params.size();
  const Rational half(1, 2);
  for (std::size_t h = 0; h + 1 < k; ++h) {
    const auto& [ah, bh] = params[h];
    std::vector<Rational> ints, halves;
    for (std::size_t i = h; i < k; ++i) {
      const auto& [ai, bi] = params[i];
      for (const Rational& x : {bh - ai, bi - ah}) {
        if (is_nonnegative_integer(x)) ints.push_back(x);
        if (is_nonnegative_integer(x + half)) halves.push_back(x + half);
      }
    }
    const Rational own = bh - ah;
    if (!ints.empty()) {
      std::vector<Rational> both = ints;
      both.insert(both.end(), halves.begin(), halves.end());
      if (!is_nonnegative_integer(own) || own > *min_of(both)) return false;
    } else if (!halves.empty()) {
      if (!is_nonnegative_integer(own + half) || own + half > *min_of(halves)) return false;
    }
  }
  return true;
}

}  // namespace yosp
