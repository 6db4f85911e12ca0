#include "yosp/osp.hpp"

#include <set>

namespace yosp {

SpMat osp_generator(const ModuleRep& m, int i, int j) {
  const int s = sign_power(index_parity(j) + index_parity(i) * index_parity(j)) * theta(i) * theta(j);
  SpMat f = first_coefficient(m, i, j) -
            first_coefficient(m, conjugate_index(j), conjugate_index(i)) * Rational(s);
  f = f * Rational(sign_power(index_parity(i)), 2);
  prune(f);
  return f;
}

OspAction osp_action(const ModuleRep& m) {
  OspAction out;
  out.F11 = osp_generator(m, 0, 0);
  out.F12 = osp_generator(m, 0, 1);
  out.F21 = osp_generator(m, 1, 0);

  SpMat expected(m.dim(), m.dim());
  for (Index k = 0; k < m.dim(); ++k) expected.insert(k, k) = m.space.weight[static_cast<std::size_t>(k)];
  if (!is_zero(SpMat(out.F11 - expected)))
    throw WeightMismatch("F_11 eigenvalues disagree with the stored weights");
  if (m.truncated()) throw TruncatedInput("osp(1|2) decomposition needs a finite module");

  std::map<Rational, std::vector<Index>> spaces;
  for (Index k = 0; k < m.dim(); ++k) spaces[m.space.weight[static_cast<std::size_t>(k)]].push_back(k);
  const Mat f12 = Mat(out.F12);
  for (const auto& [w, idx] : spaces) {
    if (w < 0) continue;
    const auto above = spaces.find(w + 1);
    const Index upper = above == spaces.end() ? 0 : static_cast<Index>(above->second.size());
    const Index mult = static_cast<Index>(idx.size()) - upper;
    if (mult > 0) out.decomposition[w] = mult;

    Mat block(m.dim(), static_cast<Index>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) block.col(static_cast<Index>(c)) = f12.col(idx[c]);
    const Index kernel = block.cols() - rank(block);
    if (kernel > 0) out.highest_vectors[w] = kernel;
  }
  return out;
}

}  // namespace yosp
