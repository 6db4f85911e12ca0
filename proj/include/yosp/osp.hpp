#pragma once

#include <map>

#include "yosp/module.hpp"

namespace yosp {

/// Images of the osp(1|2) generators and the multiplicities of V(mu).
struct OspAction {
  SpMat F11;
  SpMat F12;
  SpMat F21;
  /// mu -> multiplicity of V(mu), from dim W_mu - dim W_{mu+1}.
  std::map<Rational, Index> decomposition;
  /// mu -> dim of the kernel of F12 on W_mu, an independent count.
  std::map<Rational, Index> highest_vectors;
};

/// F_ij = 1/2 (t_ij^(1) - t_{j'i'}^(1) (-1)^{|j| + |i||j|} theta_i theta_j) (-1)^{|i|}.
SpMat osp_generator(const ModuleRep& m, int i, int j);

/// Throws WeightMismatch if F_11 is not diagonal with the stored weights.
OspAction osp_action(const ModuleRep& m);

}  // namespace yosp
