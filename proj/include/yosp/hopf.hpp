#pragma once

#include "yosp/module.hpp"

namespace yosp {

/// Module structure on a (x) b through t_ij -> sum_k t_ik (x) t_kj.
ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b);

/// Highest weight read off the top weight vector.
HighestWeight highest_weight_of(const ModuleRep& m);
/// Highest weight of a given vector; NoHighestVector if v is not one.
HighestWeight highest_weight_at(const ModuleRep& m, const Vec& v);

/// Dual module: the anti-automorphism t_ij(u) -> theta_i theta_j t_{i'j'}(-u + 1/2)
/// followed by the super-transpose of operators. Finite modules only.
ModuleRep dual_module(const ModuleRep& m);

/// c(u) computed from the stored matrices via the (1,1) entry of
/// T(u - kappa) T^t(u) on the highest vector.
RatFunc derived_central(const ModuleRep& m);

}  // namespace yosp
