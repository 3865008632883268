#pragma once

#include "bianchi/matrix.hpp"
#include "bianchi/quadint.hpp"

namespace bianchi {

// The explicit homomorphism PSL(2, O_m) -> SO(Q_m; Z): the 4x4 integral
// matrix of the action on the associated quaternary quadratic space,
// divided by det(alpha). Restricted to inputs of determinant +-1, which
// covers every use here. phi_m(-alpha) = phi_m(alpha) by construction
// (all entries are quadratic in the coordinates of alpha).
QMat phi_m(const Mat2O& alpha);

// alpha == +-I with all entries of alpha -+ I divisible by `level` in O_m.
// Either sign is accepted (PSL convention). level must be 2 or 4.
bool is_congruence_level(const Mat2O& alpha, int level);

// Membership in Delta_m:
//   m = 1,2 mod 4: the level-2 principal congruence subgroup;
//   m = 3 mod 4:   level 2 and additionally b1 = c1 mod 2, where the
//                  off-diagonal entries are 2b0+2b1*omega, 2c0+2c1*omega.
// The extra parity is invariant under the global sign, so this is
// well defined on PSL classes.
bool in_delta_m(const Mat2O& alpha);

}  // namespace bianchi
