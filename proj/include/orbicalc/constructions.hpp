#pragma once

#include <vector>

#include "orbicalc/group.hpp"

namespace orbicalc {

FiniteGroup cyclic_group(int n);

/// <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>, elements a^i b^j (index i * n + j).
/// Needs r^n = 1 and r t = t (mod m); the FiniteGroup constructor re-validates.
FiniteGroup metacyclic_group(int m, int n, int t, int r);

/// N x| Q where q acts on N through the automorphism `action[k]` for q = q_gens[k].
/// Element (x, q) has index x * |Q| + q and (x1, q1)(x2, q2) = (x1 theta_q1(x2), q1 q2).
FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<int>& acting_gens, const std::vector<ElementMap>& action);

/// Left-regular permutations of the given elements (degree |G|).
std::vector<Permutation> regular_permutations(const FiniteGroup& g, const std::vector<int>& elements);

}  // namespace orbicalc
