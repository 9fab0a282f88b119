#pragma once

#include <cstdint>
#include <vector>

#include "orbicalc/real_rep.hpp"

namespace orbicalc {

/// A stable vector bundle over BG: one integer per real irrep (RealIrrepTable order).
struct StableBundle {
  std::vector<long> coords;
  friend bool operator==(const StableBundle&, const StableBundle&) = default;
};

/// A coarsely stable bundle: an integer trivial part plus nonnegative
/// multiplicities of the nontrivial real irreps (entries 1..n-1).
struct CoarseStableBundle {
  long trivial_part = 0;
  std::vector<long> coords;
};

StableBundle operator+(const StableBundle& a, const StableBundle& b);

long virtual_rank(const RealIrrepTable& t, const StableBundle& b);

/// Irreps contributing a Z/2 factor to the automorphism group: every R-type irrep.
std::vector<int> aut_group(const RealIrrepTable& t, const StableBundle& b);

/// The trivial irrep plus every nontrivial R-type irrep with a nonzero piece.
/// Throws DomainError on a negative coordinate.
std::vector<int> aut_group(const RealIrrepTable& t, const CoarseStableBundle& b);

/// m[rho][sigma]: multiplicity of sigma in the restriction of rho along phi: K -> G.
std::vector<std::vector<long>> restriction_matrix(const FiniteGroup& k, const RealIrrepTable& kt,
                                                  const ElementMap& phi, const FiniteGroup& g,
                                                  const RealIrrepTable& gt);

StableBundle restrict_bundle(const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& phi,
                             const FiniteGroup& g, const RealIrrepTable& gt, const StableBundle& b);

/// A stable framing of BK, stored relative to the zero base point. Bit i belongs to
/// the i-th R-type irrep in RealIrrepTable order; bit 0 is always the trivial irrep.
struct Framing {
  std::uint64_t bits = 0;
  int width = 0;
  friend bool operator==(const Framing&, const Framing&) = default;
  friend auto operator<=>(const Framing&, const Framing&) = default;
};

/// Width of the framing torsor: the number of R-type irreps.
int framing_width(const RealIrrepTable& t);

/// All 2^width framings in increasing bit order. Throws DomainError above 2^24.
std::vector<Framing> framings(const RealIrrepTable& t);

/// The canonical involution: flips the trivial-irrep bit.
Framing iota(const Framing& f);

/// The bijection K^ -> K'^ induced by an isomorphism alpha: K -> K', matching
/// sigma with the sigma' whose character pulls back to chi_sigma. Throws
/// InternalError if the match fails or does not preserve end types.
std::vector<int> irrep_bijection(const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& alpha,
                                 const FiniteGroup& k2, const RealIrrepTable& kt2);

/// Permutation of framing bit positions induced by an irrep bijection.
std::vector<int> framing_permutation(const RealIrrepTable& kt, const std::vector<int>& bijection,
                                     const RealIrrepTable& kt2);

Framing permute_bits(const Framing& f, const std::vector<int>& bit_map);

/// Transports a framing of BK along alpha: K -> K'.
Framing transport_framing(const Framing& f, const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& alpha,
                          const FiniteGroup& k2, const RealIrrepTable& kt2);

std::string to_string(const Framing& f);

}  // namespace orbicalc
