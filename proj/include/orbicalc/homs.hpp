#pragma once

#include <cstddef>
#include <vector>

#include "orbicalc/group.hpp"

namespace orbicalc {

struct HomLimits {
  std::size_t max_homs = 1'000'000;  ///< enumerate_homs aborts beyond this many maps
};

/// An H-conjugacy class of homomorphisms G -> H.
struct HomClass {
  ElementMap representative;  ///< lexicographically least image array in the orbit
  bool injective = false;
  int orbit_size = 0;
  int centralizer_order = 0;  ///< |Z_H(im phi)|
};

/// Every homomorphism G -> H, sorted lexicographically by image array.
/// Backtracks over images of a greedy generating set of G, rejecting a partial
/// assignment as soon as it violates a relation among the generators fixed so far.
std::vector<ElementMap> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits = {});

/// The lexicographically least conjugate h phi h^-1.
ElementMap canonical_conjugate(const FiniteGroup& h, const ElementMap& phi);

/// Hom(G, H)/H, sorted by representative.
std::vector<HomClass> hom_classes(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits = {});

/// Index of the class containing phi, or -1.
int find_class(const std::vector<HomClass>& classes, const FiniteGroup& h, const ElementMap& phi);

/// Z_H(im phi), the automorphism group of phi in the groupoid.
SubgroupClass pi1(const FiniteGroup& h, const HomClass& phi);

struct RepHomReport {
  std::vector<HomClass> injective;
  std::size_t all_classes = 0;
  std::size_t normal_subgroups = 0;
  std::size_t classes_through_quotients = 0;  ///< classes factoring through a nontrivial quotient
  std::size_t partition_sum = 0;               ///< sum over N of injective classes of G/N -> H
};

/// The injective classes, with both quotient identities verified:
/// (a) injective = all minus those factoring through G/N for some nontrivial normal N;
/// (b) sum over all normal N of #injective(G/N, H) = #all(G, H).
/// A failed identity throws InternalError.
RepHomReport rep_hom_classes(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits = {});

}  // namespace orbicalc
