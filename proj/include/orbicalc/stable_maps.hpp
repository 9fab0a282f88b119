#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbicalc/bundles.hpp"
#include "orbicalc/group.hpp"

namespace orbicalc {

enum class MapVariant { Rep, Orb };

std::string to_string(MapVariant v);
/// Parses "rep" or "orb"; throws DomainError otherwise.
MapVariant parse_variant(const std::string& s);

/// A framed point BK -> BG x BH: K is a subgroup of G up to conjugacy (the leg f is
/// its inclusion), g a class of maps K -> H, and a framing of BK.
struct MapGenerator {
  int k_class = 0;            ///< index into subgroup_classes(G)
  std::vector<int> k_elements;  ///< representative subgroup, element i of K is k_elements[i]
  ElementMap g;               ///< canonical representative of the class K -> H
  bool g_injective = false;
  Framing framing;

  friend bool operator==(const MapGenerator&, const MapGenerator&) = default;
};

/// Orders generators by (K class, g, framing bits).
bool operator<(const MapGenerator& a, const MapGenerator& b);

struct MapGroupPresentation {
  MapVariant variant = MapVariant::Rep;
  std::vector<MapGenerator> generators;  ///< every generator class, sorted
  std::vector<std::pair<int, int>> orbit_table;  ///< (class, its iota partner), one row per orbit
  std::vector<MapGenerator> basis;               ///< the smaller class of each orbit
  int rank = 0;
};

struct StableMapLimits {
  std::size_t max_states = std::size_t{1} << 22;  ///< (g class, framing) pairs per subgroup class
};

/// Generator classes: for each [K <= G], pairs (g class, framing) modulo N_G(K)
/// acting by conjugation on K. In the Rep variant g must be injective.
std::vector<MapGenerator> enumerate_generators(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                                               const StableMapLimits& limits = {});

/// Free abelian presentation: generator classes modulo q + iota(q) = 0.
/// Throws InternalError if iota fixes a class.
MapGroupPresentation map_group(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                               const StableMapLimits& limits = {});

struct CrossCheckReport {
  std::size_t subgroup_route = 0;  ///< classes from enumerate_generators
  std::size_t abstract_route = 0;  ///< classes from abstract K up to isomorphism
  bool match = false;
};

/// Recounts generator classes over abstract K (one per isomorphism type of subgroup),
/// injective f: K -> G up to G-conjugacy, g: K -> H up to H-conjugacy and framings,
/// all modulo Aut(K), counting orbits by Burnside's lemma rather than by explicit
/// enumeration. Throws InternalError when the counts disagree.
CrossCheckReport cross_check_abstract_enumeration(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                                                  const StableMapLimits& limits = {});

struct SymmetryReport {
  int rank_gh = 0;
  int rank_hg = 0;
  bool holds = false;
};

/// Rep-variant rank with the legs exchanged (subgroups of H with injective maps to G).
SymmetryReport symmetry_witness(const FiniteGroup& g, const FiniteGroup& h, const StableMapLimits& limits = {});

/// Closed-form rank for the Orb variant with trivial target: sum over [K <= G] of the
/// number of N_G(K)-orbits of framings with trivial bit 0, by Burnside's lemma.
int orb_rank_trivial_target(const FiniteGroup& g);

}  // namespace orbicalc
