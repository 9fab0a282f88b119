#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <tuple>

#include "orbicalc/corpus.hpp"
#include "orbicalc/homs.hpp"
#include "orbicalc/stable_maps.hpp"

using namespace orbicalc;

namespace {

const FiniteGroup& grp(const char* name) { return corpus_group(name).group; }

// Orbits of G x H on raw triples (subgroup K, homomorphism K -> H, framing of K),
// with (x, y) acting by conjugating K by x, g by y and transporting the framing.
std::size_t brute_force_classes(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant) {
  using State = std::tuple<std::vector<int>, ElementMap, std::uint64_t>;
  std::map<std::vector<int>, std::pair<FiniteGroup, std::shared_ptr<const RealIrrepTable>>> groups;
  auto group_of = [&](const std::vector<int>& k) -> const auto& {
    auto it = groups.find(k);
    if (it == groups.end()) {
      auto sub = subgroup_as_group(g, k).first;
      auto t = cached_real_irreps(sub);
      it = groups.emplace(k, std::make_pair(std::move(sub), std::move(t))).first;
    }
    return it->second;
  };
  std::set<State> seen;
  std::size_t orbits = 0;
  for (const auto& k : all_subgroups(g)) {
    const auto& [kg, kt] = group_of(k);
    const int width = framing_width(*kt);
    for (const auto& phi : enumerate_homs(kg, h)) {
      if (variant == MapVariant::Rep && !is_injective(phi)) continue;
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
        State start{k, phi, bits};
        if (seen.count(start)) continue;
        ++orbits;
        for (int x = 0; x < g.order(); ++x) {
          std::vector<int> k2;
          for (int e : k) k2.push_back(g.conj(x, e));
          std::sort(k2.begin(), k2.end());
          const auto& [kg2, kt2] = group_of(k2);
          // alpha: K -> K2, i -> index of x k_i x^-1
          ElementMap alpha(k.size());
          for (std::size_t i = 0; i < k.size(); ++i)
            alpha[i] = static_cast<int>(std::lower_bound(k2.begin(), k2.end(), g.conj(x, k[i])) - k2.begin());
          const auto fr = transport_framing(Framing{bits, width}, kg, *kt, alpha, kg2, *kt2);
          const auto phi2 = compose(inverse_map(alpha), phi);
          for (int y = 0; y < h.order(); ++y) {
            ElementMap conj(phi2.size());
            for (std::size_t i = 0; i < phi2.size(); ++i) conj[i] = h.conj(y, phi2[i]);
            seen.insert(State{k2, conj, fr.bits});
          }
        }
      }
    }
  }
  return orbits;
}

}  // namespace

TEST_CASE("map_group on the smallest pairs") {
  const auto& one = grp("trivial");
  const auto& c2 = grp("c2");
  SUBCASE("point to point") {
    const auto p = map_group(one, one, MapVariant::Rep);
    CHECK(p.generators.size() == 2);
    CHECK(p.rank == 1);
  }
  SUBCASE("c2 to the point") {
    // Rep requires an injective leg to the target, so only K = 1 contributes.
    const auto rep = map_group(c2, one, MapVariant::Rep);
    CHECK(rep.generators.size() == 2);
    CHECK(rep.rank == 1);
    const auto orb = map_group(c2, one, MapVariant::Orb);
    CHECK(orb.generators.size() == 6);
    CHECK(orb.rank == 3);
  }
  SUBCASE("c2 to c2") {
    const auto rep = map_group(c2, c2, MapVariant::Rep);
    const auto orb = map_group(c2, c2, MapVariant::Orb);
    CHECK(rep.rank == 3);
    CHECK(orb.rank == 5);
    std::size_t extra = 0;
    for (const auto& q : orb.generators) extra += !q.g_injective;
    CHECK(orb.generators.size() - rep.generators.size() == extra);
    CHECK(extra == 4);
  }
  SUBCASE("basis is the smaller class of each iota orbit") {
    const auto p = map_group(grp("s3"), grp("c2"), MapVariant::Orb);
    for (const auto& [a, b] : p.orbit_table) {
      CHECK(a < b);
      CHECK(p.generators[a].k_class == p.generators[b].k_class);
      CHECK(p.generators[a].g == p.generators[b].g);
      CHECK((p.generators[a].framing.bits ^ p.generators[b].framing.bits) == 1u);
    }
    CHECK(2 * p.rank == static_cast<int>(p.generators.size()));
    CHECK(std::is_sorted(p.generators.begin(), p.generators.end()));
  }
}

TEST_CASE("generator classes agree with brute-force orbits on raw triples") {
  for (const auto& g : corpus_groups_up_to(6))
    for (const auto& h : corpus_groups_up_to(6))
      for (auto v : {MapVariant::Rep, MapVariant::Orb}) {
        CAPTURE(g.name);
        CAPTURE(h.name);
        CAPTURE(to_string(v));
        CHECK(enumerate_generators(g.group, h.group, v).size() == brute_force_classes(g.group, h.group, v));
      }
  CHECK(enumerate_generators(grp("d8"), grp("c2"), MapVariant::Orb).size() ==
        brute_force_classes(grp("d8"), grp("c2"), MapVariant::Orb));
  CHECK(enumerate_generators(grp("q8"), grp("c4"), MapVariant::Rep).size() ==
        brute_force_classes(grp("q8"), grp("c4"), MapVariant::Rep));
}

TEST_CASE("cross_check_abstract_enumeration") {
  CHECK(cross_check_abstract_enumeration(grp("trivial"), grp("trivial"), MapVariant::Rep).abstract_route == 2);
  const auto c2 = cross_check_abstract_enumeration(grp("c2"), grp("trivial"), MapVariant::Orb);
  CHECK(c2.abstract_route == 6);
  CHECK(c2.match);
  CHECK(cross_check_abstract_enumeration(grp("s3"), grp("trivial"), MapVariant::Rep).match);
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(8))
      for (auto v : {MapVariant::Rep, MapVariant::Orb}) {
        CAPTURE(g.name);
        CAPTURE(h.name);
        CHECK(cross_check_abstract_enumeration(g.group, h.group, v).match);
      }
}

TEST_CASE("variant monotonicity, point source and two-leg symmetry") {
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(8)) {
      CAPTURE(g.name);
      CAPTURE(h.name);
      const auto rep = map_group(g.group, h.group, MapVariant::Rep);
      const auto orb = map_group(g.group, h.group, MapVariant::Orb);
      CHECK(rep.rank <= orb.rank);
      const std::set<MapGenerator> orb_set(orb.generators.begin(), orb.generators.end());
      for (const auto& q : rep.generators) CHECK(orb_set.count(q) == 1);
      CHECK(symmetry_witness(g.group, h.group).holds);
    }
  for (const auto& h : load_corpus()) CHECK(map_group(grp("trivial"), h.group, MapVariant::Orb).rank == 1);
}

TEST_CASE("Orb rank over the point matches the Burnside count") {
  for (const auto& g : load_corpus()) {
    CAPTURE(g.name);
    CHECK(map_group(g.group, grp("trivial"), MapVariant::Orb).rank == orb_rank_trivial_target(g.group));
  }
}

TEST_CASE("variant parsing") {
  CHECK(parse_variant("rep") == MapVariant::Rep);
  CHECK(parse_variant("orb") == MapVariant::Orb);
  CHECK_THROWS_AS(parse_variant("stable"), DomainError);
  StableMapLimits tiny;
  tiny.max_states = 4;
  CHECK_THROWS_AS(map_group(grp("c2xc2xc2"), grp("trivial"), MapVariant::Orb, tiny), DomainError);
}
