#include "orbicalc/stable_maps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbicalc/homs.hpp"

namespace orbicalc {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root so every root is its component's minimum.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

// An automorphism of K acting on g classes (by precomposition with its inverse)
// and on framing bits.
struct Action {
  std::vector<int> class_perm;
  std::vector<int> bit_map;
};

std::vector<int> precompose_classes(const std::vector<HomClass>& classes, const FiniteGroup& target,
                                    const ElementMap& alpha_inv) {
  std::vector<int> perm;
  for (const auto& c : classes) {
    const int idx = find_class(classes, target, compose(alpha_inv, c.representative));
    if (idx < 0) throw InternalError("stable maps: precomposition left the class list");
    perm.push_back(idx);
  }
  return perm;
}

std::vector<HomClass> filtered_classes(const FiniteGroup& k, const FiniteGroup& h, MapVariant variant) {
  auto classes = hom_classes(k, h);
  if (variant == MapVariant::Rep)
    std::erase_if(classes, [](const HomClass& c) { return !c.injective; });
  return classes;
}

// Automorphisms of K = subgroup_as_group(G, elements) induced by conjugation with N_G(K), deduplicated.
std::vector<ElementMap> normalizer_automorphisms(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
  std::set<ElementMap> out;
  for (int n : normalizer(g, elements)) {
    ElementMap alpha(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) alpha[i] = pos[g.conj(n, elements[i])];
    out.insert(std::move(alpha));
  }
  return {out.begin(), out.end()};
}

std::vector<int> bit_map_of(const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& alpha) {
  return framing_permutation(kt, irrep_bijection(k, kt, alpha, k, kt), kt);
}

std::uint64_t permute(std::uint64_t bits, const std::vector<int>& bit_map) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < bit_map.size(); ++i)
    if (bits >> i & 1u) out |= std::uint64_t{1} << bit_map[i];
  return out;
}

// Component label (the smallest state in the component) of every state
// (class index, framing bits) under the given actions.
std::vector<std::size_t> orbit_labels(std::size_t num_classes, int width, const std::vector<Action>& actions,
                                      const StableMapLimits& limits) {
  const std::size_t framings = std::size_t{1} << width;
  const std::size_t states = num_classes * framings;
  if (width > 40 || states > limits.max_states)
    throw DomainError("cap", "stable maps: " + std::to_string(states) + " states exceed the enumeration cap");
  UnionFind uf(states);
  for (const auto& a : actions)
    for (std::size_t c = 0; c < num_classes; ++c)
      for (std::uint64_t b = 0; b < framings; ++b)
        uf.unite(c * framings + b, static_cast<std::size_t>(a.class_perm[c]) * framings + permute(b, a.bit_map));
  std::vector<std::size_t> labels(states);
  for (std::size_t s = 0; s < states; ++s) labels[s] = uf.find(s);
  return labels;
}

// Generator classes of one subgroup class, each with the index (within the
// returned list) of its iota partner.
std::vector<std::pair<MapGenerator, std::size_t>> block_generators(const FiniteGroup& g, const FiniteGroup& h,
                                                                   MapVariant variant, int k_class,
                                                                   const std::vector<int>& elements,
                                                                   const StableMapLimits& limits) {
  const auto k = subgroup_as_group(g, elements).first;
  const auto kt = cached_real_irreps(k);
  const auto g_classes = filtered_classes(k, h, variant);
  if (g_classes.empty()) return {};
  const int width = framing_width(*kt);

  std::vector<Action> actions;
  for (const auto& alpha : normalizer_automorphisms(g, elements))
    actions.push_back({precompose_classes(g_classes, h, inverse_map(alpha)), bit_map_of(k, *kt, alpha)});
  const auto labels = orbit_labels(g_classes.size(), width, actions, limits);

  std::vector<std::pair<MapGenerator, std::size_t>> out;
  std::vector<std::size_t> position(labels.size(), 0);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    if (labels[s] != s) continue;
    position[s] = out.size();
    MapGenerator gen;
    gen.k_class = k_class;
    gen.k_elements = elements;
    gen.g = g_classes[s >> width].representative;
    gen.g_injective = g_classes[s >> width].injective;
    gen.framing = {s & ((std::uint64_t{1} << width) - 1), width};
    out.emplace_back(std::move(gen), 0);
  }
  // iota flips bit 0, which every action fixes, so it maps orbits to orbits.
  for (std::size_t s = 0; s < labels.size(); ++s)
    if (labels[s] == s) out[position[s]].second = position[labels[s ^ 1u]];
  return out;
}

}  // namespace

std::string to_string(MapVariant v) { return v == MapVariant::Rep ? "rep" : "orb"; }

MapVariant parse_variant(const std::string& s) {
  if (s == "rep") return MapVariant::Rep;
  if (s == "orb") return MapVariant::Orb;
  throw DomainError("variant", "variant must be rep or orb, got '" + s + "'");
}

bool operator<(const MapGenerator& a, const MapGenerator& b) {
  if (a.k_class != b.k_class) return a.k_class < b.k_class;
  if (a.g != b.g) return a.g < b.g;
  return a.framing.bits < b.framing.bits;
}

std::vector<MapGenerator> enumerate_generators(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                                               const StableMapLimits& limits) {
  std::vector<MapGenerator> out;
  const auto classes = subgroup_classes(g);
  for (std::size_t ki = 0; ki < classes.size(); ++ki)
    for (auto& [gen, partner] : block_generators(g, h, variant, static_cast<int>(ki), classes[ki].representative, limits))
      out.push_back(std::move(gen));
  return out;
}

MapGroupPresentation map_group(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                               const StableMapLimits& limits) {
  MapGroupPresentation p;
  p.variant = variant;
  std::vector<std::size_t> partner;
  const auto classes = subgroup_classes(g);
  for (std::size_t ki = 0; ki < classes.size(); ++ki) {
    const std::size_t offset = p.generators.size();
    for (auto& [gen, j] : block_generators(g, h, variant, static_cast<int>(ki), classes[ki].representative, limits)) {
      p.generators.push_back(std::move(gen));
      partner.push_back(offset + j);
    }
  }
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (partner[i] == i) throw InternalError("map_group: iota fixes a generator class");
    if (partner[partner[i]] != i) throw InternalError("map_group: iota is not an involution on classes");
    if (i < partner[i]) {
      p.orbit_table.emplace_back(static_cast<int>(i), static_cast<int>(partner[i]));
      p.basis.push_back(p.generators[i]);
    }
  }
  p.rank = static_cast<int>(p.basis.size());
  return p;
}

CrossCheckReport cross_check_abstract_enumeration(const FiniteGroup& g, const FiniteGroup& h, MapVariant variant,
                                                  const StableMapLimits& limits) {
  CrossCheckReport report;
  report.subgroup_route = enumerate_generators(g, h, variant, limits).size();

  std::vector<FiniteGroup> types;
  for (const auto& cls : subgroup_classes(g)) {
    auto k = subgroup_as_group(g, cls.representative).first;
    const bool seen = std::any_of(types.begin(), types.end(),
                                  [&](const FiniteGroup& t) { return are_isomorphic(t, k).has_value(); });
    if (!seen) types.push_back(std::move(k));
  }

  for (const auto& k : types) {
    auto f_classes = hom_classes(k, g);
    std::erase_if(f_classes, [](const HomClass& c) { return !c.injective; });
    const auto g_classes = filtered_classes(k, h, variant);
    if (f_classes.empty() || g_classes.empty()) continue;
    const auto kt = cached_real_irreps(k);

    // Burnside over Aut(K): the action is diagonal, so a fixed triple is a fixed f
    // class, a fixed g class and a framing constant on the cycles of the bit map.
    const auto autos = automorphisms(k);
    Integer fixed_total = 0;
    for (const auto& alpha : autos) {
      const auto alpha_inv = inverse_map(alpha);
      const auto fp = precompose_classes(f_classes, g, alpha_inv);
      const auto gp = precompose_classes(g_classes, h, alpha_inv);
      long ff = 0, gf = 0;
      for (std::size_t i = 0; i < fp.size(); ++i) ff += fp[i] == static_cast<int>(i);
      for (std::size_t i = 0; i < gp.size(); ++i) gf += gp[i] == static_cast<int>(i);
      if (ff == 0 || gf == 0) continue;
      const auto bits = bit_map_of(k, *kt, alpha);
      std::vector<bool> visited(bits.size(), false);
      unsigned long cycles = 0;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (visited[i]) continue;
        ++cycles;
        for (std::size_t j = i; !visited[j]; j = bits[j]) visited[j] = true;
      }
      fixed_total += Integer(ff) * gf * (Integer(1) << cycles);
    }
    if (fixed_total % static_cast<unsigned long>(autos.size()) != 0)
      throw InternalError("cross_check_abstract_enumeration: Burnside sum not divisible by |Aut(K)|");
    report.abstract_route += Integer(fixed_total / static_cast<unsigned long>(autos.size())).get_ui();
  }
  report.match = report.subgroup_route == report.abstract_route;
  if (!report.match)
    throw InternalError("cross_check_abstract_enumeration: " + std::to_string(report.subgroup_route) + " classes vs " +
                        std::to_string(report.abstract_route));
  return report;
}

SymmetryReport symmetry_witness(const FiniteGroup& g, const FiniteGroup& h, const StableMapLimits& limits) {
  SymmetryReport r;
  r.rank_gh = map_group(g, h, MapVariant::Rep, limits).rank;
  r.rank_hg = map_group(h, g, MapVariant::Rep, limits).rank;
  r.holds = r.rank_gh == r.rank_hg;
  return r;
}

int orb_rank_trivial_target(const FiniteGroup& g) {
  Rational total = 0;
  for (const auto& cls : subgroup_classes(g)) {
    const auto& elements = cls.representative;
    const auto [k, incl] = subgroup_as_group(g, elements);
    const auto kt = cached_real_irreps(k);
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = static_cast<int>(i);
    const auto normal = normalizer(g, elements);
    Integer fixed = 0;
    for (int n : normal) {
      ElementMap alpha(elements.size());
      for (std::size_t i = 0; i < elements.size(); ++i) alpha[i] = pos[g.conj(n, elements[i])];
      const auto bits = bit_map_of(k, *kt, alpha);
      std::vector<bool> visited(bits.size(), false);
      int cycles = 0;
      for (std::size_t i = 0; i < bits.size(); ++i) {
        if (visited[i]) continue;
        ++cycles;
        for (std::size_t j = i; !visited[j]; j = bits[j]) visited[j] = true;
      }
      fixed += Integer(1) << (cycles - 1);
    }
    total += Rational(fixed, static_cast<long>(normal.size()));
  }
  total.canonicalize();
  if (!is_integer(total)) throw InternalError("orb_rank_trivial_target: Burnside count is not an integer");
  return static_cast<int>(total.get_num().get_si());
}

}  // namespace orbicalc
