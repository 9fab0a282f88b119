#include "orbicalc/homs.hpp"

#include <algorithm>
#include <set>

#include "orbicalc/errors.hpp"

namespace orbicalc {

namespace {

void search(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& gens,
            std::vector<std::vector<int>>& candidates, std::vector<int>& images, std::vector<ElementMap>& out,
            const HomLimits& limits) {
  const std::size_t k = images.size();
  if (k == gens.size()) {
    auto phi = extend_to_homomorphism(g, gens, images, h);
    if (!phi) throw InternalError("enumerate_homs: complete assignment failed to extend");
    out.push_back(std::move(*phi));
    if (out.size() > limits.max_homs) throw DomainError("cap", "enumerate_homs: more than " +
                                                                    std::to_string(limits.max_homs) + " homomorphisms");
    return;
  }
  for (int y : candidates[k]) {
    images.push_back(y);
    if (extend_to_homomorphism(g, std::span<const int>(gens.data(), k + 1), images, h))
      search(g, h, gens, candidates, images, out, limits);
    images.pop_back();
  }
}

}  // namespace

std::vector<ElementMap> enumerate_homs(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits) {
  const std::vector<int> gens = greedy_generators(g);
  if (gens.empty()) return {ElementMap(g.order(), h.identity())};
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < h.order(); ++y)
      if (g.element_order(gens[i]) % h.element_order(y) == 0) candidates[i].push_back(y);
  std::vector<ElementMap> out;
  std::vector<int> images;
  search(g, h, gens, candidates, images, out, limits);
  std::sort(out.begin(), out.end());
  return out;
}

ElementMap canonical_conjugate(const FiniteGroup& h, const ElementMap& phi) {
  ElementMap best = phi;
  ElementMap cur(phi.size());
  for (int y = 0; y < h.order(); ++y) {
    for (std::size_t x = 0; x < phi.size(); ++x) cur[x] = h.conj(y, phi[x]);
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<HomClass> hom_classes(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits) {
  const auto homs = enumerate_homs(g, h, limits);
  std::set<ElementMap> seen;
  std::vector<HomClass> out;
  for (const auto& phi : homs) {
    if (seen.count(phi)) continue;
    std::set<ElementMap> orbit;
    ElementMap cur(phi.size());
    for (int y = 0; y < h.order(); ++y) {
      for (std::size_t x = 0; x < phi.size(); ++x) cur[x] = h.conj(y, phi[x]);
      orbit.insert(cur);
    }
    seen.insert(orbit.begin(), orbit.end());
    HomClass c;
    c.representative = *orbit.begin();
    c.injective = is_injective(phi);
    c.orbit_size = static_cast<int>(orbit.size());
    c.centralizer_order = centralizer(h, phi).order();
    if (c.orbit_size * c.centralizer_order != h.order())
      throw InternalError("hom_classes: orbit-stabilizer failed for a conjugation orbit");
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const HomClass& a, const HomClass& b) { return a.representative < b.representative; });
  return out;
}

int find_class(const std::vector<HomClass>& classes, const FiniteGroup& h, const ElementMap& phi) {
  const ElementMap canon = canonical_conjugate(h, phi);
  const auto it = std::lower_bound(classes.begin(), classes.end(), canon,
                                   [](const HomClass& c, const ElementMap& m) { return c.representative < m; });
  if (it == classes.end() || it->representative != canon) return -1;
  return static_cast<int>(it - classes.begin());
}

SubgroupClass pi1(const FiniteGroup& h, const HomClass& phi) { return centralizer(h, phi.representative); }

RepHomReport rep_hom_classes(const FiniteGroup& g, const FiniteGroup& h, const HomLimits& limits) {
  const auto all = hom_classes(g, h, limits);
  RepHomReport report;
  report.all_classes = all.size();
  for (const auto& c : all)
    if (c.injective) report.injective.push_back(c);

  std::vector<bool> through_quotient(all.size(), false);
  const auto normals = normal_subgroups(g);
  report.normal_subgroups = normals.size();
  for (const auto& n : normals) {
    const auto [q, proj] = quotient_group(g, n);
    const auto q_classes = hom_classes(q, h, limits);
    for (const auto& c : q_classes) report.partition_sum += c.injective;
    if (n.size() == 1) continue;
    for (const auto& c : q_classes) {
      const int idx = find_class(all, h, compose(proj, c.representative));
      if (idx < 0) throw InternalError("rep_hom_classes: pulled-back class missing from Hom(G, H)/H");
      through_quotient[idx] = true;
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    report.classes_through_quotients += through_quotient[i];
    if (through_quotient[i] == all[i].injective)
      throw InternalError("rep_hom_classes: injective classes differ from those avoiding every quotient");
  }
  if (report.partition_sum != all.size())
    throw InternalError("rep_hom_classes: sum over normal subgroups disagrees with #Hom(G, H)/H");
  return report;
}

}  // namespace orbicalc
