#include "orbicalc/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "orbicalc/errors.hpp"

namespace orbicalc {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels,
                         const GroupLimits& limits)
    : n_(static_cast<int>(table.size())), labels_(std::move(labels)) {
  if (n_ == 0) throw DomainError("nonempty", "group table must have at least one row");
  table_.reserve(static_cast<std::size_t>(n_) * n_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n_) throw DomainError("square-table", "group table is not square");
    for (int v : row) {
      if (v < 0 || v >= n_) throw DomainError("entries-in-range", "group table entry out of range");
      table_.push_back(v);
    }
  }

  // Latin square.
  std::vector<char> seen(n_);
  for (int r = 0; r < n_; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n_; ++c) {
      if (seen[mul(r, c)]++) throw DomainError("latin-square", "row " + std::to_string(r) + " repeats an entry");
    }
  }
  for (int c = 0; c < n_; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n_; ++r) {
      if (seen[mul(r, c)]++)
        throw DomainError("latin-square", "column " + std::to_string(c) + " repeats an entry");
    }
  }

  identity_ = -1;
  for (int e = 0; e < n_ && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("identity", "group table has no two-sided identity");

  inverse_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_)
          throw DomainError("inverses", "element " + std::to_string(a) + " has no two-sided inverse");
        inverse_[a] = b;
        break;
      }
    }
  }

  auto assoc_fails = [&](int a, int b, int c) { return mul(mul(a, b), c) != mul(a, mul(b, c)); };
  if (static_cast<std::size_t>(n_) <= limits.associativity_check_bound) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (assoc_fails(a, b, c)) throw DomainError("associativity", "group table is not associative");
  } else {
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick(0, n_ - 1);
    for (int i = 0; i < 200000; ++i) {
      if (assoc_fails(pick(rng), pick(rng), pick(rng)))
        throw DomainError("associativity", "group table is not associative (sampled)");
    }
  }

  element_order_.assign(n_, 0);
  exponent_ = 1;
  for (int a = 0; a < n_; ++a) {
    int x = a;
    int k = 1;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }

  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  } else if (static_cast<int>(labels_.size()) != n_) {
    throw DomainError("labels", "label count does not match group order");
  }

  class_of_.assign(n_, -1);
  for (int x = 0; x < n_; ++x) {
    if (class_of_[x] >= 0) continue;
    std::vector<int> cls;
    for (int g = 0; g < n_; ++g) {
      const int y = conj(g, x);
      if (class_of_[y] < 0) {
        class_of_[y] = static_cast<int>(classes_.size());
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  const int id_class = class_of_[identity_];
  if (id_class != 0) {
    std::rotate(classes_.begin(), classes_.begin() + id_class, classes_.begin() + id_class + 1);
    for (std::size_t i = 0; i < classes_.size(); ++i)
      for (int x : classes_[i]) class_of_[x] = static_cast<int>(i);
  }
}

int FiniteGroup::power(int a, long k) const {
  const int o = element_order_[a];
  long e = ((k % o) + o) % o;
  int x = identity_;
  for (long i = 0; i < e; ++i) x = mul(x, a);
  return x;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) out[a][b] = mul(a, b);
  return out;
}

bool FiniteGroup::is_abelian() const { return static_cast<int>(classes_.size()) == n_; }

namespace {

Permutation compose_perm(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
  return out;
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = p[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

FiniteGroup group_from_generators(int degree, const std::vector<Permutation>& generators,
                                  const GroupLimits& limits) {
  if (degree < 1) throw DomainError("degree", "permutation degree must be positive");
  for (const auto& gen : generators) {
    if (static_cast<int>(gen.size()) != degree)
      throw DomainError("permutation", "generator length differs from degree");
    std::vector<char> hit(degree, 0);
    for (int v : gen) {
      if (v < 0 || v >= degree || hit[v]++) throw DomainError("permutation", "generator is not a permutation");
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Permutation> elements{id};
  std::map<Permutation, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      Permutation next = compose_perm(elements[i], gen);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > limits.closure_cap)
          throw DomainError("closure-cap", "generated group exceeds " + std::to_string(limits.closure_cap) +
                                               " elements");
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose_perm(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(cycle_notation(p));
  return FiniteGroup(std::move(table), std::move(labels), limits);
}

const std::vector<std::vector<int>>& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

std::vector<int> generate_subgroup(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int s : gens) {
      const int y = g.mul(elems[i], s);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> elements) {
  if (elements.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int x : elements) {
    if (x < 0 || x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int a : elements) {
    if (!in[g.inv(a)]) return false;
    for (int b : elements)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const int> subgroup) {
  std::vector<char> in(g.order(), 0);
  for (int x : subgroup) in[x] = 1;
  for (int h = 0; h < g.order(); ++h)
    for (int x : subgroup)
      if (!in[g.conj(h, x)]) return false;
  return true;
}

std::vector<int> normalizer(const FiniteGroup& g, std::span<const int> subgroup) {
  std::vector<char> in(g.order(), 0);
  for (int x : subgroup) in[x] = 1;
  std::vector<int> out;
  for (int h = 0; h < g.order(); ++h) {
    bool ok = true;
    for (int x : subgroup) {
      if (!in[g.conj(h, x)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> out;
  for (const auto& cls : g.classes())
    if (cls.size() == 1) out.push_back(cls.front());
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupClass describe_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  SubgroupClass out;
  out.normalizer_order = static_cast<int>(normalizer(g, elements).size());
  out.conjugates_count = g.order() / out.normalizer_order;
  out.representative = std::move(elements);
  return out;
}

SubgroupClass centralizer(const FiniteGroup& g, std::span<const int> s) {
  if (s.empty()) throw DomainError("nonempty", "centralizer of an empty set is not defined here");
  std::vector<int> elems;
  for (int x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (int y : s) {
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) elems.push_back(x);
  }
  return describe_subgroup(g, std::move(elems));
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g, const GroupLimits& limits) {
  if (static_cast<std::size_t>(g.order()) > limits.subgroup_enumeration_cap)
    throw DomainError("subgroup-cap", "subgroup enumeration is capped at order " +
                                          std::to_string(limits.subgroup_enumeration_cap));
  struct Node {
    std::vector<int> elements;
    std::vector<int> gens;
  };
  std::set<std::vector<int>> seen;
  std::vector<Node> work;
  work.push_back({{g.identity()}, {}});
  seen.insert(work.front().elements);
  for (std::size_t i = 0; i < work.size(); ++i) {
    std::vector<char> in(g.order(), 0);
    for (int x : work[i].elements) in[x] = 1;
    for (int x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<int> gens = work[i].gens;
      gens.push_back(x);
      auto elems = generate_subgroup(g, gens);
      if (seen.insert(elems).second) work.push_back({std::move(elems), std::move(gens)});
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& g, const GroupLimits& limits) {
  const auto subgroups = all_subgroups(g, limits);  // lexicographic order
  std::set<std::vector<int>> assigned;
  std::vector<SubgroupClass> out;
  for (const auto& sub : subgroups) {
    if (assigned.count(sub)) continue;
    std::set<std::vector<int>> conjugates;
    for (int h = 0; h < g.order(); ++h) {
      std::vector<int> c;
      c.reserve(sub.size());
      for (int x : sub) c.push_back(g.conj(h, x));
      std::sort(c.begin(), c.end());
      conjugates.insert(std::move(c));
    }
    assigned.insert(conjugates.begin(), conjugates.end());
    SubgroupClass cls;
    cls.representative = sub;
    cls.conjugates_count = static_cast<int>(conjugates.size());
    cls.normalizer_order = g.order() / cls.conjugates_count;
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.size() != b.representative.size())
      return a.representative.size() < b.representative.size();
    return a.representative < b.representative;
  });
  return out;
}

std::vector<std::vector<int>> normal_subgroups(const FiniteGroup& g, const GroupLimits& limits) {
  std::vector<std::vector<int>> out;
  for (auto& cls : subgroup_classes(g, limits))
    if (cls.conjugates_count == 1) out.push_back(std::move(cls.representative));
  return out;
}

std::pair<FiniteGroup, ElementMap> subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elements) {
  if (!is_subgroup(g, elements)) throw DomainError("subgroup", "element list is not a subgroup");
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(g.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const std::size_t k = sorted.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(g.labels()[sorted[a]]);
    for (std::size_t b = 0; b < k; ++b) table[a][b] = pos[g.mul(sorted[a], sorted[b])];
  }
  return {FiniteGroup(std::move(table), std::move(labels)), sorted};
}

std::pair<FiniteGroup, ElementMap> quotient_group(const FiniteGroup& g, std::span<const int> normal) {
  if (!is_subgroup(g, normal) || !is_normal(g, normal))
    throw DomainError("normal-subgroup", "quotient requires a normal subgroup");
  ElementMap proj(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (proj[x] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : normal) proj[g.mul(x, m)] = idx;
  }
  const std::size_t k = reps.size();
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(g.labels()[reps[a]] + "N");
    for (std::size_t b = 0; b < k; ++b) table[a][b] = proj[g.mul(reps[a], reps[b])];
  }
  return {FiniteGroup(std::move(table), std::move(labels)), proj};
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  std::vector<int> gens;
  std::vector<int> current{g.identity()};
  for (int x : order) {
    if (static_cast<int>(current.size()) == g.order()) break;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = generate_subgroup(g, gens);
  }
  return gens;
}

std::optional<ElementMap> extend_to_homomorphism(const FiniteGroup& g, std::span<const int> gens,
                                                 std::span<const int> images, const FiniteGroup& h) {
  ElementMap image(g.order(), -1);
  image[g.identity()] = h.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(x, gens[k]);
      const int val = h.mul(image[x], images[k]);
      if (image[y] < 0) {
        image[y] = val;
        queue.push_back(y);
      } else if (image[y] != val) {
        return std::nullopt;
      }
    }
  }
  return image;
}

bool is_homomorphism(const FiniteGroup& g, const FiniteGroup& h, const ElementMap& phi) {
  if (static_cast<int>(phi.size()) != g.order()) return false;
  for (int v : phi)
    if (v < 0 || v >= h.order()) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
  return true;
}

bool is_injective(const ElementMap& phi) {
  std::set<int> image(phi.begin(), phi.end());
  return image.size() == phi.size();
}

ElementMap compose(const ElementMap& phi, const ElementMap& psi) {
  ElementMap out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = psi[phi[i]];
  return out;
}

ElementMap identity_map(int n) {
  ElementMap out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

ElementMap inverse_map(const ElementMap& bijection) {
  ElementMap out(bijection.size(), -1);
  for (std::size_t i = 0; i < bijection.size(); ++i) out[bijection[i]] = static_cast<int>(i);
  return out;
}

namespace {

std::vector<std::pair<int, int>> class_profile(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& cls : g.classes())
    out.emplace_back(static_cast<int>(cls.size()), g.element_order(cls.front()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> order_multiset(const FiniteGroup& g) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) out.push_back(g.element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

// Backtracking search for bijective homomorphisms g -> h sending gens[i] to an element
// with the same order and class size. Calls visit(map) for each; stops when visit
// returns false.
template <class Visit>
void search_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, Visit&& visit) {
  const auto gens = greedy_generators(g);
  std::vector<std::vector<int>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int o = g.element_order(gens[i]);
    const std::size_t cs = g.classes()[g.class_of(gens[i])].size();
    for (int y = 0; y < h.order(); ++y)
      if (h.element_order(y) == o && h.classes()[h.class_of(y)].size() == cs) candidates[i].push_back(y);
  }
  std::vector<int> images;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      auto phi = extend_to_homomorphism(g, gens, images, h);
      if (phi && is_injective(*phi) && !visit(*phi)) stop = true;
      return;
    }
    for (int y : candidates[depth]) {
      images.push_back(y);
      std::span<const int> prefix(gens.data(), depth + 1);
      if (extend_to_homomorphism(g, prefix, images, h)) self(self, depth + 1);
      images.pop_back();
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<ElementMap> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g == h) return identity_map(g.order());
  if (order_multiset(g) != order_multiset(h)) return std::nullopt;
  if (class_profile(g) != class_profile(h)) return std::nullopt;
  std::optional<ElementMap> found;
  search_isomorphisms(g, h, [&](const ElementMap& phi) {
    found = phi;
    return false;
  });
  return found;
}

std::vector<ElementMap> automorphisms(const FiniteGroup& g) {
  std::vector<ElementMap> out;
  search_isomorphisms(g, g, [&](const ElementMap& phi) {
    out.push_back(phi);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.order() * h.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a1 = 0; a1 < g.order(); ++a1)
    for (int b1 = 0; b1 < h.order(); ++b1) {
      const int x = a1 * h.order() + b1;
      labels[x] = "(" + g.labels()[a1] + "," + h.labels()[b1] + ")";
      for (int a2 = 0; a2 < g.order(); ++a2)
        for (int b2 = 0; b2 < h.order(); ++b2)
          table[x][a2 * h.order() + b2] = g.mul(a1, a2) * h.order() + h.mul(b1, b2);
    }
  return FiniteGroup(std::move(table), std::move(labels));
}

}  // namespace orbicalc
