#include "orbicalc/category.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace orbicalc {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, const std::vector<ArrowSpec>& arrows,
                               const std::vector<std::array<std::string, 3>>& compose)
    : objects_(std::move(objects)) {
  const int n = static_cast<int>(objects_.size());
  if (n == 0) throw DomainError("category", "a category needs at least one object");
  if (std::set<std::string>(objects_.begin(), objects_.end()).size() != objects_.size())
    throw DomainError("category", "duplicate object name");
  for (int x = 0; x < n; ++x) arrows_.push_back({"id_" + objects_[x], x, x});
  for (const auto& a : arrows) {
    for (const auto& existing : arrows_)
      if (existing.name == a.name) throw DomainError("category", "duplicate arrow name " + a.name);
    arrows_.push_back({a.name, object_index(a.src), object_index(a.dst)});
  }
  const std::size_t m = arrows_.size();
  table_.assign(m * m, -1);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      if (arrows_[f].dst != arrows_[g].src) continue;
      if (is_identity(static_cast<int>(f))) table_[f * m + g] = static_cast<int>(g);
      else if (is_identity(static_cast<int>(g))) table_[f * m + g] = static_cast<int>(f);
    }
  for (const auto& [a, b, c] : compose) {
    const int f = arrow_index(a), g = arrow_index(b), h = arrow_index(c);
    if (is_identity(f) || is_identity(g)) throw DomainError("category", "composites with identities are implicit");
    if (arrows_[f].dst != arrows_[g].src) throw DomainError("category", a + " then " + b + " is not composable");
    if (arrows_[h].src != arrows_[f].src || arrows_[h].dst != arrows_[g].dst)
      throw DomainError("category", a + " then " + b + " has the wrong endpoints");
    if (table_[f * m + g] >= 0) throw DomainError("category", "duplicate composite for " + a + " then " + b);
    table_[f * m + g] = h;
  }
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (arrows_[f].dst == arrows_[g].src && table_[f * m + g] < 0)
        throw DomainError("category", "missing composite " + arrows_[f].name + " then " + arrows_[g].name);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      const int fg = table_[f * m + g];
      if (fg < 0) continue;
      for (std::size_t h = 0; h < m; ++h) {
        if (arrows_[g].dst != arrows_[h].src) continue;
        if (table_[fg * m + h] != table_[f * m + table_[g * m + h]])
          throw DomainError("associativity", "composition is not associative at " + arrows_[f].name + ", " +
                                                 arrows_[g].name + ", " + arrows_[h].name);
      }
    }
  homs_.resize(static_cast<std::size_t>(n) * n);
  for (std::size_t f = 0; f < m; ++f) homs_[arrows_[f].src * n + arrows_[f].dst].push_back(static_cast<int>(f));
}

int FiniteCategory::then(int f, int g) const {
  const int h = table_[f * arrows_.size() + g];
  if (h < 0) throw DomainError("composable", arrows_[f].name + " then " + arrows_[g].name + " is not composable");
  return h;
}

int FiniteCategory::object_index(const std::string& name) const {
  const auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) throw DomainError("category", "unknown object " + name);
  return static_cast<int>(it - objects_.begin());
}

int FiniteCategory::arrow_index(const std::string& name) const {
  for (std::size_t f = 0; f < arrows_.size(); ++f)
    if (arrows_[f].name == name) return static_cast<int>(f);
  throw DomainError("category", "unknown arrow " + name);
}

FiniteCategory group_category(const FiniteGroup& g, const std::string& object) {
  auto name = [&](int x) { return x == g.identity() ? "id_" + object : "g" + std::to_string(x); };
  std::vector<ArrowSpec> arrows;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity()) arrows.push_back({name(x), object, object});
  std::vector<std::array<std::string, 3>> compose;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (x != g.identity() && y != g.identity()) compose.push_back({name(x), name(y), name(g.mul(y, x))});
  return FiniteCategory({object}, arrows, compose);
}

FiniteCategory free_category(const std::vector<std::string>& objects, const std::vector<ArrowSpec>& edges) {
  struct Path {
    std::vector<std::size_t> edges;
    std::string src, dst, name;
  };
  std::vector<Path> paths;
  for (std::size_t e = 0; e < edges.size(); ++e) paths.push_back({{e}, edges[e].src, edges[e].dst, edges[e].name});
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].edges.size() > edges.size()) throw DomainError("acyclic", "free category on a graph with a cycle");
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].src == paths[i].dst) {
        Path p = paths[i];
        p.edges.push_back(e);
        p.dst = edges[e].dst;
        p.name += "." + edges[e].name;
        paths.push_back(std::move(p));
      }
  }
  std::vector<ArrowSpec> arrows;
  std::map<std::vector<std::size_t>, std::string> by_edges;
  for (const auto& p : paths) {
    arrows.push_back({p.name, p.src, p.dst});
    by_edges[p.edges] = p.name;
  }
  std::vector<std::array<std::string, 3>> compose;
  for (const auto& p : paths)
    for (const auto& q : paths)
      if (p.dst == q.src) {
        auto joined = p.edges;
        joined.insert(joined.end(), q.edges.begin(), q.edges.end());
        compose.push_back({p.name, q.name, by_edges.at(joined)});
      }
  return FiniteCategory(objects, arrows, compose);
}

FiniteCategory poset_category(int n, const std::vector<std::pair<int, int>>& relations) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) le[i][i] = true;
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("poset", "relation outside the object range");
    le[a][b] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j] && le[j][i]) throw DomainError("poset", "relations contain a cycle");
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back(std::to_string(i));
  auto name = [](int a, int b) { return std::to_string(a) + "<" + std::to_string(b); };
  std::vector<ArrowSpec> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && le[i][j]) arrows.push_back({name(i, j), objects[i], objects[j]});
  std::vector<std::array<std::string, 3>> compose;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (i != j && j != k && le[i][j] && le[j][k]) compose.push_back({name(i, j), name(j, k), name(i, k)});
  return FiniteCategory(objects, arrows, compose);
}

CategoryFile parse_category_json(const nlohmann::json& doc) {
  try {
    const auto objects = doc.at("objects").get<std::vector<std::string>>();
    std::vector<ArrowSpec> arrows;
    for (const auto& a : doc.value("arrows", nlohmann::json::array()))
      arrows.push_back({a.at("name").get<std::string>(), a.at("src").get<std::string>(), a.at("dst").get<std::string>()});
    std::vector<std::array<std::string, 3>> compose;
    for (const auto& t : doc.value("compose", nlohmann::json::array())) {
      if (!t.is_array() || t.size() != 3) throw DomainError("category-file", "compose entries are [a, b, c]");
      compose.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
    }
    FiniteCategory c(objects, arrows, compose);
    ArrowClass w = identities_only(c);
    if (doc.contains("W")) {
      const auto named = arrow_class(c, doc.at("W").get<std::vector<std::string>>());
      w = named;
    }
    return {std::move(c), std::move(w)};
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("category-file", std::string("malformed category file: ") + e.what());
  }
}

CategoryFile load_category_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("category-file", "cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("category-file", "malformed JSON in " + path + ": " + e.what());
  }
  return parse_category_json(doc);
}

nlohmann::ordered_json category_to_json(const FiniteCategory& c, const std::vector<int>& w) {
  nlohmann::ordered_json out;
  out["objects"] = c.objects();
  out["arrows"] = nlohmann::ordered_json::array();
  for (std::size_t f = c.object_count(); f < c.arrow_count(); ++f) {
    const auto& a = c.arrow(static_cast<int>(f));
    out["arrows"].push_back({{"name", a.name}, {"src", c.objects()[a.src]}, {"dst", c.objects()[a.dst]}});
  }
  out["compose"] = nlohmann::ordered_json::array();
  for (std::size_t f = c.object_count(); f < c.arrow_count(); ++f)
    for (std::size_t g = c.object_count(); g < c.arrow_count(); ++g)
      if (c.arrow(static_cast<int>(f)).dst == c.arrow(static_cast<int>(g)).src)
        out["compose"].push_back({c.arrow(static_cast<int>(f)).name, c.arrow(static_cast<int>(g)).name,
                                  c.arrow(c.then(static_cast<int>(f), static_cast<int>(g))).name});
  out["W"] = nlohmann::ordered_json::array();
  for (int f : w) out["W"].push_back(c.arrow(f).name);
  return out;
}

ArrowClass identities_only(const FiniteCategory& c) {
  ArrowClass w(c.object_count());
  std::iota(w.begin(), w.end(), 0);
  return w;
}

ArrowClass arrow_class(const FiniteCategory& c, const std::vector<std::string>& names) {
  ArrowClass w;
  for (const auto& n : names) w.push_back(c.arrow_index(n));
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

namespace {

bool in_w(const ArrowClass& w, int f) { return std::binary_search(w.begin(), w.end(), f); }

std::vector<int> w_into(const FiniteCategory& c, const ArrowClass& w, int x) {
  std::vector<int> out;
  for (int s : w)
    if (c.arrow(s).dst == x) out.push_back(s);
  return out;
}

std::vector<int> arrows_into(const FiniteCategory& c, int x) {
  std::vector<int> out;
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    if (c.arrow(static_cast<int>(f)).dst == x) out.push_back(static_cast<int>(f));
  return out;
}

}  // namespace

RmsVerdict check_right_multiplicative(const FiniteCategory& c, const ArrowClass& w) {
  auto name = [&](int f) { return c.arrow(f).name; };
  for (int f : w)
    if (f < 0 || f >= static_cast<int>(c.arrow_count())) throw DomainError("arrow-class", "W holds an unknown arrow");
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (!in_w(w, c.identity(static_cast<int>(x)))) return {false, "identities", {name(static_cast<int>(x))}};
  for (int f : w)
    for (int g : w)
      if (c.arrow(f).dst == c.arrow(g).src && !in_w(w, c.then(f, g))) return {false, "composition", {name(f), name(g)}};

  for (int s : w) {
    const int b = c.arrow(s).src, d = c.arrow(s).dst;
    for (int f : arrows_into(c, d)) {
      const int cc = c.arrow(f).src;
      bool found = false;
      for (int s2 : w_into(c, w, cc)) {
        for (int g : c.hom(c.arrow(s2).src, b))
          if (c.then(g, s) == c.then(s2, f)) {
            found = true;
            break;
          }
        if (found) break;
      }
      if (!found) return {false, "ore", {name(f), name(s)}};
    }
  }

  for (int s : w) {
    const int b = c.arrow(s).src;
    for (std::size_t cc = 0; cc < c.object_count(); ++cc) {
      const auto& par = c.hom(static_cast<int>(cc), b);
      for (std::size_t i = 0; i < par.size(); ++i)
        for (std::size_t j = i + 1; j < par.size(); ++j) {
          const int f1 = par[i], f2 = par[j];
          if (c.then(f1, s) != c.then(f2, s)) continue;
          bool found = false;
          for (int s2 : w_into(c, w, static_cast<int>(cc)))
            if (c.then(s2, f1) == c.then(s2, f2)) {
              found = true;
              break;
            }
          if (!found) return {false, "cancellability", {name(f1), name(f2), name(s)}};
        }
    }
  }
  return {};
}

bool over_category_filtered(const FiniteCategory& c, const ArrowClass& w, int x) {
  const auto objs = w_into(c, w, x);
  if (objs.empty()) return false;
  // arrows (Z', s') -> (Z, s) over X
  auto over = [&](int s2, int s) {
    std::vector<int> out;
    for (int u : c.hom(c.arrow(s2).src, c.arrow(s).src))
      if (c.then(u, s) == s2) out.push_back(u);
    return out;
  };
  for (int s1 : objs)
    for (int s2 : objs) {
      bool cone = false;
      for (int s3 : objs)
        if (!over(s3, s1).empty() && !over(s3, s2).empty()) {
          cone = true;
          break;
        }
      if (!cone) return false;
      const auto par = over(s1, s2);
      for (std::size_t i = 0; i < par.size(); ++i)
        for (std::size_t j = i + 1; j < par.size(); ++j) {
          bool equalized = false;
          for (int s3 : objs) {
            for (int r : over(s3, s1))
              if (c.then(r, par[i]) == c.then(r, par[j])) {
                equalized = true;
                break;
              }
            if (equalized) break;
          }
          if (!equalized) return false;
        }
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void require_rms(const FiniteCategory& c, const ArrowClass& w) {
  const auto v = check_right_multiplicative(c, w);
  if (!v.valid) throw DomainError("rms", "W is not a right multiplicative system (" + v.axiom + " fails)");
}

}  // namespace

Localization::Localization(const FiniteCategory& c, const ArrowClass& w) : c_(c), n_(c.object_count()) {
  require_rms(c, w);
  homs_.resize(n_ * n_);
  labels_.resize(n_ * n_);
  spans_in_.resize(n_);
  for (std::size_t x = 0; x < n_; ++x) spans_in_[x] = w_into(c, w, static_cast<int>(x));
  const std::size_t m = c.arrow_count();
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      // pair (s, f) is flattened to s * m + f; spans are ordered by (s, f) already
      std::vector<Span> spans;
      for (int s : spans_in_[x])
        for (int f : c.hom(c.arrow(s).src, static_cast<int>(y))) spans.push_back({s, f});
      std::map<Span, int> index;
      for (std::size_t i = 0; i < spans.size(); ++i) index.emplace(spans[i], static_cast<int>(i));
      UnionFind uf(spans.size());
      for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto [s, f] = spans[i];
        for (int u : arrows_into(c, c.arrow(s).src)) {
          const int su = c.then(u, s);
          if (!in_w(w, su)) continue;
          uf.unite(static_cast<int>(i), index.at({su, c.then(u, f)}));
        }
      }
      auto& labels = labels_[x * n_ + y];
      labels.assign(m * m, -1);
      std::map<int, int> class_of_root;
      for (std::size_t i = 0; i < spans.size(); ++i) {
        const int r = uf.find(static_cast<int>(i));
        auto [it, fresh] = class_of_root.emplace(r, static_cast<int>(homs_[x * n_ + y].size()));
        if (fresh) homs_[x * n_ + y].push_back(spans[r]);
        labels[spans[i].s * m + spans[i].f] = it->second;
      }
    }
}

int Localization::class_of(int x, int y, const Span& s) const {
  const int k = labels_[x * n_ + y][s.s * c_.arrow_count() + s.f];
  if (k < 0) throw DomainError("span", "not a span from the first object to the second");
  return k;
}

int Localization::compose(int x, int y, int z, int i, int j) const {
  const auto [s, f] = hom(x, y)[i];
  const auto [t, g] = hom(y, z)[j];
  int result = -1;
  for (int s2 : spans_in_[c_.arrow(f).src])
    for (int h : c_.hom(c_.arrow(s2).src, c_.arrow(t).src)) {
      if (c_.then(h, t) != c_.then(s2, f)) continue;
      const int k = class_of(x, z, {c_.then(s2, s), c_.then(h, g)});
      if (result >= 0 && k != result) throw InternalError("localization: composite depends on the Ore square");
      result = k;
    }
  if (result < 0) throw InternalError("localization: no Ore square for a composite");
  return result;
}

int Localization::image(int f) const {
  const auto& a = c_.arrow(f);
  return class_of(a.src, a.dst, {c_.identity(a.src), f});
}

std::vector<Span> localize_hom(const FiniteCategory& c, const ArrowClass& w, int x, int y) {
  return Localization(c, w).hom(x, y);
}

namespace {

std::vector<FiniteCategory> probe_categories() {
  std::vector<FiniteCategory> out;
  out.push_back(poset_category(1, {}));
  out.push_back(poset_category(2, {}));
  out.push_back(poset_category(2, {{0, 1}}));
  out.push_back(FiniteCategory({"a", "b"}, {{"i", "a", "b"}, {"j", "b", "a"}},
                               {{{"i", "j", "id_a"}}, {{"j", "i", "id_b"}}}));
  out.push_back(group_category(group_from_generators(2, {{1, 0}})));
  out.push_back(group_category(group_from_generators(3, {{1, 2, 0}})));
  return out;
}

// Every functor C -> D as (object images, arrow images).
void enumerate_functors(const FiniteCategory& c, const FiniteCategory& d,
                        const std::function<void(const std::vector<int>&)>& visit) {
  const std::size_t n = c.object_count(), m = c.arrow_count();
  std::vector<int> obj(n, 0), arr(m, -1);
  // each composable pair is checked once the largest of f, g and g o f is assigned
  std::vector<std::vector<std::array<int, 3>>> due(m);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g) {
      const int fi = static_cast<int>(f), gi = static_cast<int>(g);
      if (c.arrow(fi).dst != c.arrow(gi).src) continue;
      const int h = c.then(fi, gi);
      due[std::max({fi, gi, h})].push_back({fi, gi, h});
    }
  std::function<void(std::size_t)> assign_arrow = [&](std::size_t f) {
    if (f == m) {
      visit(arr);
      return;
    }
    const auto& a = c.arrow(static_cast<int>(f));
    for (int cand : d.hom(obj[a.src], obj[a.dst])) {
      arr[f] = cand;
      bool ok = true;
      for (const auto& [x, y, h] : due[f])
        if (d.then(arr[x], arr[y]) != arr[h]) {
          ok = false;
          break;
        }
      if (ok) assign_arrow(f + 1);
    }
    arr[f] = -1;
  };
  std::function<void(std::size_t)> assign_object = [&](std::size_t x) {
    if (x == n) {
      for (std::size_t y = 0; y < n; ++y) arr[y] = d.identity(obj[y]);
      for (std::size_t y = 0; y < n; ++y)
        for (const auto& [p, q, h] : due[y])
          if (d.then(arr[p], arr[q]) != arr[h]) return;
      assign_arrow(n);
      return;
    }
    for (std::size_t o = 0; o < d.object_count(); ++o) {
      obj[x] = static_cast<int>(o);
      assign_object(x + 1);
    }
  };
  assign_object(0);
}

int inverse_in(const FiniteCategory& d, int f) {
  const auto& a = d.arrow(f);
  for (int g : d.hom(a.dst, a.src))
    if (d.then(f, g) == d.identity(a.src) && d.then(g, f) == d.identity(a.dst)) return g;
  return -1;
}

}  // namespace

UniversalPropertyReport verify_universal_property(const FiniteCategory& c, const ArrowClass& w) {
  if (c.arrow_count() > 12) throw DomainError("cap", "universal-property check limited to 12 arrows");
  const Localization loc(c, w);
  UniversalPropertyReport report;
  const int n = static_cast<int>(c.object_count());
  auto fail = [&](std::string why) {
    report.holds = false;
    report.failure = std::move(why);
    return report;
  };

  // composition table of the localization, and its category laws
  std::map<std::array<int, 5>, int> comp;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (std::size_t i = 0; i < loc.hom(x, y).size(); ++i)
          for (std::size_t j = 0; j < loc.hom(y, z).size(); ++j)
            comp[{x, y, z, static_cast<int>(i), static_cast<int>(j)}] =
                loc.compose(x, y, z, static_cast<int>(i), static_cast<int>(j));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t i = 0; i < loc.hom(x, y).size(); ++i) {
        const int ii = static_cast<int>(i);
        if (comp.at({x, x, y, loc.image(c.identity(x)), ii}) != ii ||
            comp.at({x, y, y, ii, loc.image(c.identity(y))}) != ii)
          return fail("identity law fails in the localization");
        for (int z = 0; z < n; ++z)
          for (std::size_t j = 0; j < loc.hom(y, z).size(); ++j)
            for (int v = 0; v < n; ++v)
              for (std::size_t k = 0; k < loc.hom(z, v).size(); ++k) {
                const int jj = static_cast<int>(j), kk = static_cast<int>(k);
                if (comp.at({x, z, v, comp.at({x, y, z, ii, jj}), kk}) != comp.at({x, y, v, ii, comp.at({y, z, v, jj, kk})}))
                  return fail("composition in the localization is not associative");
              }
      }
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    for (std::size_t g = 0; g < c.arrow_count(); ++g) {
      const auto& a = c.arrow(static_cast<int>(f));
      const auto& b = c.arrow(static_cast<int>(g));
      if (a.dst != b.src) continue;
      if (loc.image(c.then(static_cast<int>(f), static_cast<int>(g))) !=
          comp.at({a.src, a.dst, b.dst, loc.image(static_cast<int>(f)), loc.image(static_cast<int>(g))}))
        return fail("the localization functor does not preserve composition");
    }
  // Q(s) is invertible with inverse [s, id]; every class [s, f] equals [s, id] then Q(f).
  for (int s : w) {
    const auto& a = c.arrow(s);
    const int inv = loc.class_of(a.dst, a.src, {s, c.identity(a.src)});
    if (comp.at({a.src, a.dst, a.src, loc.image(s), inv}) != loc.image(c.identity(a.src)) ||
        comp.at({a.dst, a.src, a.dst, inv, loc.image(s)}) != loc.image(c.identity(a.dst)))
      return fail("an arrow of W does not become invertible");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (std::size_t k = 0; k < loc.hom(x, y).size(); ++k) {
        const auto [s, f] = loc.hom(x, y)[k];
        const int z = c.arrow(s).src;
        const int inv = loc.class_of(x, z, {s, c.identity(z)});
        if (comp.at({x, z, y, inv, loc.image(f)}) != static_cast<int>(k))
          return fail("a class is not generated by C and inverses of W");
      }

  // Each W-inverting probe functor F factors as F(f) F(s)^-1, uniquely by the generation check above.
  for (const auto& d : probe_categories()) {
    bool ok = true;
    enumerate_functors(c, d, [&](const std::vector<int>& arr) {
      if (!ok) return;
      std::vector<int> inv(c.arrow_count(), -1);
      for (int s : w)
        if ((inv[s] = inverse_in(d, arr[s])) < 0) return;
      ++report.functors_checked;
      std::map<std::array<int, 3>, int> bar;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int s : w) {
            if (c.arrow(s).dst != x) continue;
            for (int f : c.hom(c.arrow(s).src, y)) {
              const int value = d.then(inv[s], arr[f]);
              const auto [it, fresh] = bar.emplace(std::array<int, 3>{x, y, loc.class_of(x, y, {s, f})}, value);
              if (!fresh && it->second != value) ok = false;
            }
          }
      for (const auto& [key, k] : comp)
        if (d.then(bar.at({key[0], key[1], key[3]}), bar.at({key[1], key[2], key[4]})) != bar.at({key[0], key[2], k}))
          ok = false;
    });
    if (!ok) return fail("a W-inverting functor does not factor through the localization");
  }
  report.holds = true;
  return report;
}

std::vector<NamedCategory> category_corpus() {
  std::vector<NamedCategory> out;
  auto add = [&](std::string name, FiniteCategory c, const std::vector<std::string>& w_names) {
    auto w = identities_only(c);
    for (int f : arrow_class(c, w_names)) w.push_back(f);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    out.push_back({std::move(name), std::move(c), std::move(w)});
  };
  const auto c2 = group_from_generators(2, {{1, 0}});
  const auto c3 = group_from_generators(3, {{1, 2, 0}});
  const auto c4 = group_from_generators(4, {{1, 2, 3, 0}});
  const auto v4 = group_from_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
  const auto s3 = group_from_generators(3, {{1, 0, 2}, {1, 2, 0}});
  auto all_arrows = [](const FiniteCategory& c) {
    std::vector<std::string> names;
    for (std::size_t f = 0; f < c.arrow_count(); ++f) names.push_back(c.arrow(static_cast<int>(f)).name);
    return names;
  };
  const FiniteCategory iso({"a", "b"}, {{"i", "a", "b"}, {"j", "b", "a"}}, {{{"i", "j", "id_a"}}, {{"j", "i", "id_b"}}});

  add("point", poset_category(1, {}), {});
  add("arrow", poset_category(2, {{0, 1}}), {});
  add("arrow-inverted", poset_category(2, {{0, 1}}), {"0<1"});
  add("chain3", poset_category(3, {{0, 1}, {1, 2}}), {});
  add("chain3-second-leg", poset_category(3, {{0, 1}, {1, 2}}), {"1<2"});
  add("chain3-inverted", poset_category(3, {{0, 1}, {1, 2}}), {"0<1", "1<2", "0<2"});
  add("chain4", poset_category(4, {{0, 1}, {1, 2}, {2, 3}}), {});
  add("diamond", poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), {});
  add("square-verticals", poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), {"0<2", "1<3"});
  add("walking-iso", iso, {});
  add("walking-iso-inverted", iso, {"i", "j"});
  add("c2", group_category(c2), {});
  add("c2-inverted", group_category(c2), all_arrows(group_category(c2)));
  add("c3-inverted", group_category(c3), all_arrows(group_category(c3)));
  add("c4", group_category(c4), {});
  add("v4-inverted", group_category(v4), all_arrows(group_category(v4)));
  add("s3", group_category(s3), {});
  add("parallel-pair", free_category({"0", "1"}, {{"a", "0", "1"}, {"b", "0", "1"}}), {});
  add("span", free_category({"0", "1", "2"}, {{"p", "2", "0"}, {"q", "2", "1"}}), {});
  add("fork", free_category({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "0", "1"}, {"c", "1", "2"}}), {});
  return out;
}

}  // namespace orbicalc
