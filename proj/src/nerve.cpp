#include "orbicalc/nerve.hpp"

#include <algorithm>
#include <map>

#include "orbicalc/errors.hpp"

namespace orbicalc {

int QuotientCategory::compose(int a, int b, int c, int i, int j) const {
  const std::size_t n = size();
  return composition[(a * n + b) * n + c][i * hom(b, c).size() + j];
}

int QuotientCategory::identity(int a) const {
  const auto& h = hom(a, a);
  const auto id = identity_map(objects[a].group.order());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i].representative == id) return static_cast<int>(i);
  throw InternalError("quotient category: missing identity class");
}

QuotientCategory build_quotient_category(int max_order, const std::string& corpus_dir) {
  if (max_order < 1 || max_order > 12)
    throw DomainError("cap", "quotient category supports 1 <= N <= 12 (corpus completeness)");
  QuotientCategory cat;
  cat.max_order = max_order;
  cat.objects = corpus_groups_up_to(max_order, corpus_dir);
  const std::size_t n = cat.size();
  if (n == 0 || cat.objects[0].group.order() != 1) throw DomainError("corpus", "corpus lacks the trivial group");

  cat.arrows.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ga = cat.objects[a].group;
      const auto& gb = cat.objects[b].group;
      if (gb.order() % ga.order() == 0) cat.arrows[a * n + b] = rep_hom_classes(ga, gb).injective;
    }
  for (std::size_t b = 0; b < n; ++b)
    if (cat.hom(0, static_cast<int>(b)).size() != 1)
      throw InternalError("quotient category: trivial group is not initial");

  cat.composition.resize(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& ab = cat.arrows[a * n + b];
        const auto& bc = cat.arrows[b * n + c];
        const auto& ac = cat.arrows[a * n + c];
        if (ab.empty() || bc.empty()) continue;
        const auto& gb = cat.objects[b].group;
        const auto& gc = cat.objects[c].group;
        auto& table = cat.composition[(a * n + b) * n + c];
        table.assign(ab.size() * bc.size(), -1);
        for (std::size_t i = 0; i < ab.size(); ++i)
          for (std::size_t j = 0; j < bc.size(); ++j) {
            const auto& phi = ab[i].representative;
            const auto& psi = bc[j].representative;
            const int k = find_class(ac, gc, compose(phi, psi));
            if (k < 0) throw InternalError("quotient category: composite of injections is not injective");
            // every conjugate of either representative lands in the same class
            for (int x = 0; x < gb.order(); ++x) {
              ElementMap phi_x(phi.size());
              for (std::size_t e = 0; e < phi.size(); ++e) phi_x[e] = gb.conj(x, phi[e]);
              if (find_class(ac, gc, compose(phi_x, psi)) != k)
                throw InternalError("quotient category: composition depends on the representative");
            }
            for (int y = 0; y < gc.order(); ++y) {
              ElementMap psi_y(psi.size());
              for (std::size_t e = 0; e < psi.size(); ++e) psi_y[e] = gc.conj(y, psi[e]);
              if (find_class(ac, gc, compose(phi, psi_y)) != k)
                throw InternalError("quotient category: composition depends on the representative");
            }
            table[i * bc.size() + j] = k;
          }
      }

  for (std::size_t a = 0; a < n; ++a) {
    const int ia = static_cast<int>(a);
    const int id_a = cat.identity(ia);
    for (std::size_t b = 0; b < n; ++b) {
      const int ib = static_cast<int>(b);
      const auto& ab = cat.hom(ia, ib);
      for (std::size_t i = 0; i < ab.size(); ++i) {
        const int ii = static_cast<int>(i);
        if (cat.compose(ia, ia, ib, id_a, ii) != ii || cat.compose(ia, ib, ib, ii, cat.identity(ib)) != ii)
          throw InternalError("quotient category: identity law fails");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          const int ia = static_cast<int>(a), ib = static_cast<int>(b), ic = static_cast<int>(c),
                    id = static_cast<int>(d);
          const auto nab = cat.hom(ia, ib).size(), nbc = cat.hom(ib, ic).size(), ncd = cat.hom(ic, id).size();
          for (std::size_t i = 0; i < nab; ++i)
            for (std::size_t j = 0; j < nbc; ++j)
              for (std::size_t k = 0; k < ncd; ++k) {
                const int ij = cat.compose(ia, ib, ic, static_cast<int>(i), static_cast<int>(j));
                const int jk = cat.compose(ib, ic, id, static_cast<int>(j), static_cast<int>(k));
                if (cat.compose(ia, ic, id, ij, static_cast<int>(k)) != cat.compose(ia, ib, id, static_cast<int>(i), jk))
                  throw InternalError("quotient category: composition is not associative");
              }
        }
  return cat;
}

namespace {

bool admissible(const QuotientCategory& cat, int a, int b, int i, ArrowFilter filter) {
  if (a == b && cat.identity(a) == i) return false;
  if (filter == ArrowFilter::Proper) return cat.objects[a].group.order() < cat.objects[b].group.order();
  return true;
}

}  // namespace

CellCensus cell_census(const QuotientCategory& cat, int max_dim, ArrowFilter filter, const NerveLimits& limits) {
  if (max_dim < 0) throw DomainError("nerve-dimension", "dimension bound must be nonnegative");
  CellCensus census;
  census.max_order = cat.max_order;
  census.max_dim = max_dim;
  const int n = static_cast<int>(cat.size());
  std::vector<Cell> layer;
  for (int a = 0; a < n; ++a) layer.push_back(Cell{{a}, {}});
  std::size_t total = layer.size();
  census.cells.push_back(layer);
  for (int p = 1; p <= max_dim; ++p) {
    std::vector<Cell> next;
    for (const auto& cell : layer) {
      const int a = cell.objects.back();
      for (int b = 0; b < n; ++b) {
        const auto count = static_cast<int>(cat.hom(a, b).size());
        for (int i = 0; i < count; ++i) {
          if (!admissible(cat, a, b, i, filter)) continue;
          Cell c = cell;
          c.objects.push_back(b);
          c.arrows.push_back(i);
          next.push_back(std::move(c));
          if (++total > limits.max_cells)
            throw DomainError("cap", "nerve census exceeds " + std::to_string(limits.max_cells) + " cells");
        }
      }
    }
    std::sort(next.begin(), next.end());
    census.cells.push_back(next);
    layer = std::move(next);
  }
  return census;
}

ChainComplex nerve_chain_complex(const QuotientCategory& cat, const CellCensus& census) {
  ChainComplex cc;
  for (const auto& cells : census.cells) cc.ranks.push_back(cells.size());
  for (std::size_t p = 1; p < census.cells.size(); ++p) {
    const auto& lower = census.cells[p - 1];
    IntMatrix d(lower.size(), census.cells[p].size());
    auto add = [&](const Cell& face, std::size_t col, int sign) {
      for (std::size_t t = 0; t < face.arrows.size(); ++t)
        if (face.objects[t] == face.objects[t + 1] && cat.identity(face.objects[t]) == face.arrows[t]) return;
      const auto it = std::lower_bound(lower.begin(), lower.end(), face);
      if (it == lower.end() || *it != face) throw InternalError("nerve: face missing from the census");
      d(static_cast<std::size_t>(it - lower.begin()), col) += sign;
    };
    for (std::size_t col = 0; col < census.cells[p].size(); ++col) {
      const Cell& s = census.cells[p][col];
      for (std::size_t i = 0; i <= p; ++i) {
        Cell face;
        if (i == 0 || i == p) {
          const std::size_t drop = i == 0 ? 0 : p;
          face = s;
          face.objects.erase(face.objects.begin() + static_cast<long>(drop));
          face.arrows.erase(face.arrows.begin() + static_cast<long>(i == 0 ? 0 : p - 1));
        } else {
          face.objects = s.objects;
          face.objects.erase(face.objects.begin() + static_cast<long>(i));
          face.arrows = s.arrows;
          face.arrows[i - 1] = cat.compose(s.objects[i - 1], s.objects[i], s.objects[i + 1], s.arrows[i - 1], s.arrows[i]);
          face.arrows.erase(face.arrows.begin() + static_cast<long>(i));
        }
        add(face, col, i % 2 == 0 ? 1 : -1);
      }
    }
    cc.boundaries.push_back(std::move(d));
  }
  check_chain_complex(cc);
  return cc;
}

ChainComplex nerve_chain_complex(const QuotientCategory& cat, int max_dim, ArrowFilter filter,
                                 const NerveLimits& limits) {
  return nerve_chain_complex(cat, cell_census(cat, max_dim, filter, limits));
}

}  // namespace orbicalc
