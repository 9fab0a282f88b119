#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "orbicalc/corpus.hpp"
#include "orbicalc/homs.hpp"
#include "orbicalc/snf.hpp"

namespace orbicalc {

/// Groups of order <= N up to isomorphism, with conjugacy classes of injective
/// homomorphisms as morphisms.
struct QuotientCategory {
  int max_order = 0;
  std::vector<NamedGroup> objects;  ///< ordered by (order, name); object 0 is the trivial group
  /// arrows[a * n + b]: injective classes from object a to object b
  std::vector<std::vector<HomClass>> arrows;
  /// composition[(a * n + b) * n + c][i * |arrows(b, c)| + j]: class of arrow j (b -> c)
  /// after arrow i (a -> b)
  std::vector<std::vector<int>> composition;

  std::size_t size() const { return objects.size(); }
  const std::vector<HomClass>& hom(int a, int b) const { return arrows[a * size() + b]; }
  int compose(int a, int b, int c, int i, int j) const;
  /// Index of the identity class in hom(a, a).
  int identity(int a) const;
};

/// Objects are read from the corpus. Composition is verified independent of the
/// chosen representatives, associative and unital, and the trivial group initial.
/// Throws DomainError("cap") unless 1 <= N <= 12.
QuotientCategory build_quotient_category(int max_order, const std::string& corpus_dir = corpus_directory());

/// Proper: only injections that are not isomorphisms (strictly increasing order).
/// AllInjections: automorphism classes too.
enum class ArrowFilter { Proper, AllInjections };

struct NerveLimits {
  std::size_t max_cells = 2'000'000;
};

/// A chain G_0 -> ... -> G_p of non-identity arrows; its isotropy group is G_0.
struct Cell {
  std::vector<int> objects;  ///< p + 1 object indices
  std::vector<int> arrows;   ///< arrows[i] indexes hom(objects[i], objects[i + 1])

  int isotropy() const { return objects.front(); }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellCensus {
  int max_order = 0;
  int max_dim = 0;
  std::vector<std::vector<Cell>> cells;  ///< per dimension 0..k, sorted
};

CellCensus cell_census(const QuotientCategory& cat, int max_dim, ArrowFilter filter = ArrowFilter::Proper,
                       const NerveLimits& limits = {});

/// Normalized chains of the nerve: face d_i drops an end object (i = 0, p) or composes
/// arrows i - 1 and i; faces containing an identity are degenerate and sent to zero.
ChainComplex nerve_chain_complex(const QuotientCategory& cat, int max_dim, ArrowFilter filter = ArrowFilter::Proper,
                                 const NerveLimits& limits = {});

ChainComplex nerve_chain_complex(const QuotientCategory& cat, const CellCensus& census);

}  // namespace orbicalc
