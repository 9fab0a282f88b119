#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbicalc/errors.hpp"
#include "orbicalc/group.hpp"

namespace orbicalc {

struct ArrowSpec {
  std::string name;
  std::string src;
  std::string dst;
};

/// A category with finitely many objects and arrows. Identities are implicit and
/// named "id_<object>"; arrow ids 0..n-1 index the identities in object order.
class FiniteCategory {
 public:
  struct Arrow {
    std::string name;
    int src = 0;
    int dst = 0;
  };

  /// `compose` lists [a, b, c] meaning "a then b" equals c, for every composable
  /// pair of non-identity arrows. Throws DomainError on unknown names, duplicate or
  /// missing entries, or failure of associativity.
  FiniteCategory(std::vector<std::string> objects, const std::vector<ArrowSpec>& arrows,
                 const std::vector<std::array<std::string, 3>>& compose);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<std::string>& objects() const { return objects_; }
  const Arrow& arrow(int f) const { return arrows_[f]; }
  int identity(int x) const { return x; }
  bool is_identity(int f) const { return f < static_cast<int>(objects_.size()); }

  /// g o f; throws DomainError unless dst(f) = src(g).
  int then(int f, int g) const;
  /// Arrows x -> y in id order.
  const std::vector<int>& hom(int x, int y) const { return homs_[x * objects_.size() + y]; }

  int object_index(const std::string& name) const;
  int arrow_index(const std::string& name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> table_;  ///< table_[f * |arrows| + g] = g o f, or -1
  std::vector<std::vector<int>> homs_;
};

/// One-object category whose arrows are the group elements.
FiniteCategory group_category(const FiniteGroup& g, const std::string& object = "*");

/// Free category on an acyclic graph: arrows are the nonempty directed paths, named by
/// their edges joined with '.'. Throws DomainError("acyclic") on a cycle.
FiniteCategory free_category(const std::vector<std::string>& objects, const std::vector<ArrowSpec>& edges);

/// Poset on objects 0..n-1 generated by the given order relations (a <= b), with arrows "a<b".
FiniteCategory poset_category(int n, const std::vector<std::pair<int, int>>& relations);

/// Reads {objects, arrows: [{name, src, dst}], compose: [[a, b, c]], W: [names]}.
/// The W list is optional and returned separately.
struct CategoryFile {
  FiniteCategory category;
  std::vector<int> w;
};
CategoryFile parse_category_json(const nlohmann::json& doc);
CategoryFile load_category_file(const std::string& path);
nlohmann::ordered_json category_to_json(const FiniteCategory& c, const std::vector<int>& w);

/// Sorted, deduplicated arrow ids.
using ArrowClass = std::vector<int>;
ArrowClass identities_only(const FiniteCategory& c);
ArrowClass arrow_class(const FiniteCategory& c, const std::vector<std::string>& names);

struct RmsVerdict {
  bool valid = true;
  std::string axiom;                 ///< "identities", "composition", "ore" or "cancellability"
  std::vector<std::string> witness;  ///< arrow names of the violating diagram
};

/// Exhaustive check of the three axioms. Ore: for f: C -> D and w: B -> D in W there
/// are w': A -> C in W and g: A -> B with w o g = f o w'. Cancellability: if
/// w o f1 = w o f2 for f1, f2: C -> B and w in W, some w': A -> C in W has f1 o w' = f2 o w'.
RmsVerdict check_right_multiplicative(const FiniteCategory& c, const ArrowClass& w);

/// The full subcategory {Z -> X in W} of the over-category is cofiltered: nonempty,
/// any two objects admit a common source, and parallel arrows are equalized from above.
/// This is the shape over which Hom(-, Y) is a filtered colimit.
bool over_category_filtered(const FiniteCategory& c, const ArrowClass& w, int x);

/// A morphism X -> Y of the localization, carried by the least span (s: Z -> X in W, f: Z -> Y).
struct Span {
  int s = 0;
  int f = 0;
  friend auto operator<=>(const Span&, const Span&) = default;
};

/// Classes of spans X <- Z -> Y, identified along arrows u: (Z', s') -> (Z, s) over X
/// by (s, f) ~ (s', f o u). Throws DomainError("rms") unless W is a right multiplicative system.
std::vector<Span> localize_hom(const FiniteCategory& c, const ArrowClass& w, int x, int y);

/// The localized category assembled from localize_hom, with composition through Ore squares.
class Localization {
 public:
  Localization(const FiniteCategory& c, const ArrowClass& w);

  const std::vector<Span>& hom(int x, int y) const { return homs_[x * n_ + y]; }
  /// Index in hom(x, y) of the class of an arbitrary span.
  int class_of(int x, int y, const Span& s) const;
  /// Index in hom(x, z) of (class j of y -> z) after (class i of x -> y).
  int compose(int x, int y, int z, int i, int j) const;
  /// The image of an arrow of C.
  int image(int f) const;

 private:
  const FiniteCategory& c_;
  std::size_t n_;
  std::vector<std::vector<Span>> homs_;
  std::vector<std::vector<int>> labels_;  ///< per (x, y): class index of each (s, f) pair
  std::vector<std::vector<int>> spans_in_;
};

struct UniversalPropertyReport {
  bool holds = false;
  std::size_t functors_checked = 0;  ///< W-inverting functors into the probe categories
  std::string failure;
};

/// Checks that the localization is a category in which the image of W is invertible and
/// every class equals Q(f) Q(s)^-1, then enumerates functors from C to small probe
/// categories (at most two objects) that invert W and confirms each factors through the
/// localization: F(f) F(s)^-1 is constant on classes and compatible with composition.
/// Throws DomainError("cap") above 12 arrows and DomainError("rms") for an invalid W.
UniversalPropertyReport verify_universal_property(const FiniteCategory& c, const ArrowClass& w);

struct NamedCategory {
  std::string name;
  FiniteCategory category;
  ArrowClass w;  ///< a right multiplicative system on it
};

/// Twenty small categories with at most 12 arrows, each with a valid W.
std::vector<NamedCategory> category_corpus();

}  // namespace orbicalc
