#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "orbicalc/character.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/group.hpp"
#include "orbicalc/linalg.hpp"

namespace orbicalc {

enum class EndType { R, C, H };

/// Real dimension of the endomorphism division algebra: 1, 2 or 4.
int end_dimension(EndType t);
std::string to_string(EndType t);

struct RealIrrep {
  int id = 0;
  int real_dimension = 0;
  EndType end_type = EndType::R;
  std::vector<std::size_t> constituents;  ///< one or two complex character indices
  std::vector<Cyclotomic> character;      ///< real-valued, per class
};

/// The real irreducible representations of a group: trivial first, then by
/// (real dimension, end type R < C < H), ties by first complex constituent.
struct RealIrrepTable {
  CharacterTable complex;
  std::vector<int> indicators;  ///< Frobenius-Schur indicator per complex character
  std::vector<RealIrrep> entries;

  std::size_t size() const { return entries.size(); }
  /// Ids of the entries with end type R.
  std::vector<int> real_type_ids() const;
};

RealIrrepTable real_irreps(const FiniteGroup& g);
RealIrrepTable real_irreps(CharacterTable table);

/// Memoized real_irreps keyed by the multiplication table; safe to call concurrently.
std::shared_ptr<const RealIrrepTable> cached_real_irreps(const FiniteGroup& g);

/// Decomposes a real-valued class function into real irreducibles: m_s = <chi, chi_s> / dim End(s).
/// Throws InternalError on a non-integer coefficient.
std::vector<long> real_multiplicities(const RealIrrepTable& t, const std::vector<Cyclotomic>& chi);

/// Class function on K obtained by precomposing a class function on G with phi.
std::vector<Cyclotomic> pull_back(const FiniteGroup& k, const ElementMap& phi, const FiniteGroup& g,
                                  const std::vector<Cyclotomic>& on_g);

/// Multiplicities of the real irreps of K in the restriction of entry `rho` of G along phi.
/// Throws DomainError if phi is not a homomorphism.
std::vector<long> restriction_multiplicities(const FiniteGroup& k, const RealIrrepTable& k_irreps,
                                             const ElementMap& phi, const FiniteGroup& g,
                                             const RealIrrepTable& g_irreps, std::size_t rho);

/// Smallest N such that V + V^2 + ... + V^N contains every irreducible character.
/// `v` is a character given per class. Throws DomainError when v is not a faithful character.
int min_faithful_tensor_power(const FiniteGroup& g, const CharacterTable& t, const std::vector<Cyclotomic>& v);

template <class T>
T scalar_from(const Cyclotomic& x);

template <>
inline Cyclotomic scalar_from<Cyclotomic>(const Cyclotomic& x) {
  return x;
}

template <>
inline Rational scalar_from<Rational>(const Cyclotomic& x) {
  if (!x.is_rational()) throw DomainError("exact-rational", "coefficient " + x.to_string() + " is irrational");
  return x.to_rational();
}

template <>
inline double scalar_from<double>(const Cyclotomic& x) {
  return x.to_complex().real();
}

/// A linear representation given by one matrix per group element.
///
/// Exact for Rational and Cyclotomic scalars; for double every comparison uses
/// the declared relative tolerance.
template <class T>
class MatrixRep {
 public:
  /// Throws DomainError unless the matrices are square of one size, rho(e) = 1 and
  /// rho(x s) = rho(x) rho(s) for every x and every s in a generating set (which
  /// implies multiplicativity on all pairs).
  MatrixRep(const FiniteGroup& g, std::vector<Matrix<T>> images, double tolerance = 1e-9)
      : group_(g), images_(std::move(images)), tolerance_(tolerance) {
    if (images_.size() != static_cast<std::size_t>(g.order()))
      throw DomainError("matrix-rep", "need one matrix per group element");
    const std::size_t d = images_[0].rows();
    if (d == 0) throw DomainError("matrix-rep", "dimension must be positive");
    for (const auto& m : images_)
      if (m.rows() != d || m.cols() != d) throw DomainError("matrix-rep", "matrices must be square of one size");
    if (!close(images_[g.identity()], Matrix<T>::identity(d)))
      throw DomainError("matrix-rep", "identity does not act as the identity matrix");
    for (int s : greedy_generators(g))
      for (int x = 0; x < g.order(); ++x)
        if (!close(images_[x] * images_[s], images_[g.mul(x, s)]))
          throw DomainError("matrix-rep", "rho(gh) != rho(g) rho(h)");
  }

  /// Extends generator images multiplicatively; throws DomainError if they violate a relation.
  static MatrixRep from_generators(const FiniteGroup& g, std::span<const int> gens,
                                   const std::vector<Matrix<T>>& gen_images, double tolerance = 1e-9) {
    if (gens.size() != gen_images.size() || gens.empty())
      throw DomainError("matrix-rep", "generator and image lists must be nonempty and of equal length");
    std::vector<Matrix<T>> images(g.order());
    std::vector<bool> seen(g.order(), false);
    std::vector<int> queue{g.identity()};
    images[g.identity()] = Matrix<T>::identity(gen_images[0].rows());
    seen[g.identity()] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int x = queue[q];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int y = g.mul(x, gens[i]);
        if (seen[y]) continue;
        seen[y] = true;
        images[y] = images[x] * gen_images[i];
        queue.push_back(y);
      }
    }
    if (queue.size() != static_cast<std::size_t>(g.order()))
      throw DomainError("matrix-rep", "generators do not generate the group");
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!approx_equal(images[gens[i]], gen_images[i], tolerance * std::max(1.0, gen_images[i].max_magnitude())))
        throw DomainError("matrix-rep", "generator images violate a group relation");
    return MatrixRep(g, std::move(images), tolerance);
  }

  const FiniteGroup& group() const { return group_; }
  std::size_t dimension() const { return images_[0].rows(); }
  const Matrix<T>& operator()(int x) const { return images_[x]; }
  double tolerance() const { return tolerance_; }

  bool close(const Matrix<T>& a, const Matrix<T>& b) const {
    return approx_equal(a, b, tolerance_ * std::max({1.0, a.max_magnitude(), b.max_magnitude()}));
  }

 private:
  FiniteGroup group_;
  std::vector<Matrix<T>> images_;
  double tolerance_;
};

/// Permutation representation of an action given as one point permutation per element.
template <class T>
MatrixRep<T> permutation_rep(const FiniteGroup& g, const std::vector<Permutation>& action) {
  std::vector<Matrix<T>> images;
  for (const auto& p : action) {
    Matrix<T> m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = T(1);
    images.push_back(std::move(m));
  }
  return MatrixRep<T>(g, std::move(images));
}

/// Left-regular representation.
template <class T>
MatrixRep<T> regular_rep(const FiniteGroup& g) {
  std::vector<Permutation> action(g.order(), Permutation(g.order()));
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) action[x][y] = g.mul(x, y);
  return permutation_rep<T>(g, action);
}

/// Exact character values per class.
template <class T>
std::vector<Cyclotomic> character_of(const MatrixRep<T>& rep) {
  std::vector<Cyclotomic> out;
  for (const auto& cls : rep.group().classes()) {
    const int x = *std::min_element(cls.begin(), cls.end());
    out.push_back(Cyclotomic(rep(x).trace()));
  }
  return out;
}

/// Numeric character values per class (real part; the representations are real).
template <class T>
std::vector<double> numeric_character(const MatrixRep<T>& rep) {
  std::vector<double> out;
  for (const auto& cls : rep.group().classes()) {
    const int x = *std::min_element(cls.begin(), cls.end());
    const T tr = rep(x).trace();
    if constexpr (std::is_same_v<T, double>) {
      out.push_back(tr);
    } else {
      out.push_back(Cyclotomic(tr).to_complex().real());
    }
  }
  return out;
}

template <class T>
struct IsotypicPiece {
  int irrep = 0;
  long multiplicity = 0;
  Matrix<T> projector;
};

/// Isotypic projectors P_s = dim(s) / (|G| dim End(s)) sum_g chi_s(g^-1) rho(g), one per
/// real irrep (zero-multiplicity pieces included). Multiplicities come from projector
/// ranks and are cross-checked against the character; in fixed precision a breach
/// of the declared tolerance raises DomainError("tolerance").
template <class T>
std::vector<IsotypicPiece<T>> isotypic_decomposition(const MatrixRep<T>& rep, const RealIrrepTable& irreps) {
  const auto& g = rep.group();
  const std::size_t d = rep.dimension();
  constexpr bool exact = ScalarPolicy<T>::exact;
  auto fail = [](const std::string& what) {
    if constexpr (exact) {
      throw InternalError("isotypic_decomposition: " + what);
    } else {
      throw DomainError("tolerance", "isotypic_decomposition: " + what);
    }
  };

  std::vector<double> chi_rep = numeric_character(rep);
  std::vector<IsotypicPiece<T>> out;
  Matrix<T> total(d, d);
  for (const auto& s : irreps.entries) {
    const Cyclotomic scale(make_rational(s.real_dimension, g.order() * end_dimension(s.end_type)));
    std::vector<T> coeff;
    for (std::size_t j = 0; j < s.character.size(); ++j)
      coeff.push_back(scalar_from<T>(scale * s.character[irreps.complex.inverse_class[j]]));
    Matrix<T> p(d, d);
    for (int x = 0; x < g.order(); ++x) {
      const T& c = coeff[g.class_of(x)];
      if (ScalarPolicy<T>::is_zero(c, 0.0)) continue;
      p += rep(x) * c;
    }
    const double tol = zero_threshold(p, rep.tolerance());
    const std::size_t rk = rank(p, tol);
    if (rk % s.real_dimension != 0) fail("projector rank is not a multiple of the irrep dimension");
    const long mult = static_cast<long>(rk / s.real_dimension);

    double inner = 0.0;
    for (std::size_t j = 0; j < chi_rep.size(); ++j)
      inner += irreps.complex.class_sizes[j] * chi_rep[j] * s.character[j].to_complex().real();
    inner /= g.order() * end_dimension(s.end_type);
    if (std::abs(inner - static_cast<double>(mult)) > 1e-6) fail("projector rank disagrees with the character");

    if (!rep.close(p * p, p)) fail("projector is not idempotent");
    total += p;
    out.push_back({s.id, mult, std::move(p)});
  }
  if (!rep.close(total, Matrix<T>::identity(d))) fail("projectors do not sum to the identity");
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out.size(); ++b)
      if (a != b && out[a].multiplicity > 0 && out[b].multiplicity > 0 &&
          !rep.close(out[a].projector * out[b].projector, Matrix<T>(d, d)))
        fail("projectors are not mutually annihilating");
  return out;
}

/// Faithfulness certified on the matrices themselves: rho(g) = 1 only at g = e.
template <class T>
bool is_faithful(const MatrixRep<T>& rep) {
  const auto id = Matrix<T>::identity(rep.dimension());
  for (int x = 0; x < rep.group().order(); ++x)
    if (x != rep.group().identity() && rep.close(rep(x), id)) return false;
  return true;
}

/// Overload certifying faithfulness on an explicit exact representation.
template <class T>
int min_faithful_tensor_power(const MatrixRep<T>& rep, const CharacterTable& t) {
  static_assert(ScalarPolicy<T>::exact, "exact scalars required");
  if (!is_faithful(rep)) throw DomainError("faithful", "representation has a nontrivial kernel");
  return min_faithful_tensor_power(rep.group(), t, character_of(rep));
}

}  // namespace orbicalc
