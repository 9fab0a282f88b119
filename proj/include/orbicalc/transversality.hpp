#pragma once

// Linear local models of derived orbifold charts: a pair of representations V (tangent)
// and E (obstruction) of a finite group with an equivariant map between them.

#include <cstddef>
#include <string>
#include <vector>

#include "orbicalc/real_rep.hpp"

namespace orbicalc {

/// V + W, block diagonal.
template <class T>
MatrixRep<T> direct_sum(const MatrixRep<T>& a, const MatrixRep<T>& b) {
  const std::size_t da = a.dimension(), db = b.dimension();
  std::vector<Matrix<T>> images;
  for (int x = 0; x < a.group().order(); ++x) {
    Matrix<T> m(da + db, da + db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) m(i, j) = a(x)(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) m(da + i, da + j) = b(x)(i, j);
    images.push_back(std::move(m));
  }
  return MatrixRep<T>(a.group(), std::move(images), std::max(a.tolerance(), b.tolerance()));
}

/// Averages an arbitrary dim E x dim V matrix into Hom_G(V, E): (1/|G|) sum_g rho_E(g) m rho_V(g^-1).
template <class T>
Matrix<T> equivariant_average(const MatrixRep<T>& v, const MatrixRep<T>& e, const Matrix<T>& m) {
  const auto& g = v.group();
  Matrix<T> acc(e.dimension(), v.dimension());
  for (int x = 0; x < g.order(); ++x) acc += e(x) * m * v(g.inv(x));
  return acc * (T(1) / T(g.order()));
}

template <class T>
struct LinearChart {
  MatrixRep<T> v;
  MatrixRep<T> e;
  Matrix<T> alpha;  ///< dim E x dim V

  /// Throws DomainError unless both representations live on one group and alpha
  /// intertwines them (exactly, or within the declared tolerance).
  LinearChart(MatrixRep<T> v_, MatrixRep<T> e_, Matrix<T> alpha_)
      : v(std::move(v_)), e(std::move(e_)), alpha(std::move(alpha_)) {
    if (&v.group() != &e.group() && v.group().table() != e.group().table())
      throw DomainError("linear-chart", "V and E are representations of different groups");
    if (alpha.rows() != e.dimension() || alpha.cols() != v.dimension())
      throw DomainError("linear-chart", "alpha must be dim E x dim V");
    for (int x = 0; x < v.group().order(); ++x)
      if (!e.close(alpha * v(x), e(x) * alpha))
        throw DomainError("equivariant", "alpha does not intertwine V and E");
  }
};

template <class T>
struct FixedSubspace {
  std::size_t dimension = 0;
  Matrix<T> basis;  ///< columns span V^G
};

/// Image of the averaging projector. Its rank is cross-checked against <chi_V, 1>:
/// a mismatch is an InternalError in exact mode and DomainError("tolerance") otherwise.
template <class T>
FixedSubspace<T> fixed_subspace(const MatrixRep<T>& rep) {
  const auto& g = rep.group();
  Matrix<T> p(rep.dimension(), rep.dimension());
  for (int x = 0; x < g.order(); ++x) p += rep(x);
  p *= T(1) / T(g.order());
  const double tol = zero_threshold(p, rep.tolerance());
  FixedSubspace<T> out{0, column_basis(p, tol)};
  out.dimension = out.basis.cols();

  T trace_sum(0);
  for (int x = 0; x < g.order(); ++x) trace_sum += rep(x).trace();
  if constexpr (ScalarPolicy<T>::exact) {
    if (trace_sum != T(static_cast<long>(out.dimension * g.order())))
      throw InternalError("fixed_subspace: projector rank disagrees with the character");
  } else {
    if (std::abs(trace_sum / g.order() - static_cast<double>(out.dimension)) > 1e-6)
      throw DomainError("tolerance", "fixed_subspace: projector rank disagrees with the character");
  }
  return out;
}

struct IsotypicBlock {
  int irrep = 0;
  std::size_t source_dim = 0;  ///< dimension of the s-isotypic piece of V
  std::size_t target_dim = 0;  ///< dimension of the s-isotypic piece of E
  std::size_t rank = 0;        ///< rank of alpha restricted to the pieces
  bool surjective = false;
};

struct SurjectivityReport {
  bool surjective = false;  ///< every block of a nontrivial irrep is onto
  std::vector<IsotypicBlock> blocks;
};

/// True when P^E_t alpha P^V_s vanishes for every t != s (exactly, or below tolerance).
template <class T>
bool schur_cross_blocks_vanish(const LinearChart<T>& chart, const RealIrrepTable& irreps) {
  const auto pv = isotypic_decomposition(chart.v, irreps);
  const auto pe = isotypic_decomposition(chart.e, irreps);
  for (std::size_t s = 0; s < pv.size(); ++s)
    for (std::size_t t = 0; t < pe.size(); ++t) {
      if (s == t) continue;
      const auto block = pe[t].projector * chart.alpha * pv[s].projector;
      if (!is_zero_matrix(block, zero_threshold(block, chart.e.tolerance()) + chart.e.tolerance())) return false;
    }
  return true;
}

/// Splits alpha into isotypic blocks P^E_s alpha P^V_s and reports which are onto.
/// A nonvanishing cross-isotype block is an InternalError in exact mode and
/// DomainError("tolerance") in fixed precision.
template <class T>
SurjectivityReport isotypic_surjectivity(const LinearChart<T>& chart, const RealIrrepTable& irreps) {
  if (!schur_cross_blocks_vanish(chart, irreps)) {
    if constexpr (ScalarPolicy<T>::exact) {
      throw InternalError("isotypic_surjectivity: cross-isotype block of an equivariant map is nonzero");
    } else {
      throw DomainError("tolerance", "isotypic_surjectivity: cross-isotype block above tolerance");
    }
  }
  const auto pv = isotypic_decomposition(chart.v, irreps);
  const auto pe = isotypic_decomposition(chart.e, irreps);
  SurjectivityReport out{true, {}};
  for (std::size_t s = 0; s < pv.size(); ++s) {
    const auto block = pe[s].projector * chart.alpha * pv[s].projector;
    IsotypicBlock b;
    b.irrep = pv[s].irrep;
    b.source_dim = static_cast<std::size_t>(pv[s].multiplicity) * irreps.entries[s].real_dimension;
    b.target_dim = static_cast<std::size_t>(pe[s].multiplicity) * irreps.entries[s].real_dimension;
    b.rank = rank(block, zero_threshold(block, chart.e.tolerance()));
    b.surjective = b.rank == b.target_dim;
    if (s != 0 && !b.surjective) out.surjective = false;
    out.blocks.push_back(b);
  }
  return out;
}

enum class DetectorVerdict { NonzeroCertified, Inconclusive };

std::string to_string(DetectorVerdict v);

struct DetectorReport {
  std::size_t fixed_dim = 0;
  long degree = 0;  ///< minus the real dimension of V
  DetectorVerdict verdict = DetectorVerdict::Inconclusive;
};

/// For a genuine real representation given by its character (per class): certifies the
/// point class in degree -dim V as nonzero exactly when V^G = 0. Throws DomainError
/// unless the character is that of a genuine representation.
DetectorReport derived_class_detector(const FiniteGroup& g, const RealIrrepTable& irreps,
                                      const std::vector<Cyclotomic>& character);

template <class T>
DetectorReport derived_class_detector(const MatrixRep<T>& rep) {
  DetectorReport r;
  r.fixed_dim = fixed_subspace(rep).dimension;
  r.degree = -static_cast<long>(rep.dimension());
  r.verdict = r.fixed_dim == 0 ? DetectorVerdict::NonzeroCertified : DetectorVerdict::Inconclusive;
  return r;
}

}  // namespace orbicalc
