#pragma once

#include <cstddef>
#include <vector>

#include "orbicalc/errors.hpp"
#include "orbicalc/rational.hpp"

namespace orbicalc {

/// Dense integer matrix. Unlike nested vectors it keeps its column count when it has no rows.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Nonzero diagonal of the Smith normal form, d_1 | d_2 | ..., all positive.
/// Pivots on an entry of least absolute value.
std::vector<Integer> smith_invariants(IntMatrix m);

/// C_0 <- C_1 <- ... <- C_k. boundaries[p - 1] is the matrix of d_p : C_p -> C_{p-1}
/// (rows indexed by cells of dimension p - 1).
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
};

/// Throws DomainError on mismatched shapes and InternalError if d_p d_{p+1} != 0.
void check_chain_complex(const ChainComplex& cc);

struct HomologyGroup {
  long betti = 0;
  std::vector<Integer> torsion;  ///< invariant factors greater than 1
  bool reliable = true;          ///< false in the top degree, where the truncation drops C_{k+1}
};

/// Integral homology in degrees 0..k. With `parallel`, the Smith forms of the
/// boundary matrices are computed concurrently.
std::vector<HomologyGroup> homology(const ChainComplex& cc, bool parallel = false);

/// Oriented simplicial chain complex of the complex generated by `facets` (vertex
/// lists), up to the largest facet dimension. Simplices are sorted vertex lists.
ChainComplex simplicial_chain_complex(const std::vector<std::vector<int>>& facets);

/// The six-vertex triangulation of the real projective plane.
std::vector<std::vector<int>> rp2_triangulation();

/// The boundary of the n-simplex, a triangulated (n-1)-sphere.
std::vector<std::vector<int>> simplex_boundary(int n);

}  // namespace orbicalc
