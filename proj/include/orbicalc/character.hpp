#pragma once

#include <vector>

#include "orbicalc/cyclotomic.hpp"
#include "orbicalc/group.hpp"

namespace orbicalc {

/// Complex character table of a finite group, exact over Q(zeta_exp(G)).
///
/// Class j follows the group's class order (identity class first); its
/// representative is the smallest member. `values[i][j]` is chi_i at class j.
struct CharacterTable {
  int group_order = 0;
  int exponent = 1;
  std::vector<int> class_reps;
  std::vector<int> class_sizes;
  std::vector<int> inverse_class;  ///< class of g^-1
  std::vector<int> square_class;   ///< class of g^2
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<int> degrees;

  std::size_t size() const { return values.size(); }
};

/// Dixon's method: class-multiplication matrices reduced mod a prime p = 1 (mod exp G),
/// simultaneous eigenspace splitting, then a discrete-Fourier lift to cyclotomic
/// integers. Characters are ordered trivial first, then by degree, then by
/// descending class values. Throws InternalError if the lifted table fails
/// row orthogonality.
CharacterTable character_table(const FiniteGroup& g);

/// <a, b> = (1/|G|) sum_classes |C| a(C) conj(b(C)) for class functions given per class.
Cyclotomic inner_product(const CharacterTable& t, const std::vector<Cyclotomic>& a,
                         const std::vector<Cyclotomic>& b);

/// Class function of a per-element function that is constant on classes.
std::vector<Cyclotomic> to_class_function(const FiniteGroup& g, const std::vector<Cyclotomic>& per_element);

/// Multiplicity of each irreducible character in a (virtual) character.
/// Throws InternalError when a multiplicity is not an integer.
std::vector<long> decompose(const CharacterTable& t, const std::vector<Cyclotomic>& chi);

/// Frobenius-Schur indicator of character i, always -1, 0 or +1.
int frobenius_schur(const CharacterTable& t, std::size_t i);

/// Index of the complex conjugate character.
std::size_t conjugate_character(const CharacterTable& t, std::size_t i);

}  // namespace orbicalc
