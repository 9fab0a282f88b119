#include "orbicalc/transversality.hpp"

namespace orbicalc {

std::string to_string(DetectorVerdict v) {
  return v == DetectorVerdict::NonzeroCertified ? "nonzero_certified" : "inconclusive";
}

DetectorReport derived_class_detector(const FiniteGroup& g, const RealIrrepTable& irreps,
                                      const std::vector<Cyclotomic>& character) {
  if (character.size() != irreps.complex.size() || irreps.complex.group_order != g.order())
    throw DomainError("class-function", "character needs one value per conjugacy class of the group");
  long dim = 0;
  std::vector<long> mult;
  for (const auto& s : irreps.entries) {
    const Cyclotomic m = inner_product(irreps.complex, character, s.character) *
                         Cyclotomic(make_rational(1, end_dimension(s.end_type)));
    if (!m.is_rational() || !is_integer(m.to_rational()) || sgn(m.to_rational()) < 0)
      throw DomainError("genuine-rep", "not the character of a genuine real representation");
    mult.push_back(m.to_rational().get_num().get_si());
    dim += mult.back() * s.real_dimension;
  }
  // the multiplicities must reassemble the character, ruling out non-real class functions
  for (std::size_t j = 0; j < character.size(); ++j) {
    Cyclotomic sum(0);
    for (std::size_t s = 0; s < mult.size(); ++s) sum += Cyclotomic(Rational(mult[s])) * irreps.entries[s].character[j];
    if (!(sum == character[j]))
      throw DomainError("genuine-rep", "not the character of a genuine real representation");
  }
  DetectorReport r;
  r.fixed_dim = static_cast<std::size_t>(mult.at(0));
  r.degree = -dim;
  r.verdict = r.fixed_dim == 0 ? DetectorVerdict::NonzeroCertified : DetectorVerdict::Inconclusive;
  return r;
}

}  // namespace orbicalc
