#include "orbicalc/bundles.hpp"

#include <algorithm>

namespace orbicalc {

StableBundle operator+(const StableBundle& a, const StableBundle& b) {
  if (a.coords.size() != b.coords.size()) throw DomainError("bundle-base", "bundles over different bases");
  StableBundle out = a;
  for (std::size_t i = 0; i < b.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

long virtual_rank(const RealIrrepTable& t, const StableBundle& b) {
  if (b.coords.size() != t.size()) throw DomainError("bundle-base", "coordinate count differs from the irrep count");
  long r = 0;
  for (std::size_t i = 0; i < t.size(); ++i) r += b.coords[i] * t.entries[i].real_dimension;
  return r;
}

std::vector<int> aut_group(const RealIrrepTable& t, const StableBundle& b) {
  if (b.coords.size() != t.size()) throw DomainError("bundle-base", "coordinate count differs from the irrep count");
  return t.real_type_ids();
}

std::vector<int> aut_group(const RealIrrepTable& t, const CoarseStableBundle& b) {
  if (b.coords.size() + 1 != t.size())
    throw DomainError("bundle-base", "coarse bundle needs one coordinate per nontrivial irrep");
  std::vector<int> out{0};
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (b.coords[i - 1] < 0) throw DomainError("coarse-nonnegative", "coarse coordinates must be nonnegative");
    if (t.entries[i].end_type == EndType::R && b.coords[i - 1] > 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::vector<long>> restriction_matrix(const FiniteGroup& k, const RealIrrepTable& kt,
                                                  const ElementMap& phi, const FiniteGroup& g,
                                                  const RealIrrepTable& gt) {
  std::vector<std::vector<long>> m;
  for (std::size_t rho = 0; rho < gt.size(); ++rho) m.push_back(restriction_multiplicities(k, kt, phi, g, gt, rho));
  return m;
}

StableBundle restrict_bundle(const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& phi,
                             const FiniteGroup& g, const RealIrrepTable& gt, const StableBundle& b) {
  if (b.coords.size() != gt.size()) throw DomainError("bundle-base", "coordinate count differs from the irrep count");
  const auto m = restriction_matrix(k, kt, phi, g, gt);
  StableBundle out{std::vector<long>(kt.size(), 0)};
  for (std::size_t rho = 0; rho < gt.size(); ++rho)
    for (std::size_t s = 0; s < kt.size(); ++s) out.coords[s] += b.coords[rho] * m[rho][s];
  return out;
}

int framing_width(const RealIrrepTable& t) { return static_cast<int>(t.real_type_ids().size()); }

std::vector<Framing> framings(const RealIrrepTable& t) {
  const int w = framing_width(t);
  if (w > 24) throw DomainError("cap", "framing enumeration limited to 2^24 elements");
  std::vector<Framing> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << w); ++b) out.push_back({b, w});
  return out;
}

Framing iota(const Framing& f) { return {f.bits ^ 1u, f.width}; }

std::vector<int> irrep_bijection(const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& alpha,
                                 const FiniteGroup& k2, const RealIrrepTable& kt2) {
  if (kt.size() != kt2.size()) throw InternalError("irrep_bijection: irrep counts differ");
  std::vector<int> out(kt.size(), -1);
  for (std::size_t s2 = 0; s2 < kt2.size(); ++s2) {
    const auto pulled = pull_back(k, alpha, k2, kt2.entries[s2].character);
    for (std::size_t s = 0; s < kt.size(); ++s)
      if (kt.entries[s].character == pulled) {
        if (out[s] >= 0) throw InternalError("irrep_bijection: two irreps share a character");
        if (kt.entries[s].end_type != kt2.entries[s2].end_type)
          throw InternalError("irrep_bijection: end type not preserved");
        out[s] = static_cast<int>(s2);
      }
  }
  if (std::count(out.begin(), out.end(), -1) != 0) throw InternalError("irrep_bijection: unmatched irrep");
  return out;
}

std::vector<int> framing_permutation(const RealIrrepTable& kt, const std::vector<int>& bijection,
                                     const RealIrrepTable& kt2) {
  const auto ids = kt.real_type_ids();
  const auto ids2 = kt2.real_type_ids();
  std::vector<int> out;
  for (int id : ids) {
    const auto it = std::find(ids2.begin(), ids2.end(), bijection[id]);
    if (it == ids2.end()) throw InternalError("framing_permutation: R-type irrep mapped outside R-type");
    out.push_back(static_cast<int>(it - ids2.begin()));
  }
  return out;
}

Framing permute_bits(const Framing& f, const std::vector<int>& bit_map) {
  Framing out{0, f.width};
  for (int i = 0; i < f.width; ++i)
    if (f.bits >> i & 1u) out.bits |= std::uint64_t{1} << bit_map[i];
  return out;
}

Framing transport_framing(const Framing& f, const FiniteGroup& k, const RealIrrepTable& kt, const ElementMap& alpha,
                          const FiniteGroup& k2, const RealIrrepTable& kt2) {
  if (!is_homomorphism(k, k2, alpha) || !is_injective(alpha) || k.order() != k2.order())
    throw DomainError("isomorphism", "transport_framing: map is not an isomorphism");
  if (f.width != framing_width(kt)) throw DomainError("framing-width", "framing does not belong to this group");
  return permute_bits(f, framing_permutation(kt, irrep_bijection(k, kt, alpha, k2, kt2), kt2));
}

std::string to_string(const Framing& f) {
  std::string s;
  for (int i = 0; i < f.width; ++i) s += (f.bits >> i & 1u) ? '1' : '0';
  return s;
}

}  // namespace orbicalc
