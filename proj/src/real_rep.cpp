#include "orbicalc/real_rep.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace orbicalc {

int end_dimension(EndType t) {
  switch (t) {
    case EndType::R: return 1;
    case EndType::C: return 2;
    case EndType::H: return 4;
  }
  return 1;
}

std::string to_string(EndType t) {
  switch (t) {
    case EndType::R: return "R";
    case EndType::C: return "C";
    case EndType::H: return "H";
  }
  return "?";
}

std::vector<int> RealIrrepTable::real_type_ids() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (e.end_type == EndType::R) out.push_back(e.id);
  return out;
}

RealIrrepTable real_irreps(const FiniteGroup& g) { return real_irreps(character_table(g)); }

std::shared_ptr<const RealIrrepTable> cached_real_irreps(const FiniteGroup& g) {
  static std::mutex mutex;
  static std::map<std::vector<std::vector<int>>, std::shared_ptr<const RealIrrepTable>> cache;
  auto key = g.table();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const RealIrrepTable>(real_irreps(g));
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

RealIrrepTable real_irreps(CharacterTable table) {
  RealIrrepTable out;
  out.complex = std::move(table);
  const auto& t = out.complex;
  std::vector<bool> used(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i) out.indicators.push_back(frobenius_schur(t, i));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    RealIrrep e;
    e.id = static_cast<int>(out.entries.size());
    e.constituents = {i};
    const int d = t.degrees[i];
    switch (out.indicators[i]) {
      case 1:
        e.real_dimension = d;
        e.end_type = EndType::R;
        e.character = t.values[i];
        break;
      case -1:
        e.real_dimension = 2 * d;
        e.end_type = EndType::H;
        for (const auto& v : t.values[i]) e.character.push_back(v + v);
        break;
      default: {
        const std::size_t c = conjugate_character(t, i);
        if (c == i || used[c]) throw InternalError("real_irreps: indicator-0 character without a free conjugate");
        used[c] = true;
        e.constituents.push_back(c);
        e.real_dimension = 2 * d;
        e.end_type = EndType::C;
        for (const auto& v : t.values[i]) e.character.push_back(v + v.conj());
      }
    }
    out.entries.push_back(std::move(e));
  }
  // Trivial first, then by (dimension, end type), then by complex constituent.
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const RealIrrep& a, const RealIrrep& b) {
    if (a.constituents[0] == 0 || b.constituents[0] == 0) return a.constituents[0] == 0 && b.constituents[0] != 0;
    if (a.real_dimension != b.real_dimension) return a.real_dimension < b.real_dimension;
    return a.end_type < b.end_type;
  });
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].id = static_cast<int>(i);
  return out;
}

std::vector<long> real_multiplicities(const RealIrrepTable& t, const std::vector<Cyclotomic>& chi) {
  std::vector<long> out;
  for (const auto& e : t.entries) {
    const Cyclotomic m =
        inner_product(t.complex, chi, e.character) / Cyclotomic(static_cast<long>(end_dimension(e.end_type)));
    if (!m.is_rational() || !is_integer(m.to_rational()))
      throw InternalError("real_multiplicities: non-integer multiplicity " + m.to_string());
    out.push_back(m.to_rational().get_num().get_si());
  }
  return out;
}

std::vector<Cyclotomic> pull_back(const FiniteGroup& k, const ElementMap& phi, const FiniteGroup& g,
                                  const std::vector<Cyclotomic>& on_g) {
  std::vector<Cyclotomic> out;
  for (const auto& cls : k.classes()) out.push_back(on_g[g.class_of(phi[cls.front()])]);
  return out;
}

std::vector<long> restriction_multiplicities(const FiniteGroup& k, const RealIrrepTable& k_irreps,
                                             const ElementMap& phi, const FiniteGroup& g,
                                             const RealIrrepTable& g_irreps, std::size_t rho) {
  if (phi.size() != static_cast<std::size_t>(k.order()) || !is_homomorphism(k, g, phi))
    throw DomainError("homomorphism", "restriction_multiplicities: map is not a homomorphism");
  if (rho >= g_irreps.size()) throw DomainError("irrep-index", "no such real irrep");
  return real_multiplicities(k_irreps, pull_back(k, phi, g, g_irreps.entries[rho].character));
}

int min_faithful_tensor_power(const FiniteGroup& g, const CharacterTable& t, const std::vector<Cyclotomic>& v) {
  if (v.size() != t.class_sizes.size()) throw DomainError("character", "one value per class expected");
  for (long m : decompose(t, v))
    if (m < 0) throw DomainError("character", "class function is not a character");
  for (std::size_t j = 1; j < v.size(); ++j)
    if (v[j] == v[0]) throw DomainError("faithful", "character has a nontrivial kernel");

  std::vector<bool> seen(t.size(), false);
  std::size_t count = 0;
  std::vector<Cyclotomic> power = v;
  for (int n = 1; n <= g.order(); ++n) {
    const auto mult = decompose(t, power);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (mult[i] > 0 && !seen[i]) {
        seen[i] = true;
        ++count;
      }
    if (count == t.size()) return n;
    for (std::size_t j = 0; j < power.size(); ++j) power[j] *= v[j];
  }
  throw InternalError("min_faithful_tensor_power: bound |G| exceeded for a faithful character");
}

}  // namespace orbicalc
