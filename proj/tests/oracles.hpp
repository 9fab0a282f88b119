#pragma once

// Independent reference computations shared by the unit tests and the acceptance suite.
// Each one works from the raw tables, without calling the routine it checks.

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "orbicalc/real_rep.hpp"

namespace orbicalc::oracle {

// Counts homomorphisms by trying every image tuple for a generating set and
// checking the induced word map on all pairs.
inline std::size_t brute_hom_count(const FiniteGroup& g, const FiniteGroup& h) {
  const auto gens = greedy_generators(g);
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) tuples *= h.order();
  std::size_t count = 0;
  std::vector<int> images(gens.size());
  for (std::size_t code = 0; code < tuples; ++code) {
    std::size_t c = code;
    for (auto& y : images) {
      y = static_cast<int>(c % h.order());
      c /= h.order();
    }
    ElementMap phi(g.order(), -1);
    phi[g.identity()] = h.identity();
    std::vector<int> queue{g.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const int x = g.mul(queue[q], gens[i]);
        if (phi[x] < 0) {
          phi[x] = h.mul(phi[queue[q]], images[i]);
          queue.push_back(x);
        }
      }
    bool ok = true;
    for (int a = 0; a < g.order() && ok; ++a)
      for (int b = 0; b < g.order() && ok; ++b) ok = phi[g.mul(a, b)] == h.mul(phi[a], phi[b]);
    count += ok;
  }
  return count;
}

inline std::vector<Permutation> coset_action(const FiniteGroup& g, const std::vector<int>& k) {
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    for (int h : k) coset_of[g.mul(x, h)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<Permutation> out;
  for (int x = 0; x < g.order(); ++x) {
    Permutation p(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) p[c] = coset_of[g.mul(x, reps[c])];
    out.push_back(p);
  }
  return out;
}

inline std::vector<Permutation> conjugation_action(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (int x = 0; x < g.order(); ++x) {
    Permutation p(g.order());
    for (int y = 0; y < g.order(); ++y) p[y] = g.conj(x, y);
    out.push_back(p);
  }
  return out;
}

// Orbits of a permutation action, by union-find over the points.
inline std::size_t orbit_count(const std::vector<Permutation>& action) {
  const std::size_t n = action[0].size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (const auto& p : action)
    for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(static_cast<std::size_t>(p[i]));
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) roots += find(i) == i;
  return roots;
}

inline Matrix<Rational> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline bool rational_irreps(const RealIrrepTable& t) {
  for (const auto& s : t.entries)
    for (const auto& x : s.character)
      if (!x.is_rational()) return false;
  return true;
}

}  // namespace orbicalc::oracle
