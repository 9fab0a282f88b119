#include "orbicalc/constructions.hpp"

#include "orbicalc/errors.hpp"

namespace orbicalc {

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw DomainError("order", "cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return FiniteGroup(std::move(table));
}

FiniteGroup metacyclic_group(int m, int n, int t, int r) {
  auto mod = [](long x, long k) { return static_cast<int>(((x % k) + k) % k); };
  std::vector<long> r_pow(n + 1, 1);
  for (int j = 1; j <= n; ++j) r_pow[j] = (r_pow[j - 1] * r) % m;
  const int order = m * n;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < n; ++l) {
          // a^i b^j a^k b^l = a^(i + k r^j) b^(j + l)
          long exp_a = i + k * r_pow[j];
          int exp_b = j + l;
          if (exp_b >= n) {
            exp_b -= n;
            exp_a += t;
          }
          table[i * n + j][k * n + l] = mod(exp_a, m) * n + exp_b;
        }
  return FiniteGroup(std::move(table));
}

FiniteGroup semidirect_product(const FiniteGroup& normal, const FiniteGroup& acting,
                               const std::vector<int>& acting_gens, const std::vector<ElementMap>& action) {
  if (acting_gens.size() != action.size())
    throw DomainError("action", "one automorphism per acting generator is required");
  const int nq = acting.order();
  const int nn = normal.order();
  std::vector<ElementMap> theta(nq);
  theta[acting.identity()] = identity_map(nn);
  std::vector<int> queue{acting.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int q = queue[i];
    for (std::size_t k = 0; k < acting_gens.size(); ++k) {
      const int next = acting.mul(q, acting_gens[k]);
      ElementMap composite = compose(action[k], theta[q]);  // theta_q o theta_s
      if (theta[next].empty()) {
        theta[next] = std::move(composite);
        queue.push_back(next);
      } else if (theta[next] != composite) {
        throw DomainError("action", "generator images do not define a homomorphism into Aut(N)");
      }
    }
  }
  for (const auto& th : theta) {
    if (th.empty()) throw DomainError("action", "acting generators do not generate the acting group");
    if (!is_homomorphism(normal, normal, th) || !is_injective(th))
      throw DomainError("action", "action is not by automorphisms");
  }
  const int order = nn * nq;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int x1 = 0; x1 < nn; ++x1)
    for (int q1 = 0; q1 < nq; ++q1)
      for (int x2 = 0; x2 < nn; ++x2)
        for (int q2 = 0; q2 < nq; ++q2)
          table[x1 * nq + q1][x2 * nq + q2] = normal.mul(x1, theta[q1][x2]) * nq + acting.mul(q1, q2);
  return FiniteGroup(std::move(table));
}

std::vector<Permutation> regular_permutations(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<Permutation> out;
  for (int s : elements) {
    Permutation p(g.order());
    for (int x = 0; x < g.order(); ++x) p[x] = g.mul(s, x);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace orbicalc
