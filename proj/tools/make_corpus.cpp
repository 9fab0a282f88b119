// Regenerates corpus/*.json: one file per isomorphism class of groups of order <= 24.
//
//   make_corpus <output-dir>
//
// Groups with a natural small permutation action are written with it; the rest
// are written as left-regular permutations of a greedy generating set.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "orbicalc/constructions.hpp"
#include "orbicalc/corpus.hpp"
#include "orbicalc/group.hpp"

using namespace orbicalc;

namespace {

struct Entry {
  std::string name;
  std::string description;
  FiniteGroup group;
  std::optional<std::pair<int, std::vector<Permutation>>> natural;
};

Permutation cycle(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

Entry natural(std::string name, std::string description, int degree, std::vector<Permutation> gens) {
  FiniteGroup g = group_from_generators(degree, gens);
  return {std::move(name), std::move(description), std::move(g), std::make_pair(degree, std::move(gens))};
}

Entry cyclic(int n) {
  if (n == 1) return natural("trivial", "trivial group", 1, {});
  return natural("c" + std::to_string(n), "cyclic group of order " + std::to_string(n), n, {cycle(n)});
}

Entry table(std::string name, std::string description, FiniteGroup g) {
  return {std::move(name), std::move(description), std::move(g), std::nullopt};
}

FiniteGroup c(int n) { return cyclic_group(n); }
FiniteGroup x(const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); }

// Automorphism of C_m x C_k (index i * k + j) sending (i, j) to (ai*i + aj*j, bi*i + bj*j).
ElementMap linear_auto(int m, int k, int ai, int aj, int bi, int bj) {
  ElementMap out(m * k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      const int ni = ((ai * i + aj * j) % m + m) % m;
      const int nj = ((bi * i + bj * j) % k + k) % k;
      out[i * k + j] = ni * k + nj;
    }
  return out;
}

ElementMap negate_mod(int n) {
  ElementMap out(n);
  for (int i = 0; i < n; ++i) out[i] = (n - i) % n;
  return out;
}

std::vector<Permutation> sl23_generators() {
  // Action of SL(2,3) on the 8 nonzero vectors of F_3^2, vector (a, b) -> index 3a + b - 1.
  auto act = [](int m00, int m01, int m10, int m11) {
    Permutation p(8);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == 0 && b == 0) continue;
        const int na = (m00 * a + m01 * b) % 3;
        const int nb = (m10 * a + m11 * b) % 3;
        p[3 * a + b - 1] = 3 * na + nb - 1;
      }
    return p;
  };
  return {act(1, 1, 0, 1), act(0, 2, 1, 0)};
}

std::vector<Entry> build() {
  std::vector<Entry> out;
  for (int n : {1, 2, 3, 5, 7, 11, 13, 17, 19, 23}) out.push_back(cyclic(n));
  for (int n : {4, 6, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21, 22, 24}) out.push_back(cyclic(n));

  out.push_back(table("v4", "Klein four-group", x(c(2), c(2))));
  out.push_back(natural("s3", "symmetric group S3", 3, {{1, 2, 0}, {1, 0, 2}}));

  out.push_back(table("c2xc4", "C2 x C4", x(c(2), c(4))));
  out.push_back(table("c2xc2xc2", "elementary abelian group of order 8", x(c(2), x(c(2), c(2)))));
  out.push_back(table("d8", "dihedral group of order 8", metacyclic_group(4, 2, 0, 3)));
  out.push_back(table("q8", "quaternion group", metacyclic_group(4, 2, 2, 3)));

  out.push_back(table("c3xc3", "C3 x C3", x(c(3), c(3))));
  out.push_back(table("d10", "dihedral group of order 10", metacyclic_group(5, 2, 0, 4)));

  out.push_back(table("c2xc6", "C2 x C6", x(c(2), c(6))));
  out.push_back(natural("a4", "alternating group A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  out.push_back(table("d12", "dihedral group of order 12", metacyclic_group(6, 2, 0, 5)));
  out.push_back(table("dic12", "dicyclic group of order 12 (C3 : C4)", metacyclic_group(3, 4, 0, 2)));

  out.push_back(table("d14", "dihedral group of order 14", metacyclic_group(7, 2, 0, 6)));

  out.push_back(table("c4xc4", "C4 x C4", x(c(4), c(4))));
  out.push_back(table("c2xc8", "C2 x C8", x(c(2), c(8))));
  out.push_back(table("c2xc2xc4", "C2 x C2 x C4", x(c(2), x(c(2), c(4)))));
  out.push_back(table("c2xc2xc2xc2", "elementary abelian group of order 16", x(x(c(2), c(2)), x(c(2), c(2)))));
  out.push_back(table("d16", "dihedral group of order 16", metacyclic_group(8, 2, 0, 7)));
  out.push_back(table("q16", "generalized quaternion group of order 16", metacyclic_group(8, 2, 4, 7)));
  out.push_back(table("sd16", "semidihedral group of order 16", metacyclic_group(8, 2, 0, 3)));
  out.push_back(table("m16", "modular group of order 16 (C8 : C2, x -> x^5)", metacyclic_group(8, 2, 0, 5)));
  out.push_back(table("c4sdc4", "C4 : C4", metacyclic_group(4, 4, 0, 3)));
  out.push_back(table("c2xd8", "C2 x D8", x(c(2), metacyclic_group(4, 2, 0, 3))));
  out.push_back(table("c2xq8", "C2 x Q8", x(c(2), metacyclic_group(4, 2, 2, 3))));
  out.push_back(table("c4c2sdc2", "(C4 x C2) : C2 with a -> ab, b -> b",
                      semidirect_product(x(c(4), c(2)), c(2), {1}, {linear_auto(4, 2, 1, 0, 1, 1)})));
  out.push_back(table("c4od8", "central product C4 o D8 (Pauli group)",
                      semidirect_product(x(c(4), c(2)), c(2), {1}, {linear_auto(4, 2, 1, 2, 0, 1)})));

  out.push_back(table("c3xc6", "C3 x C6", x(c(3), c(6))));
  out.push_back(table("d18", "dihedral group of order 18", metacyclic_group(9, 2, 0, 8)));
  out.push_back(table("c3xs3", "C3 x S3", x(c(3), metacyclic_group(3, 2, 0, 2))));
  out.push_back(table("gd18", "generalized dihedral group (C3 x C3) : C2",
                      semidirect_product(x(c(3), c(3)), c(2), {1}, {linear_auto(3, 3, -1, 0, 0, -1)})));

  out.push_back(table("c2xc10", "C2 x C10", x(c(2), c(10))));
  out.push_back(table("d20", "dihedral group of order 20", metacyclic_group(10, 2, 0, 9)));
  out.push_back(table("dic20", "dicyclic group of order 20 (C5 : C4)", metacyclic_group(5, 4, 0, 4)));
  out.push_back(table("f20", "Frobenius group of order 20 (C5 : C4, faithful)", metacyclic_group(5, 4, 0, 2)));

  out.push_back(table("c7sdc3", "Frobenius group of order 21 (C7 : C3)", metacyclic_group(7, 3, 0, 2)));
  out.push_back(table("d22", "dihedral group of order 22", metacyclic_group(11, 2, 0, 10)));

  out.push_back(table("c2xc12", "C2 x C12", x(c(2), c(12))));
  out.push_back(table("c2xc2xc6", "C2 x C2 x C6", x(c(2), x(c(2), c(6)))));
  out.push_back(natural("s4", "symmetric group S4", 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
  out.push_back(natural("sl23", "special linear group SL(2,3)", 8, sl23_generators()));
  out.push_back(table("c3sdc8", "C3 : C8", metacyclic_group(3, 8, 0, 2)));
  out.push_back(table("dic24", "dicyclic group of order 24 (C3 : Q8)", metacyclic_group(12, 2, 6, 11)));
  out.push_back(table("c4xs3", "C4 x S3", x(c(4), metacyclic_group(3, 2, 0, 2))));
  out.push_back(table("d24", "dihedral group of order 24", metacyclic_group(12, 2, 0, 11)));
  out.push_back(table("c2xdic12", "C2 x Dic12", x(c(2), metacyclic_group(3, 4, 0, 2))));
  {
    // D8 = <a, b> with a = index 2 (a^1 b^0), b = index 1 (a^0 b^1); a inverts C3, b centralizes it.
    const FiniteGroup d8 = metacyclic_group(4, 2, 0, 3);
    out.push_back(table("c3sdd8", "C3 : D8 with kernel a Klein four-group",
                        semidirect_product(c(3), d8, {2, 1}, {negate_mod(3), identity_map(3)})));
  }
  out.push_back(table("c3xd8", "C3 x D8", x(c(3), metacyclic_group(4, 2, 0, 3))));
  out.push_back(table("c3xq8", "C3 x Q8", x(c(3), metacyclic_group(4, 2, 2, 3))));
  out.push_back(table("c2xa4", "C2 x A4", x(c(2), group_from_generators(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}))));
  out.push_back(table("c2xc2xs3", "C2 x C2 x S3", x(x(c(2), c(2)), metacyclic_group(3, 2, 0, 2))));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (auto& e : build()) {
    int degree = 0;
    std::vector<Permutation> gens;
    if (e.natural) {
      degree = e.natural->first;
      gens = e.natural->second;
    } else {
      degree = e.group.order();
      gens = regular_permutations(e.group, greedy_generators(e.group));
    }
    NamedGroup named{e.name, e.description, e.group};
    const auto doc = group_to_json(named, degree, gens);
    std::ofstream out(dir / (e.name + ".json"));
    out << doc.dump() << '\n';
    std::cout << e.name << " order " << e.group.order() << '\n';
  }
  return 0;
}
