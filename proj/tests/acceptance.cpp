// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance <orbicalc-binary> <repo-root>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "orbicalc/category.hpp"
#include "orbicalc/corpus.hpp"
#include "orbicalc/homs.hpp"
#include "orbicalc/nerve.hpp"
#include "orbicalc/stable_maps.hpp"
#include "orbicalc/transversality.hpp"
#include "oracles.hpp"

using namespace orbicalc;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

const FiniteGroup& grp(const char* name) { return corpus_group(name).group; }

Verdict character_tables() {
  Verdict v;
  const auto& corpus = load_corpus();
  v.require(corpus.size() >= 25, "fewer than 25 corpus groups");
  for (const auto& ng : corpus) {
    const auto& g = ng.group;
    const auto t = character_table(g);
    const std::size_t r = g.classes().size();
    if (t.size() != r) {
      v.require(false, ng.name + ": wrong number of characters");
      continue;
    }
    long sum_sq = 0;
    for (int d : t.degrees) sum_sq += static_cast<long>(d) * d;
    v.require(sum_sq == g.order(), ng.name + ": sum of squared degrees");
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Cyclotomic row;
        for (std::size_t c = 0; c < r; ++c)
          row += Cyclotomic(static_cast<long>(t.class_sizes[c])) * t.values[i][c] * t.values[j][c].conj();
        v.require(row == Cyclotomic(i == j ? static_cast<long>(g.order()) : 0L), ng.name + ": row orthogonality");
        Cyclotomic col;
        for (std::size_t c = 0; c < r; ++c) col += t.values[c][i] * t.values[c][j].conj();
        v.require(col == Cyclotomic(i == j ? static_cast<long>(g.order() / t.class_sizes[i]) : 0L),
                  ng.name + ": column orthogonality");
      }
  }
  v.summary = std::to_string(corpus.size()) + " groups of order <= 24, exact orthogonality and sum d^2 = |G|";
  return v;
}

Verdict real_classification() {
  Verdict v;
  for (const auto& ng : load_corpus()) {
    const auto t = real_irreps(ng.group);
    for (int fs : t.indicators) v.require(fs >= -1 && fs <= 1, ng.name + ": indicator out of range");
    Rational total = 0;
    for (const auto& e : t.entries)
      total += Rational(static_cast<long>(e.real_dimension) * e.real_dimension) / end_dimension(e.end_type);
    v.require(total == ng.group.order(), ng.name + ": sum dim^2/dim End != |G|");
  }
  int quaternionic = 0;
  for (const auto& e : real_irreps(grp("q8")).entries) quaternionic += e.end_type == EndType::H;
  v.require(quaternionic == 1, "q8 has " + std::to_string(quaternionic) + " H-type irreps");
  v.summary = "indicators in {-1,0,1}, sum dim^2/dim End = |G| on the corpus, q8 has one H-type irrep";
  return v;
}

Verdict hom_counts() {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& g : corpus_groups_up_to(6))
    for (const auto& h : corpus_groups_up_to(8)) {
      const auto homs = enumerate_homs(g.group, h.group);
      v.require(homs.size() == oracle::brute_hom_count(g.group, h.group), g.name + " -> " + h.name + ": hom count");
      std::size_t orbit_sum = 0;
      for (const auto& c : hom_classes(g.group, h.group)) {
        v.require(c.orbit_size * c.centralizer_order == h.group.order(), g.name + " -> " + h.name + ": orbit-stabilizer");
        orbit_sum += static_cast<std::size_t>(h.group.order() / c.centralizer_order);
      }
      v.require(orbit_sum == homs.size(), g.name + " -> " + h.name + ": |Hom| != sum of [H : Z_H(im)]");
      ++pairs;
    }
  v.summary = std::to_string(pairs) + " pairs |G| <= 6, |H| <= 8 against brute force";
  return v;
}

Verdict quotient_identities() {
  Verdict v;
  std::size_t pairs = 0;
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(12)) {
      try {
        const auto r = rep_hom_classes(g.group, h.group);
        v.require(r.injective.size() == r.all_classes - r.classes_through_quotients, g.name + " -> " + h.name + ": (a)");
        v.require(r.partition_sum == r.all_classes, g.name + " -> " + h.name + ": (b)");
      } catch (const InternalError& e) {
        v.require(false, g.name + " -> " + h.name + ": " + e.what());
      }
      ++pairs;
    }
  v.summary = std::to_string(pairs) + " pairs |G| <= 8, |H| <= 12";
  return v;
}

Verdict stable_maps() {
  Verdict v;
  const int point = map_group(grp("trivial"), grp("trivial"), MapVariant::Rep).rank;
  v.require(point == 1, "map_group(trivial, trivial, Rep) has rank " + std::to_string(point));
  const int c2 = map_group(grp("c2"), grp("trivial"), MapVariant::Rep).rank;
  v.require(c2 == 3, "map_group(c2, trivial, Rep) has rank " + std::to_string(c2) + ", expected 3");
  std::size_t pairs = 0, checks = 0;
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(8)) {
      const int rep = map_group(g.group, h.group, MapVariant::Rep).rank;
      const int orb = map_group(g.group, h.group, MapVariant::Orb).rank;
      v.require(rep <= orb, g.name + ", " + h.name + ": Rep rank > Orb rank");
      v.require(symmetry_witness(g.group, h.group).holds, g.name + ", " + h.name + ": two-leg symmetry");
      ++pairs;
    }
  for (const auto& g : corpus_groups_up_to(12))
    for (const auto& h : corpus_groups_up_to(12))
      for (auto variant : {MapVariant::Rep, MapVariant::Orb}) {
        v.require(cross_check_abstract_enumeration(g.group, h.group, variant).match,
                  g.name + ", " + h.name + ", " + to_string(variant) + ": cross check");
        ++checks;
      }
  v.summary = "rank(trivial,trivial,Rep) = " + std::to_string(point) + ", rank(c2,trivial,Rep) = " + std::to_string(c2) +
              ", " + std::to_string(pairs) + " monotonicity/symmetry pairs, " + std::to_string(checks) + " cross checks";
  return v;
}

Verdict nerve() {
  Verdict v;
  std::size_t complexes = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto cat = build_quotient_category(n);
    for (int k = 0; k <= 4; ++k) {
      const auto h = homology(nerve_chain_complex(cat, k));
      const std::string where = "N=" + std::to_string(n) + " k=" + std::to_string(k);
      if (k == 0) {
        // no 1-cells: the top degree is flagged and counts the objects
        v.require(!h[0].reliable && h[0].betti == static_cast<long>(cat.size()), where + ": H_0 bookkeeping");
      } else {
        v.require(h[0].betti == 1 && h[0].torsion.empty(), where + ": H_0 != Z");
        for (int i = 1; i <= k - 1; ++i)
          v.require(h[i].betti == 0 && h[i].torsion.empty(), where + ": H_" + std::to_string(i) + " != 0");
      }
      ++complexes;
    }
  }
  const auto rp2 = homology(simplicial_chain_complex(rp2_triangulation()));
  v.require(rp2[1].betti == 0 && rp2[1].torsion.size() == 1 && rp2[1].torsion[0] == 2, "H_1(RP^2) != Z/2");
  v.require(rp2[0].betti == 1 && rp2[0].torsion.empty(), "H_0(RP^2) != Z");
  v.summary = std::to_string(complexes) + " truncated nerves contractible below the top degree, H_1(RP^2) = Z/2";
  return v;
}

Verdict localization() {
  Verdict v;
  const auto corpus = category_corpus();
  v.require(corpus.size() == 20, "category corpus has " + std::to_string(corpus.size()) + " entries");
  for (const auto& nc : corpus) {
    const auto& c = nc.category;
    const auto ids = identities_only(c);
    for (std::size_t x = 0; x < c.object_count(); ++x)
      for (std::size_t y = 0; y < c.object_count(); ++y) {
        const auto spans = localize_hom(c, ids, static_cast<int>(x), static_cast<int>(y));
        std::vector<int> fs;
        bool identity_legs = true;
        for (const auto& s : spans) {
          identity_legs = identity_legs && s.s == c.identity(static_cast<int>(x));
          fs.push_back(s.f);
        }
        v.require(identity_legs && fs == c.hom(static_cast<int>(x), static_cast<int>(y)), nc.name + ": Hom_C not reproduced");
      }
    if (c.arrow_count() <= 12) {
      v.require(verify_universal_property(c, ids).holds, nc.name + ": universal property, identities");
      v.require(verify_universal_property(c, nc.w).holds, nc.name + ": universal property");
    }
  }
  const auto cospan = free_category({"0", "1", "2"}, {{"f", "0", "2"}, {"w", "1", "2"}});
  const auto verdict = check_right_multiplicative(cospan, arrow_class(cospan, {"id_0", "id_1", "id_2", "w"}));
  v.require(!verdict.valid && verdict.axiom == "ore" && !verdict.witness.empty(), "no Ore witness on the cospan");
  std::string witness;
  for (const auto& w : verdict.witness) witness += (witness.empty() ? "" : ",") + w;
  v.summary = "20 categories, identities-only W reproduces Hom_C, Ore witness {" + witness + "}, universal property";
  return v;
}

MatrixRep<Rational> sign_c2() {
  const auto& g = grp("c2");
  std::vector<Matrix<Rational>> images(2, Matrix<Rational>::identity(1));
  images[g.identity() == 0 ? 1 : 0](0, 0) = -1;
  return MatrixRep<Rational>(g, std::move(images));
}

Verdict transversality() {
  Verdict v;
  std::size_t reps = 0;
  for (const auto& ng : load_corpus()) {
    const auto& g = ng.group;
    const auto table = character_table(g);
    const std::vector<Cyclotomic> one(table.size(), Cyclotomic(1));
    std::vector<std::vector<Permutation>> actions{oracle::conjugation_action(g)};
    for (const auto& k : subgroup_classes(g)) actions.push_back(oracle::coset_action(g, k.representative));
    for (const auto& act : actions) {
      const auto rep = permutation_rep<Rational>(g, act);
      const auto chi = character_of(rep);
      const Cyclotomic expected = inner_product(table, chi, one);
      const auto dim = fixed_subspace(rep).dimension;
      v.require(expected == Cyclotomic(static_cast<long>(dim)), ng.name + ": projector rank != <chi, 1>");
      v.require(dim == oracle::orbit_count(act), ng.name + ": projector rank != orbit count");
      ++reps;
    }
  }
  const auto c2 = derived_class_detector(sign_c2());
  v.require(c2.verdict == DetectorVerdict::NonzeroCertified && c2.degree == -1 && c2.fixed_dim == 0,
            "(c2, sign) is not certified nonzero in degree -1");

  std::mt19937 rng(17);
  std::size_t schur = 0;
  for (const auto& ng : corpus_groups_up_to(12)) {
    const auto t = real_irreps(ng.group);
    if (!oracle::rational_irreps(t)) continue;
    const auto vrep = regular_rep<Rational>(ng.group);
    const auto erep = permutation_rep<Rational>(ng.group, oracle::conjugation_action(ng.group));
    const auto alpha = equivariant_average(vrep, erep, oracle::random_matrix(rng, erep.dimension(), vrep.dimension()));
    v.require(schur_cross_blocks_vanish(LinearChart<Rational>(vrep, erep, alpha), t), ng.name + ": cross-isotype block");
    ++schur;
  }
  v.summary = std::to_string(reps) + " corpus permutation representations, (c2, sign) certified in degree -1, exact Schur on " +
              std::to_string(schur) + " groups";
  return v;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) out += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
  return out + "'";
}

// stdout, stderr (folded in) and exit status of one run.
std::string capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen((command + " 2>&1; echo \"#exit $?\"").c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) out.append(buf.data(), n);
  return out;
}

Verdict determinism(const std::string& binary, const std::string& root) {
  Verdict v;
  std::ifstream in(root + "/tests/cli/examples.txt");
  v.require(static_cast<bool>(in), "cannot read the example list");
  std::size_t examples = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::string expected, word, args;
    words >> expected;
    while (words >> word) args += " " + shell_quote(word);
    const std::string command = "cd " + shell_quote(root) + " && " + shell_quote(binary) + args;
    const auto first = capture(command), second = capture(command);
    v.require(first == second, "differs between runs:" + args);
    v.require(first.ends_with("#exit " + expected + "\n"), "unexpected exit status:" + args);
    ++examples;
  }
  v.summary = std::to_string(examples) + " CLI examples byte-identical across two runs";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <orbicalc-binary> <repo-root>\n";
    return 2;
  }
  const std::string binary = argv[1], root = argv[2];
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"character tables", character_tables},
      {"real classification", real_classification},
      {"hom counts", hom_counts},
      {"quotient identities", quotient_identities},
      {"stable maps", stable_maps},
      {"nerve contractibility", nerve},
      {"localization", localization},
      {"transversality", transversality},
      {"determinism", [&] { return determinism(binary, root); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::cout << "criterion " << i + 1 << " " << (v.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
              << v.summary << " (" << std::fixed << std::setprecision(1) << seconds << " s)\n";
    for (const auto& f : v.failures) std::cout << "    " << f << "\n";
    std::cout << std::flush;
  }
  return failed ? 1 : 0;
}
