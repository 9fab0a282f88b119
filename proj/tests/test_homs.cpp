#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "orbicalc/corpus.hpp"
#include "orbicalc/errors.hpp"
#include "orbicalc/homs.hpp"
#include "oracles.hpp"

using namespace orbicalc;
using oracle::brute_hom_count;

namespace {

FiniteGroup relabeled(const FiniteGroup& g, std::mt19937& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::vector<int>> t(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) t[p[a]][p[b]] = p[g.mul(a, b)];
  return FiniteGroup(std::move(t));
}

const FiniteGroup& grp(const char* name) { return corpus_group(name).group; }

}  // namespace

TEST_CASE("enumerate_homs") {
  CHECK(enumerate_homs(grp("trivial"), grp("s3")).size() == 1);
  CHECK(enumerate_homs(grp("c2"), grp("s3")).size() == 4);
  CHECK(enumerate_homs(grp("c3"), grp("c2")).size() == 1);
  for (const auto& phi : enumerate_homs(grp("q8"), grp("s4"))) CHECK(is_homomorphism(grp("q8"), grp("s4"), phi));
  HomLimits tight;
  tight.max_homs = 10;
  CHECK_THROWS_AS(enumerate_homs(grp("c2xc2xc2"), grp("c2xc2xc2"), tight), DomainError);
}

TEST_CASE("enumerate_homs agrees with brute force over generator images") {
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(12)) {
      std::size_t tuples = 1;
      for (std::size_t i = 0; i < greedy_generators(g.group).size(); ++i) tuples *= h.group.order();
      if (tuples > 1'000'000) continue;
      CAPTURE(g.name);
      CAPTURE(h.name);
      const auto homs = enumerate_homs(g.group, h.group);
      CHECK(homs.size() == brute_hom_count(g.group, h.group));
      CHECK(std::set<ElementMap>(homs.begin(), homs.end()).size() == homs.size());
    }
}

TEST_CASE("hom_classes") {
  SUBCASE("c2 -> c2") {
    const auto cls = hom_classes(grp("c2"), grp("c2"));
    REQUIRE(cls.size() == 2);
    CHECK_FALSE(cls[0].injective);
    CHECK(cls[1].injective);
  }
  SUBCASE("c2 -> s3") {
    const auto cls = hom_classes(grp("c2"), grp("s3"));
    REQUIRE(cls.size() == 2);
    std::multiset<int> orbits{cls[0].orbit_size, cls[1].orbit_size};
    CHECK(orbits == std::multiset<int>{1, 3});
  }
  SUBCASE("s3 -> c2") {
    const auto cls = hom_classes(grp("s3"), grp("c2"));
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].representative == ElementMap(6, 0));
  }
  SUBCASE("orbit-stabilizer and partition on small pairs") {
    for (const auto& g : corpus_groups_up_to(8))
      for (const auto& h : corpus_groups_up_to(12)) {
        CAPTURE(g.name);
        CAPTURE(h.name);
        const auto homs = enumerate_homs(g.group, h.group);
        const auto cls = hom_classes(g.group, h.group);
        std::size_t sum = 0;
        for (const auto& c : cls) {
          CHECK(static_cast<std::size_t>(h.group.order() / centralizer(h.group, c.representative).order()) ==
                static_cast<std::size_t>(c.orbit_size));
          sum += c.orbit_size;
          CHECK(c.representative == canonical_conjugate(h.group, c.representative));
          CHECK(c.injective == is_injective(c.representative));
        }
        CHECK(sum == homs.size());
        for (const auto& phi : homs) CHECK(find_class(cls, h.group, phi) >= 0);
      }
  }
}

TEST_CASE("pi1") {
  const auto& s3 = grp("s3");
  const auto c2_s3 = hom_classes(grp("c2"), s3);
  CHECK(pi1(s3, c2_s3[0]).order() == 6);
  CHECK(pi1(s3, c2_s3[1]).order() == 2);
  const auto s3_s3 = hom_classes(s3, s3);
  for (const auto& c : s3_s3) {
    CHECK(pi1(s3, c).order() == c.centralizer_order);
    if (c.injective) CHECK(pi1(s3, c).order() == 1);
  }
}

TEST_CASE("rep_hom_classes") {
  CHECK(rep_hom_classes(grp("c2"), grp("s3")).injective.size() == 1);
  CHECK(rep_hom_classes(grp("c2"), grp("c3")).injective.size() == 0);
  CHECK(rep_hom_classes(grp("trivial"), grp("q8")).injective.size() == 1);
  for (const auto& g : corpus_groups_up_to(8))
    for (const auto& h : corpus_groups_up_to(12)) {
      CAPTURE(g.name);
      CAPTURE(h.name);
      const auto report = rep_hom_classes(g.group, h.group);
      CHECK(report.partition_sum == report.all_classes);
      CHECK(report.injective.size() + report.classes_through_quotients == report.all_classes);
    }
}

TEST_CASE("hom counts are invariant under isomorphic copies") {
  std::mt19937 rng(5);
  for (const auto& g : corpus_groups_up_to(8))
    for (const char* hn : {"s3", "d8", "q8", "c2xc6"}) {
      const auto& h = grp(hn);
      const auto g2 = relabeled(g.group, rng);
      const auto h2 = relabeled(h, rng);
      REQUIRE(are_isomorphic(g.group, g2).has_value());
      REQUIRE(are_isomorphic(h, h2).has_value());
      const auto n = enumerate_homs(g.group, h).size();
      CHECK(enumerate_homs(g2, h).size() == n);
      CHECK(enumerate_homs(g.group, h2).size() == n);
      CHECK(hom_classes(g2, h2).size() == hom_classes(g.group, h).size());
    }
}

TEST_CASE("composition is well defined on conjugacy classes") {
  const auto small = corpus_groups_up_to(6);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        const auto ab = hom_classes(a.group, b.group);
        const auto bc = hom_classes(b.group, c.group);
        const auto ac = hom_classes(a.group, c.group);
        const auto ab_all = enumerate_homs(a.group, b.group);
        const auto bc_all = enumerate_homs(b.group, c.group);
        for (const auto& phi : ab_all)
          for (const auto& psi : bc_all) {
            const int expected = find_class(ac, c.group,
                                            compose(ab[find_class(ab, b.group, phi)].representative,
                                                    bc[find_class(bc, c.group, psi)].representative));
            CHECK(find_class(ac, c.group, compose(phi, psi)) == expected);
          }
      }
}
