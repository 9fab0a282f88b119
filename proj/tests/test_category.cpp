#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbicalc/category.hpp"

using namespace orbicalc;

namespace {

FiniteCategory one_arrow() { return FiniteCategory({"A", "B"}, {{"w", "A", "B"}}, {}); }

// f: 0 -> 2 and w: 1 -> 2 with nothing into 0 but its identity and no arrow 0 -> 1.
FiniteCategory cospan() { return free_category({"0", "1", "2"}, {{"f", "0", "2"}, {"w", "1", "2"}}); }

// f1 != f2: 0 -> 1 made equal by w: 1 -> 2.
FiniteCategory coequalized_pair() {
  return FiniteCategory({"0", "1", "2"}, {{"f1", "0", "1"}, {"f2", "0", "1"}, {"w", "1", "2"}, {"h", "0", "2"}},
                        {{{"f1", "w", "h"}}, {{"f2", "w", "h"}}});
}

std::set<std::pair<std::string, std::string>> names(const FiniteCategory& c, const std::vector<Span>& spans) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& s : spans) out.emplace(c.arrow(s.s).name, c.arrow(s.f).name);
  return out;
}

}  // namespace

TEST_CASE("FiniteCategory construction") {
  const auto c = poset_category(3, {{0, 1}, {1, 2}});
  CHECK(c.arrow_count() == 6);
  CHECK(c.arrow(c.then(c.arrow_index("0<1"), c.arrow_index("1<2"))).name == "0<2");
  CHECK(c.then(c.identity(0), c.arrow_index("0<1")) == c.arrow_index("0<1"));
  CHECK_THROWS_AS(c.then(c.arrow_index("1<2"), c.arrow_index("0<1")), DomainError);
  CHECK(free_category({"0", "1", "2"}, {{"a", "0", "1"}, {"b", "0", "1"}, {"c", "1", "2"}}).arrow_count() == 8);

  CHECK_THROWS_AS(FiniteCategory({"x"}, {{"e", "x", "x"}}, {}), DomainError);  // e then e missing
  // e then e = id is fine; a non-associative table is rejected
  CHECK_NOTHROW(FiniteCategory({"x"}, {{"e", "x", "x"}}, {{{"e", "e", "id_x"}}}));
  CHECK_THROWS_AS(FiniteCategory({"x"}, {{"e", "x", "x"}, {"f", "x", "x"}},
                                 {{{"e", "e", "e"}}, {{"e", "f", "e"}}, {{"f", "e", "f"}}, {{"f", "f", "id_x"}}}),
                  DomainError);
  CHECK_THROWS_AS(free_category({"0"}, {{"loop", "0", "0"}}), DomainError);
  CHECK_THROWS_AS(poset_category(2, {{0, 1}, {1, 0}}), DomainError);
}

TEST_CASE("JSON round trip") {
  for (const auto& nc : category_corpus()) {
    CAPTURE(nc.name);
    const auto doc = category_to_json(nc.category, nc.w);
    const auto back = parse_category_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.w == nc.w);
    CHECK(category_to_json(back.category, back.w) == doc);
  }
  CHECK_THROWS_AS(parse_category_json(nlohmann::json::parse(R"({"objects": ["a"], "arrows": [{"name": "f"}]})")),
                  DomainError);
  CHECK_THROWS_AS(parse_category_json(nlohmann::json::parse(R"({"objects": ["a"], "W": ["nope"]})")), DomainError);
}

TEST_CASE("check_right_multiplicative") {
  SUBCASE("identities only") {
    for (const auto& nc : category_corpus()) CHECK(check_right_multiplicative(nc.category, identities_only(nc.category)).valid);
  }
  SUBCASE("the chain with its second arrow in W") {
    const auto c = poset_category(3, {{0, 1}, {1, 2}});
    CHECK(check_right_multiplicative(c, arrow_class(c, {"id_0", "id_1", "id_2", "1<2"})).valid);
    // without the identities the first axiom fails
    const auto v = check_right_multiplicative(c, arrow_class(c, {"1<2"}));
    CHECK_FALSE(v.valid);
    CHECK(v.axiom == "identities");
  }
  SUBCASE("commutative square with both verticals in W") {
    const auto c = poset_category(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(check_right_multiplicative(c, arrow_class(c, {"id_0", "id_1", "id_2", "id_3", "0<2", "1<3"})).valid);
    const auto v = check_right_multiplicative(c, arrow_class(c, {"id_0", "id_1", "id_2", "id_3", "0<1", "1<3"}));
    CHECK_FALSE(v.valid);
    CHECK(v.axiom == "composition");
    CHECK(v.witness == std::vector<std::string>{"0<1", "1<3"});
  }
  SUBCASE("Ore violation") {
    const auto c = cospan();
    const auto v = check_right_multiplicative(c, arrow_class(c, {"id_0", "id_1", "id_2", "w"}));
    CHECK_FALSE(v.valid);
    CHECK(v.axiom == "ore");
    CHECK(v.witness == std::vector<std::string>{"f", "w"});
  }
  SUBCASE("cancellability violation") {
    const auto c = coequalized_pair();
    const auto v = check_right_multiplicative(c, arrow_class(c, {"id_0", "id_1", "id_2", "w"}));
    CHECK_FALSE(v.valid);
    CHECK(v.axiom == "cancellability");
    CHECK(v.witness == std::vector<std::string>{"f1", "f2", "w"});
  }
  SUBCASE("corpus systems are valid and their over-categories cofiltered") {
    for (const auto& nc : category_corpus()) {
      CAPTURE(nc.name);
      CHECK(nc.category.arrow_count() <= 12);
      REQUIRE(check_right_multiplicative(nc.category, nc.w).valid);
      for (std::size_t x = 0; x < nc.category.object_count(); ++x)
        CHECK(over_category_filtered(nc.category, nc.w, static_cast<int>(x)));
    }
  }
}

TEST_CASE("localize_hom") {
  SUBCASE("identities only reproduce the hom-sets") {
    REQUIRE(category_corpus().size() == 20);
    for (const auto& nc : category_corpus()) {
      const auto& c = nc.category;
      const auto w = identities_only(c);
      for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < c.object_count(); ++y) {
          const auto spans = localize_hom(c, w, static_cast<int>(x), static_cast<int>(y));
          std::vector<int> fs;
          for (const auto& s : spans) {
            CHECK(s.s == c.identity(static_cast<int>(x)));
            fs.push_back(s.f);
          }
          CHECK(fs == c.hom(static_cast<int>(x), static_cast<int>(y)));
        }
    }
  }
  SUBCASE("inverting one arrow") {
    const auto c = one_arrow();
    const auto w = arrow_class(c, {"id_A", "id_B", "w"});
    const int a = c.object_index("A"), b = c.object_index("B");
    CHECK(names(c, localize_hom(c, w, b, a)) == std::set<std::pair<std::string, std::string>>{{"w", "id_A"}});
    CHECK(localize_hom(c, w, a, b).size() == 1);
    CHECK(localize_hom(c, w, b, b).size() == 1);
    CHECK(localize_hom(c, w, a, a).size() == 1);
  }
  SUBCASE("invertible W changes nothing") {
    for (const auto& nc : category_corpus()) {
      const auto& c = nc.category;
      bool invertible = true;
      for (int s : nc.w) {
        const auto& a = c.arrow(s);
        bool has = false;
        for (int g : c.hom(a.dst, a.src)) has = has || (c.then(s, g) == c.identity(a.src) && c.then(g, s) == c.identity(a.dst));
        invertible = invertible && has;
      }
      if (!invertible) continue;
      CAPTURE(nc.name);
      for (std::size_t x = 0; x < c.object_count(); ++x)
        for (std::size_t y = 0; y < c.object_count(); ++y)
          CHECK(localize_hom(c, nc.w, static_cast<int>(x), static_cast<int>(y)).size() ==
                c.hom(static_cast<int>(x), static_cast<int>(y)).size());
    }
  }
  SUBCASE("the inverted chain collapses to a contractible groupoid") {
    const auto c = poset_category(3, {{0, 1}, {1, 2}});
    const auto w = arrow_class(c, {"id_0", "id_1", "id_2", "0<1", "1<2", "0<2"});
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) CHECK(localize_hom(c, w, x, y).size() == 1);
  }
  SUBCASE("a system that fails is refused") {
    const auto c = cospan();
    CHECK_THROWS_AS(localize_hom(c, arrow_class(c, {"id_0", "id_1", "id_2", "w"}), 0, 1), DomainError);
  }
}

TEST_CASE("verify_universal_property") {
  for (const auto& nc : category_corpus()) {
    CAPTURE(nc.name);
    const auto ident = verify_universal_property(nc.category, identities_only(nc.category));
    CHECK(ident.holds);
    CHECK(ident.functors_checked > 0);
    const auto r = verify_universal_property(nc.category, nc.w);
    CHECK(r.holds);
  }
  const auto c = one_arrow();
  const auto r = verify_universal_property(c, arrow_class(c, {"id_A", "id_B", "w"}));
  CHECK(r.holds);
  // W-inverting functors from A -> B: 1 into the point, 2 into the discrete pair, 2 constant
  // into the walking arrow, 4 into the walking iso (constants and the two isomorphisms),
  // and one per group element into c2 and c3
  CHECK(r.functors_checked == 14);
  CHECK_THROWS_AS(verify_universal_property(cospan(), arrow_class(cospan(), {"id_0", "id_1", "id_2", "w"})),
                  DomainError);
  CHECK_THROWS_AS(verify_universal_property(poset_category(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}),
                                            identities_only(poset_category(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}))),
                  DomainError);
}
