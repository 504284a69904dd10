#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "binact/catalog.hpp"
#include "binact/group.hpp"
#include "oracles.hpp"

using namespace binact;

namespace {

std::vector<int> ids(const FiniteGroup& g, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(g.element(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("catalog groups construct and validate") {
  for (const auto& name : catalog_group_names()) {
    const FiniteGroup& g = catalog_group(name);
    CHECK(g.size() >= 2);
    CHECK(g.mul(g.identity(), 1) == 1);
  }
  CHECK(catalog_group("S3").size() == 6);
  CHECK(catalog_group("S4").size() == 24);
  CHECK(catalog_group("A4").size() == 12);
  CHECK(catalog_group("D4").size() == 8);
  CHECK(catalog_group("Q8").size() == 8);
  CHECK(catalog_group("C7").size() == 7);
  CHECK_THROWS_AS(catalog_group("E8"), std::domain_error);
}

TEST_CASE("cycle notation") {
  CHECK(FiniteGroup::cycle_notation({1, 2, 3}) == "e");
  CHECK(FiniteGroup::cycle_notation({2, 1, 3}) == "(12)");
  CHECK(FiniteGroup::cycle_notation({2, 3, 1}) == "(123)");
  CHECK(FiniteGroup::cycle_notation({2, 1, 4, 3}) == "(12)(34)");
}

TEST_CASE("table validation rejects non-groups") {
  // Non-associative magma with identity: entry (1,1) broken.
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a", "b"},
                                          {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}),
                  std::invalid_argument);
  // No identity.
  CHECK_THROWS_AS(FiniteGroup::from_table({"a", "b"}, {{1, 0}, {1, 0}}),
                  std::invalid_argument);
  // Ragged table.
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {{0, 1}, {1}}), std::invalid_argument);
  // Out-of-range entry.
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "a"}, {{0, 1}, {1, 7}}), std::invalid_argument);
  // Duplicate names.
  CHECK_THROWS_AS(FiniteGroup::from_table({"e", "e"}, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("permutation generator validation") {
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators({{1, 1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators({{2, 1}, {2, 3, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators({}), std::invalid_argument);
  const FiniteGroup s3 = FiniteGroup::from_permutation_generators({{2, 1, 3}, {2, 3, 1}});
  CHECK(s3.size() == 6);
  CHECK(s3.name(s3.identity()) == "e");
}

TEST_CASE("subgroup_generated matches brute-force closure") {
  const FiniteGroup& s3 = catalog_group("S3");
  SECTION("single transposition") {
    const Subgroup h = subgroup_generated(s3, {s3.element("(12)")});
    CHECK(h.members == ids(s3, {"e", "(12)"}));
  }
  SECTION("empty generator set gives the trivial subgroup") {
    const Subgroup h = subgroup_generated(s3, {});
    CHECK(h.members == std::vector<int>{s3.identity()});
  }
  SECTION("cyclic generator spans C4") {
    const FiniteGroup& c4 = catalog_group("C4");
    CHECK(subgroup_generated(c4, {c4.element("g")}).size() == 4);
  }
  SECTION("agrees with the closure oracle on every singleton and pair") {
    for (const auto& gname : {"S3", "D4", "Q8", "A4"}) {
      const FiniteGroup& g = catalog_group(gname);
      for (int a = 0; a < g.size(); ++a) {
        CHECK(subgroup_generated(g, {a}).members == oracle::subgroup_closure(g, {a}));
        for (int b = 0; b < g.size(); ++b)
          CHECK(subgroup_generated(g, {a, b}).members == oracle::subgroup_closure(g, {a, b}));
      }
    }
  }
  SECTION("out-of-range generator") {
    CHECK_THROWS_AS(subgroup_generated(s3, {17}), std::domain_error);
  }
}

TEST_CASE("normalizer") {
  const FiniteGroup& s3 = catalog_group("S3");
  SECTION("self-normalizing transposition subgroup") {
    const Subgroup h = subgroup_generated(s3, {s3.element("(12)")});
    CHECK(normalizer(s3, h).members == h.members);
  }
  SECTION("normal subgroup has the whole group as normalizer") {
    const Subgroup a3 = subgroup_generated(s3, {s3.element("(123)")});
    CHECK(normalizer(s3, a3).size() == s3.size());
    CHECK(is_normal(s3, a3));
  }
  SECTION("trivial subgroup is normal") {
    for (const auto& gname : {"S3", "Q8", "C6"}) {
      const FiniteGroup& g = catalog_group(gname);
      CHECK(normalizer(g, trivial_subgroup(g)).size() == g.size());
    }
  }
  SECTION("always contains H and is closed") {
    for (const auto& gname : {"S3", "D4", "S4"}) {
      const FiniteGroup& g = catalog_group(gname);
      for (int a = 0; a < g.size(); ++a) {
        const Subgroup h = subgroup_generated(g, {a});
        const Subgroup n = normalizer(g, h);
        for (int m : h.members) CHECK(n.contains(m));
        CHECK(is_subgroup(g, n.members));
      }
    }
  }
  SECTION("rejects a subgroup of another group") {
    const Subgroup h = subgroup_generated(s3, {});
    CHECK_THROWS_AS(normalizer(catalog_group("S4"), h), std::domain_error);
  }
}

TEST_CASE("commutator") {
  const FiniteGroup& s3 = catalog_group("S3");
  SECTION("[g,g] = e") {
    for (int a = 0; a < s3.size(); ++a) CHECK(commutator(s3, a, a) == s3.identity());
  }
  SECTION("Abelian groups commute") {
    const FiniteGroup& c6 = catalog_group("C6");
    for (int a = 0; a < c6.size(); ++a)
      for (int b = 0; b < c6.size(); ++b) CHECK(commutator(c6, a, b) == c6.identity());
  }
  SECTION("[(12),(123)] evaluates through the table") {
    const int g = s3.element("(12)");
    const int h = s3.element("(123)");
    CHECK(commutator(s3, g, h) == s3.mul(h, h));
    CHECK(s3.name(commutator(s3, g, h)) == "(132)");
  }
  SECTION("element handles detect mixed groups") {
    GroupElement a{&s3, s3.element("(12)")};
    GroupElement b{&catalog_group("S4"), 1};
    CHECK_THROWS_AS(commutator(a, b), std::domain_error);
    GroupElement c{&s3, s3.element("(123)")};
    CHECK(commutator(a, c).id == s3.element("(132)"));
  }
}

TEST_CASE("commutator subgroup") {
  SECTION("trivial iff Abelian") {
    CHECK(commutator_subgroup(catalog_group("C6")).size() == 1);
    CHECK(commutator_subgroup(catalog_group("C8")).size() == 1);
    CHECK(commutator_subgroup(catalog_group("S3")).size() > 1);
  }
  SECTION("S3' = A3") {
    const FiniteGroup& s3 = catalog_group("S3");
    CHECK(commutator_subgroup(s3).members == ids(s3, {"e", "(123)", "(132)"}));
  }
  SECTION("Q8' = {1,-1}") {
    const FiniteGroup& q8 = catalog_group("Q8");
    CHECK(commutator_subgroup(q8).members == ids(q8, {"1", "-1"}));
  }
  SECTION("matches the enumeration oracle and is conjugation-invariant") {
    for (const auto& gname : {"S3", "S4", "D4", "Q8", "A4"}) {
      const FiniteGroup& g = catalog_group(gname);
      const Subgroup gp = commutator_subgroup(g);
      CHECK(gp.members == oracle::commutator_subgroup(g));
      for (int x = 0; x < g.size(); ++x)
        for (int m : gp.members) CHECK(gp.contains(g.conjugate(m, x)));
    }
  }
}

TEST_CASE("left cosets") {
  const FiniteGroup& s3 = catalog_group("S3");
  const Subgroup a3 = subgroup_generated(s3, {s3.element("(123)")});
  SECTION("S3 / A3 has two blocks of three") {
    const auto blocks = left_cosets(s3, a3);
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].size() == 3);
    CHECK(blocks[1].size() == 3);
  }
  SECTION("H = G gives one block") {
    CHECK(left_cosets(s3, whole_group(s3)).size() == 1);
  }
  SECTION("trivial H gives singletons") {
    CHECK(left_cosets(s3, trivial_subgroup(s3)).size() == static_cast<std::size_t>(s3.size()));
  }
  SECTION("Lagrange: all blocks have size |H|, partition covers G") {
    for (const auto& gname : {"S3", "D4", "Q8", "S4"}) {
      const FiniteGroup& g = catalog_group(gname);
      for (int a = 0; a < g.size(); ++a) {
        const Subgroup h = subgroup_generated(g, {a});
        const auto blocks = left_cosets(g, h);
        CHECK(blocks == oracle::left_cosets(g, h.members));
        std::set<int> all;
        for (const auto& b : blocks) {
          CHECK(static_cast<int>(b.size()) == h.size());
          all.insert(b.begin(), b.end());
        }
        CHECK(static_cast<int>(all.size()) == g.size());
      }
    }
  }
}

TEST_CASE("subgroup_from_members validates closure") {
  const FiniteGroup& s3 = catalog_group("S3");
  CHECK_THROWS_AS(subgroup_from_members(s3, {s3.identity(), s3.element("(123)")}),
                  std::domain_error);
  CHECK(subgroup_from_members(s3, ids(s3, {"e", "(123)", "(132)"})).size() == 3);
}
