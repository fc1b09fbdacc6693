#include <doctest.h>

#include <set>

#include "bredon/errors.hpp"
#include "bredon/group.hpp"
#include "support/table1.hpp"

using namespace bredon;
using bredon_tests::close_row;
using bredon_tests::table1_generators;
using bredon_tests::table1_rows;

namespace {

GroupPtr cyclic(int n) {
  std::vector<long> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<std::vector<long>> gens;
  if (n > 1) gens.push_back(img);
  return std::make_shared<FiniteGroup>(
      close_permutation_group(gens, static_cast<std::size_t>(n), 200, "C" + std::to_string(n)));
}

}  // namespace

TEST_CASE("closure of the fundamental-domain stabilizers") {
  for (const auto& row : table1_rows()) {
    auto g = close_row(row);
    CHECK_MESSAGE(g->order() == row.order, row.cell);
    CHECK(verify_group_axioms(*g));
    CHECK(iso_label(*g) == row.type);
  }
}

TEST_CASE("empty generator set closes to the trivial group") {
  auto g = close_matrix_group({}, 3, 200, "triv");
  CHECK(g.order() == 1);
  CHECK(g.mul(0, 0) == 0);
}

TEST_CASE("closure cap and invertibility errors") {
  // a shear has infinite order
  CHECK_THROWS_AS(close_matrix_group({{1, 1, 0, 1}}, 2, 50, "shear"), ClosureExceedsCap);
  CHECK_THROWS_AS(close_matrix_group({{2, 0, 0, 2}}, 2, 50, "scale"), NonInvertibleGenerator);
  CHECK_THROWS_AS(close_permutation_group({{0, 0, 1}}, 3, 50, "notperm"),
                  NonInvertibleGenerator);
}

TEST_CASE("conjugacy classes") {
  SUBCASE("trivial group has the singleton class") {
    auto cls = conjugacy_classes(*cyclic(1));
    CHECK(cls.members.size() == 1);
    CHECK(cls.members[0] == std::vector<int>{0});
  }
  SUBCASE("C2 has two singleton classes") {
    auto cls = conjugacy_classes(*cyclic(2));
    CHECK(cls.members.size() == 2);
  }
  SUBCASE("the order-24 vertex stabilizer has classes 1,3,6,6,8") {
    auto g = close_row(table1_rows()[0]);  // v1
    auto cls = conjugacy_classes(*g);
    // brute-force oracle: conjugation orbits via a direct double loop
    std::set<std::set<int>> orbits;
    for (int a = 0; a < 24; ++a) {
      std::set<int> orbit;
      for (int x = 0; x < 24; ++x) orbit.insert(g->conjugate(x, a));
      orbits.insert(orbit);
    }
    CHECK(orbits.size() == cls.members.size());
    std::multiset<std::size_t> sizes;
    for (const auto& c : cls.members) sizes.insert(c.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 3, 6, 6, 8});
    // identity class first, sizes sum to |G|, each size divides |G|
    CHECK(cls.members[0] == std::vector<int>{0});
    std::size_t total = 0;
    for (const auto& c : cls.members) {
      total += c.size();
      CHECK(24 % c.size() == 0);
    }
    CHECK(total == 24);
  }
}

TEST_CASE("homomorphism verification") {
  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  SUBCASE("identity map verifies") {
    CHECK(identity_homomorphism(c4).verify());
  }
  SUBCASE("involution to an order-4 element fails with a violating pair") {
    GroupHomomorphism h{c2, c4, {0, 1}};
    auto bad = h.first_violation();
    REQUIRE(bad.has_value());
    CHECK(h.images[c2->mul(bad->first, bad->second)] !=
          c4->mul(h.images[bad->first], h.images[bad->second]));
  }
  SUBCASE("involution to the square of a generator verifies") {
    GroupHomomorphism h{c2, c4, {0, 2}};
    CHECK(h.verify());
    CHECK(h.is_injective());
  }
  SUBCASE("generator images extend along the closure order") {
    auto h = homomorphism_from_generator_images(c2, c4, {2});
    REQUIRE(h.has_value());
    CHECK(h->images == std::vector<int>{0, 2});
    CHECK_FALSE(homomorphism_from_generator_images(c2, c4, {1}).has_value());
  }
}

TEST_CASE("direct products") {
  auto c2 = cyclic(2);
  SUBCASE("C2 x C2 is elementary abelian") {
    auto p = direct_product(c2, c2, 200);
    CHECK(p.group->order() == 4);
    for (int a = 1; a < 4; ++a) CHECK(p.group->element_order(a) == 2);
    CHECK(p.onto_left.verify());
    CHECK(p.onto_right.verify());
  }
  SUBCASE("trivial x G is a copy of G") {
    auto g = close_row(table1_rows()[1]);  // D6
    auto p = direct_product(cyclic(1), g, 200);
    CHECK(p.group->order() == g->order());
    CHECK(p.group->mul_table() == g->mul_table());
  }
  SUBCASE("D3 x C2 has order 12") {
    auto d3 = close_row(table1_rows()[6]);  // e2 row
    auto p = direct_product(d3, c2, 200);
    CHECK(p.group->order() == 12);
    // projections recover factor multiplication
    for (int a = 0; a < 12; ++a)
      for (int b = 0; b < 12; ++b) {
        int ab = p.group->mul(a, b);
        CHECK(p.onto_left.images[static_cast<std::size_t>(ab)] ==
              d3->mul(p.onto_left.images[static_cast<std::size_t>(a)],
                      p.onto_left.images[static_cast<std::size_t>(b)]));
      }
  }
  SUBCASE("cap applies to the product order") {
    CHECK_THROWS_AS(direct_product(close_row(table1_rows()[0]), close_row(table1_rows()[0]), 100),
                    ClosureExceedsCap);
  }
}

TEST_CASE("centralizer, generated subgroups, orders") {
  auto v1 = close_row(table1_rows()[0]);
  SUBCASE("centralizer of the trivial subgroup is everything") {
    CHECK(centralizer(*v1, {0}).size() == v1->order());
  }
  SUBCASE("exponent of C2 x C2 is 2") {
    auto p = direct_product(cyclic(2), cyclic(2), 200);
    CHECK(p.group->exponent() == 2);
  }
  SUBCASE("the g2 generator of the v1 stabilizer has order 2") {
    // g2 is the first generator by construction
    CHECK(v1->element_order(v1->generators[0]) == 2);
  }
  SUBCASE("subgroup_generated closes") {
    auto sub = subgroup_generated(*v1, {v1->generators[0]});
    CHECK(sub.size() == 2);
  }
}

TEST_CASE("subgroup enumeration at desk scale") {
  auto v1 = close_row(table1_rows()[0]);  // S4
  auto subs = all_subgroups(*v1);
  CHECK(subs.size() == 30);
  auto classes = subgroup_conjugacy_classes(*v1);
  CHECK(classes.representative.size() == 11);
  // Lagrange
  for (const auto& s : subs) CHECK(v1->order() % s.size() == 0);
}

TEST_CASE("subgroup materialization keeps the inclusion a homomorphism") {
  auto v1 = close_row(table1_rows()[0]);
  auto subs = all_subgroups(*v1);
  for (const auto& s : subs) {
    auto emb = subgroup_as_group(v1, s);
    CHECK(emb.inclusion.verify());
    CHECK(emb.inclusion.is_injective());
    CHECK(emb.group->order() == s.size());
  }
}
