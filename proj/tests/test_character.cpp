#include <doctest.h>

#include <thread>

#include "bredon/character.hpp"
#include "bredon/errors.hpp"
#include "support/table1.hpp"

using namespace bredon;
using bredon_tests::close_row;
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

GroupHomomorphism embed_c2_in(const GroupPtr& target) {
  auto c2 = cyclic(2);
  int img = -1;
  for (int e = 1; e < static_cast<int>(target->order()); ++e)
    if (target->element_order(e) == 2) {
      img = e;
      break;
    }
  auto h = homomorphism_from_generator_images(c2, target, {img});
  REQUIRE(h.has_value());
  return *h;
}

}  // namespace

TEST_CASE("character table of C2") {
  auto t = character_table(cyclic(2));
  REQUIRE(t->num_irreducibles() == 2);
  CHECK(t->degrees[0] == 1);
  CHECK(t->degrees[1] == 1);
  CHECK(t->irreducibles[0] == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
  CHECK(t->irreducibles[1] == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});
}

TEST_CASE("character table of the trivial group") {
  auto t = character_table(cyclic(1));
  REQUIRE(t->num_irreducibles() == 1);
  CHECK(t->irreducibles[0][0] == Cyclotomic(1));
}

TEST_CASE("character table of the order-24 vertex stabilizer") {
  auto g = close_row(table1_rows()[0]);
  auto t = character_table(g);
  REQUIRE(t->num_irreducibles() == 5);
  std::multiset<long> degs;
  for (const auto& d : t->degrees) degs.insert(static_cast<long>(d));
  CHECK(degs == std::multiset<long>{1, 1, 2, 3, 3});
  // orthogonality is verified inside character_table; spot-check one inner
  // product anyway through the public surface
  CHECK(t->inner_product(t->irreducibles[2], t->irreducibles[2]) == Cyclotomic(1));
  CHECK(t->inner_product(t->irreducibles[2], t->irreducibles[3]) == Cyclotomic(0));
}

TEST_CASE("character table cap") {
  CHECK_THROWS_AS(character_table(cyclic(12), 10), CapExceeded);
}

TEST_CASE("induction along homomorphisms") {
  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  auto c6 = cyclic(6);
  auto t2 = character_table(c2);

  SUBCASE("trivial subgroup induces the regular character") {
    auto triv = cyclic(1);
    auto h = homomorphism_from_generator_images(triv, c2, {});
    REQUIRE(h.has_value());
    auto reg = induce(trivial_character(character_table(triv)), *h);
    CHECK(reg.values[0] == Cyclotomic(2));
    CHECK(reg.values[1] == Cyclotomic(0));
  }
  SUBCASE("sign character of C2 into C4 decomposes into the two faithful lines") {
    auto h = embed_c2_in(c4);
    auto ind = induce(irreducible_character(t2, 1), h);
    auto coeffs = decompose(ind).coeffs;
    CHECK(coeffs == std::vector<Integer>{0, 0, 1, 1});
  }
  SUBCASE("induction along the identity is the identity") {
    auto chi = irreducible_character(t2, 1);
    auto ind = induce(chi, identity_homomorphism(c2));
    CHECK(ind.values == chi.values);
  }
  SUBCASE("induction matrix C2 -> C4 is the pinned 4x2 block") {
    auto m = induction_matrix(embed_c2_in(c4));
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 2);
    long expected[4][2] = {{1, 0}, {1, 0}, {0, 1}, {0, 1}};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(m.at(i, j) == expected[i][j]);
  }
  SUBCASE("induction matrix C2 -> C6 has column sums 3") {
    auto m = induction_matrix(embed_c2_in(c6));
    REQUIRE(m.rows() == 6);
    REQUIRE(m.cols() == 2);
    for (std::size_t j = 0; j < 2; ++j) {
      Integer sum = 0;
      for (std::size_t i = 0; i < 6; ++i) sum += m.at(i, j);
      CHECK(sum == 3);
    }
  }
  SUBCASE("induction requires injectivity") {
    GroupHomomorphism collapse{c2, cyclic(1), {0, 0}};
    CHECK_THROWS_AS(induction_matrix(collapse), NonInjectiveHomomorphism);
  }
}

TEST_CASE("restriction along homomorphisms") {
  auto c2 = cyclic(2);
  auto v1 = close_row(table1_rows()[0]);
  auto tv1 = character_table(v1);
  SUBCASE("restriction of the trivial character is trivial") {
    auto h = embed_c2_in(v1);
    auto res = restrict_along(trivial_character(tv1), h);
    CHECK(res.values == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
  }
  SUBCASE("restricting a degree-3 irreducible lands in nonnegative coefficients") {
    auto h = embed_c2_in(v1);
    std::size_t deg3 = 0;
    while (tv1->degrees[deg3] != 3) ++deg3;
    auto res = restrict_along(irreducible_character(tv1, deg3), h);
    CHECK(res.values[0] == Cyclotomic(3));
    auto coeffs = decompose(res).coeffs;
    Integer total = 0;
    for (const auto& c : coeffs) {
      CHECK(c >= 0);
      total += c;
    }
    CHECK(total >= 1);
  }
  SUBCASE("restriction along the identity is the identity") {
    auto chi = irreducible_character(tv1, 2);
    auto res = restrict_along(chi, identity_homomorphism(v1));
    CHECK(res.values == chi.values);
  }
}

TEST_CASE("decompose") {
  auto c2 = cyclic(2);
  auto t2 = character_table(c2);
  SUBCASE("trivial character is the unit vector at index 0") {
    CHECK(decompose(trivial_character(t2)).coeffs == std::vector<Integer>{1, 0});
  }
  SUBCASE("regular character of C2 is [1,1]") {
    ClassFunction reg{t2, {Cyclotomic(2), Cyclotomic(0)}};
    CHECK(decompose(reg).coeffs == std::vector<Integer>{1, 1});
  }
  SUBCASE("non-virtual class functions are rejected") {
    ClassFunction bad{t2, {Cyclotomic(1), Cyclotomic(0)}};
    CHECK_THROWS_AS(decompose(bad), NotVirtualCharacter);
  }
}

TEST_CASE("Frobenius reciprocity as a transpose identity") {
  auto c4 = cyclic(4);
  auto c6 = cyclic(6);
  for (auto target : {c4, c6}) {
    auto h = embed_c2_in(target);
    CHECK(induction_matrix(h) == restriction_matrix(h).transposed());
  }
  auto h = identity_homomorphism(cyclic(2));
  CHECK(induction_matrix(h) == IntegerMatrix::identity(2));
  CHECK(restriction_matrix(h) == IntegerMatrix::identity(2));
}

TEST_CASE("inner automorphisms act trivially on the representation ring") {
  auto v1 = close_row(table1_rows()[0]);
  for (int g = 0; g < 6; ++g) {
    GroupHomomorphism conj{v1, v1, {}};
    conj.images.resize(v1->order());
    for (std::size_t x = 0; x < v1->order(); ++x)
      conj.images[x] = v1->conjugate(g, static_cast<int>(x));
    REQUIRE(conj.verify());
    CHECK(induction_matrix(conj) == IntegerMatrix::identity(5));
    CHECK(restriction_matrix(conj) == IntegerMatrix::identity(5));
  }
}

TEST_CASE("table cache is shared and safe under concurrent lookup") {
  auto a = close_row(table1_rows()[2]);  // another S4 copy
  std::vector<CharacterTablePtr> seen(8);
  std::vector<std::thread> workers;
  for (int i = 0; i < 8; ++i)
    workers.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = character_table(a); });
  for (auto& w : workers) w.join();
  for (int i = 1; i < 8; ++i) CHECK(seen[static_cast<std::size_t>(i)] == seen[0]);
}
