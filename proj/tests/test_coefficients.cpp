#include <doctest.h>

#include "bredon/burnside.hpp"
#include "bredon/coefficients.hpp"
#include "bredon/errors.hpp"
#include "bredon/gcw_io.hpp"
#include "support/oracles.hpp"
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

const EquivariantCellComplex& sl3z() {
  static auto x = load_complex_file(std::string(BREDON_DATA_DIR) + "/sl3z.gcw");
  return x;
}

}  // namespace

TEST_CASE("constant system") {
  auto sys = make_constant_system();
  CHECK(sys->evaluate(cyclic(6)).rank == 1);
  GroupHomomorphism h = identity_homomorphism(cyclic(4));
  auto m = sys->map_covariant(h);
  CHECK(m.rows() == 1);
  CHECK(m.at(0, 0) == 1);
  CHECK(sys->map_contravariant(h).at(0, 0) == 1);
}

TEST_CASE("representation ring system ranks") {
  auto sys = make_rep_ring_system();
  CHECK(sys->evaluate(cyclic(6)).rank == 6);
  CHECK(sys->evaluate(cyclic(4)).rank == 4);
  CHECK(sys->evaluate(cyclic(2)).rank == 2);
  CHECK(sys->evaluate(cyclic(1)).rank == 1);
}

TEST_CASE("rep system maps agree with character theory and are transpose-dual") {
  auto sys = make_rep_ring_system();
  auto c2 = cyclic(2);
  auto c4 = cyclic(4);
  auto h = homomorphism_from_generator_images(c2, c4, {2});
  REQUIRE(h.has_value());
  auto cov = sys->map_covariant(*h);
  CHECK(cov == induction_matrix(*h));
  CHECK(cov == sys->map_contravariant(*h).transposed());
}

TEST_CASE("identity maps are identity matrices for every bundled system") {
  auto groups = {cyclic(2), cyclic(4), cyclic(6)};
  for (const auto& g : groups) {
    auto id = identity_homomorphism(g);
    for (const auto& sys : {make_constant_system(), make_rep_ring_system(),
                            make_burnside_system()}) {
      auto m = sys->map_covariant(id);
      CHECK(m == IntegerMatrix::identity(sys->evaluate(g).rank));
      CHECK(sys->map_contravariant(id) == m);
    }
  }
}

TEST_CASE("table of marks") {
  SUBCASE("trivial group") {
    auto tom = table_of_marks(cyclic(1));
    CHECK(tom->marks.rows() == 1);
    CHECK(tom->marks.at(0, 0) == 1);
  }
  SUBCASE("C2 marks are [[2,0],[1,1]]") {
    auto tom = table_of_marks(cyclic(2));
    REQUIRE(tom->classes.representative.size() == 2);
    CHECK(tom->marks.at(0, 0) == 2);
    CHECK(tom->marks.at(0, 1) == 0);
    CHECK(tom->marks.at(1, 0) == 1);
    CHECK(tom->marks.at(1, 1) == 1);
  }
  SUBCASE("C2 x C2 has five subgroup classes") {
    auto p = direct_product(cyclic(2), cyclic(2), 200);
    auto tom = table_of_marks(p.group);
    CHECK(tom->classes.representative.size() == 5);
    // triangular with positive diagonal
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(tom->marks.at(i, i) > 0);
      for (std::size_t j = i + 1; j < 5; ++j) CHECK(tom->marks.at(i, j) == 0);
    }
  }
}

TEST_CASE("Burnside ring system") {
  auto sys = make_burnside_system();
  SUBCASE("rank is the number of subgroup classes") {
    CHECK(sys->evaluate(cyclic(2)).rank == 2);
    CHECK(sys->evaluate(cyclic(6)).rank == 4);
    CHECK(sys->evaluate(cyclic(4)).rank == 3);
  }
  SUBCASE("induction from the trivial group hits the free orbit") {
    auto triv = cyclic(1);
    auto c2 = cyclic(2);
    auto h = homomorphism_from_generator_images(triv, c2, {});
    REQUIRE(h.has_value());
    auto m = sys->map_covariant(*h);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 1);
    // brute force: C2 x_1 pt is the free C2-set, whose stabilizer class is
    // the trivial one (index 0 in the order-ascending class list)
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(1, 0) == 0);
  }
  SUBCASE("restriction agrees with the orbit-stabilizer oracle on small groups") {
    std::vector<std::pair<GroupPtr, GroupPtr>> cases;
    cases.emplace_back(cyclic(2), cyclic(4));
    cases.emplace_back(cyclic(2), cyclic(6));
    cases.emplace_back(cyclic(4), cyclic(4));
    auto v4 = direct_product(cyclic(2), cyclic(2), 200).group;
    cases.emplace_back(cyclic(2), v4);
    for (const auto& [src, dst] : cases) {
      // any injective hom
      std::optional<GroupHomomorphism> h;
      if (src->order() == dst->order()) {
        h = identity_homomorphism(dst);
        h->source = src;
      } else {
        for (int e = 1; e < static_cast<int>(dst->order()) && !h; ++e)
          if (dst->element_order(e) == static_cast<int>(src->order()))
            h = homomorphism_from_generator_images(src, dst, {e});
      }
      REQUIRE(h.has_value());
      REQUIRE(h->verify());
      auto m = sys->map_contravariant(*h);
      auto tom_src = table_of_marks(src);
      auto tom_dst = table_of_marks(dst);
      for (std::size_t j = 0; j < tom_dst->classes.representative.size(); ++j) {
        auto oracle = bredon_tests::burnside_restriction_column_oracle(
            *h, tom_dst->classes.representative[j], tom_src->classes);
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(m.at(i, j) == oracle[i]);
      }
    }
  }
}

TEST_CASE("coefficient functoriality on composable pairs from the bundled complex") {
  const auto& x = sl3z();
  // composable pairs: 2-cell -> edge -> vertex
  int checked = 0;
  for (const auto& inc1 : x.incidences) {
    const CellOrbit* f1 = x.find_cell(inc1.from);
    if (f1->dim != 2) continue;
    for (const auto& inc2 : x.incidences) {
      if (inc2.from != inc1.to) continue;
      auto composite = compose(inc2.hom, inc1.hom);
      for (const auto& sys : {make_constant_system(), make_rep_ring_system(),
                              make_burnside_system()}) {
        CHECK(sys->map_covariant(composite) ==
              sys->map_covariant(inc2.hom) * sys->map_covariant(inc1.hom));
        CHECK(sys->map_contravariant(composite) ==
              sys->map_contravariant(inc1.hom) * sys->map_contravariant(inc2.hom));
      }
      if (++checked >= 6) return;  // a sample is plenty at this cost
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("k-central bases") {
  auto c4 = cyclic(4);
  SUBCASE("C4 extended by its order-2 center") {
    CentralExtensionData ext{c4, 2, 2};  // element g^2
    auto faithful = k_central_basis(ext, 1);
    REQUIRE(faithful.indices.size() == 2);
    // the two faithful linear characters evaluate to -1 at the center
    int tclass = faithful.table->classes.class_of[2];
    for (auto i : faithful.indices)
      CHECK(faithful.table->irreducibles[i][static_cast<std::size_t>(tclass)] ==
            Cyclotomic(-1));
    auto inflated = k_central_basis(ext, 0);
    CHECK(inflated.indices.size() == 2);
    for (auto i : inflated.indices)
      CHECK(inflated.table->irreducibles[i][static_cast<std::size_t>(tclass)] ==
            Cyclotomic(1));
  }
  SUBCASE("n = 1 gives the whole table") {
    CentralExtensionData ext{c4, 0, 1};
    CHECK(k_central_basis(ext, 0).indices.size() == 4);
    CHECK(k_central_basis(ext, 1).indices.size() == 4);  // k reduces mod n
  }
  SUBCASE("sizes over all k partition the irreducibles") {
    auto c12 = cyclic(12);
    CentralExtensionData ext{c12, 6, 2};
    std::size_t total = 0;
    for (long k = 0; k < 2; ++k) total += k_central_basis(ext, k).indices.size();
    CHECK(total == 12);
  }
  SUBCASE("declared order must match the center element") {
    CentralExtensionData bad{c4, 1, 2};  // g has order 4
    CHECK_THROWS_AS(validate_extension(bad), ExtensionMismatch);
  }
}

TEST_CASE("k-central system evaluation and maps") {
  auto c4 = cyclic(4);
  auto c8 = cyclic(8);
  std::map<std::string, CentralExtensionData> exts;
  exts.emplace("C4", CentralExtensionData{c4, 2, 2});
  exts.emplace("C8", CentralExtensionData{c8, 4, 2});
  auto sys = make_k_central_system(exts, 1);

  CHECK(sys->evaluate(c4).rank == 2);
  CHECK(sys->evaluate(c8).rank == 4);

  SUBCASE("missing extension data is reported") {
    auto c2 = cyclic(2);
    CHECK_THROWS_AS(sys->evaluate(c2), MissingExtensionData);
  }
  SUBCASE("maps require the center to map to the center") {
    // g4 -> g8^2 sends t = g4^2 to g8^4 = t, a valid lift
    auto good = homomorphism_from_generator_images(c4, c8, {2});
    REQUIRE(good.has_value());
    auto m = sys->map_covariant(*good);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 2);
    CHECK(m == sys->map_contravariant(*good).transposed());
  }
  SUBCASE("a homomorphism that misses the declared center is rejected") {
    auto c2 = cyclic(2);
    auto v4 = direct_product(cyclic(2), cyclic(2), 200).group;
    std::map<std::string, CentralExtensionData> skew;
    skew.emplace(c2->name, CentralExtensionData{c2, 1, 2});
    skew.emplace(v4->name, CentralExtensionData{v4, 1, 2});
    auto sys2 = make_k_central_system(skew, 1);
    auto wrong = homomorphism_from_generator_images(c2, v4, {2});  // lands off-center
    REQUIRE(wrong.has_value());
    CHECK_THROWS_AS(sys2->map_covariant(*wrong), ExtensionMismatch);
    auto right = homomorphism_from_generator_images(c2, v4, {1});
    REQUIRE(right.has_value());
    CHECK_NOTHROW(sys2->map_covariant(*right));
  }
}
