#include <doctest.h>

#include <random>

#include "bredon/matrix.hpp"
#include "support/oracles.hpp"

using bredon::Integer;
using bredon::IntegerMatrix;

namespace {

IntegerMatrix from_rows(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

void check_snf_contract(const IntegerMatrix& a) {
  auto snf = bredon::smith_normal_form(a);
  CHECK(snf.U * a * snf.V == snf.D);
  Integer du = snf.U.determinant();
  Integer dv = snf.V.determinant();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (std::size_t i = 0; i + 1 < snf.divisors.size(); ++i) {
    CHECK(snf.divisors[i] > 0);
    CHECK(snf.divisors[i + 1] % snf.divisors[i] == 0);
  }
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j) CHECK(snf.D.at(i, j) == 0);
  CHECK(snf.rank() == bredon_tests::rank_oracle(a));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SUBCASE("identity") {
    auto snf = bredon::smith_normal_form(IntegerMatrix::identity(4));
    CHECK(snf.rank() == 4);
    for (const auto& d : snf.divisors) CHECK(d == 1);
  }
  SUBCASE("2x2 with divisor chain (2,4)") {
    auto a = from_rows({{2, 4}, {6, 8}});
    auto snf = bredon::smith_normal_form(a);
    REQUIRE(snf.rank() == 2);
    CHECK(snf.divisors[0] == 2);
    CHECK(snf.divisors[1] == 4);
    check_snf_contract(a);
  }
  SUBCASE("zero matrix") {
    auto snf = bredon::smith_normal_form(IntegerMatrix(3, 5));
    CHECK(snf.rank() == 0);
    CHECK(snf.D.is_zero());
  }
  SUBCASE("rectangular") {
    auto a = from_rows({{1, 2, 3}, {4, 5, 6}});
    check_snf_contract(a);
    CHECK(bredon::smith_normal_form(a).rank() == 2);
  }
  SUBCASE("single entry needing sign flip") {
    auto a = from_rows({{-7}});
    auto snf = bredon::smith_normal_form(a);
    REQUIRE(snf.rank() == 1);
    CHECK(snf.divisors[0] == 7);
    check_snf_contract(a);
  }
}

TEST_CASE("smith normal form is deterministic") {
  auto a = from_rows({{3, 1, -4}, {2, 0, 6}, {-1, 5, 2}});
  auto s1 = bredon::smith_normal_form(a);
  auto s2 = bredon::smith_normal_form(a);
  CHECK(s1.D == s2.D);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
}

TEST_CASE("smith normal form randomized contract") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-10, 10);
  std::uniform_int_distribution<std::size_t> dim(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    check_snf_contract(a);
    CHECK(bredon::smith_normal_form(a).divisors == bredon_tests::divisors_oracle(a));
  }
}

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(from_rows({{2, 0}, {0, 3}}).determinant() == 6);
  CHECK(from_rows({{0, 1}, {1, 0}}).determinant() == -1);
  CHECK(from_rows({{1, 2}, {2, 4}}).determinant() == 0);
  CHECK(from_rows({{2, 4}, {6, 8}}).determinant() == -8);
}

TEST_CASE("rational rank matches the oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntegerMatrix a(5, 7);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = entry(rng);
    CHECK(bredon::rational_rank(a) == bredon_tests::rank_oracle(a));
  }
}

TEST_CASE("matrix block accumulation") {
  IntegerMatrix m(3, 3);
  IntegerMatrix b(2, 2);
  b.at(0, 0) = 1;
  b.at(1, 1) = 1;
  m.add_block(1, 1, b, 5);
  CHECK(m.at(1, 1) == 5);
  CHECK(m.at(2, 2) == 5);
  CHECK(m.at(0, 0) == 0);
}
