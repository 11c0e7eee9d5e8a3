#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posrep/rootdata.hpp"

using namespace posrep;

TEST_CASE("A2 Cartan matrix") {
  auto d = CartanDatum::build(Family::A, 2);
  Eigen::Matrix2i expected;
  expected << 2, -1, -1, 2;
  CHECK(d.cartan() == expected);
}

TEST_CASE("special nodes of D and E diagrams") {
  auto e6 = CartanDatum::build(Family::E, 6);
  CHECK(e6.neighbours(0) == std::vector<int>{3});
  auto d4 = CartanDatum::build(Family::D, 4);
  auto n = d4.neighbours(2);
  std::sort(n.begin(), n.end());
  CHECK(n == std::vector<int>{0, 1, 3});
  auto d6 = CartanDatum::build(Family::D, 6);
  CHECK(d6.neighbours(0) == std::vector<int>{2});
}

TEST_CASE("unsupported types are rejected") {
  CHECK_THROWS_AS(CartanDatum::build(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum::build(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum::build(Family::A, 0), std::invalid_argument);
}

TEST_CASE("datum invariants hold for every supported type") {
  std::vector<std::pair<Family, int>> types;
  for (int n = 1; n <= 8; ++n) types.emplace_back(Family::A, n);
  for (int n = 4; n <= 8; ++n) types.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(Family::E, n);
  for (auto [f, n] : types) {
    auto d = CartanDatum::build(f, n);
    CAPTURE(d.name());
    const auto& A = d.cartan();
    CHECK(A == A.transpose());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(A(i, j) == 2);
        else
          CHECK((A(i, j) == 0 || A(i, j) == -1));
        if (A(i, j) == -1) CHECK(std::abs(d.bipartition()[i] - d.bipartition()[j]) == 1);
      }
    CHECK(d.parity(d.labels().front()) == 0);
    CHECK(exact_rank(to_rational(A)) == n);
  }
}

TEST_CASE("positive root counts match closed forms") {
  for (int n = 1; n <= 7; ++n) CHECK(positive_root_count(CartanDatum::build(Family::A, n)) == n * (n + 1) / 2);
  for (int n = 4; n <= 7; ++n) CHECK(positive_root_count(CartanDatum::build(Family::D, n)) == n * (n - 1));
  CHECK(positive_root_count(CartanDatum::build(Family::E, 6)) == 36);
  CHECK(positive_root_count(CartanDatum::build(Family::E, 7)) == 63);
  CHECK(positive_root_count(CartanDatum::build(Family::E, 8)) == 120);
}

TEST_CASE("Langlands b-vectors") {
  auto b1 = langlands_b_vectors(CartanDatum::build(Family::A, 1));
  CHECK(b1(0, 0) == Rational(1, 2));
  auto d2 = CartanDatum::build(Family::A, 2);
  auto b2 = langlands_b_vectors(d2);
  CHECK(b2(0, 0) == Rational(2, 3));
  CHECK(b2(1, 0) == Rational(1, 3));
  for (auto f : {Family::A, Family::D, Family::E}) {
    int n = f == Family::E ? 7 : 5;
    auto d = CartanDatum::build(f, n);
    MatrixQ prod = to_rational(d.cartan()) * langlands_b_vectors(d);
    CHECK(prod == MatrixQ::Identity(n, n));
  }
}

TEST_CASE("flipped bipartition") {
  auto d = CartanDatum::build(Family::D, 5);
  auto f = d.with_flipped_bipartition();
  for (int s = 0; s < 5; ++s) CHECK(d.bipartition()[s] + f.bipartition()[s] == 1);
}
