#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "posrep/transport.hpp"

using namespace posrep;

namespace {

Eigen::VectorXi vec(std::initializer_list<int> xs) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

BracketTerm bracket(Eigen::VectorXi L, Eigen::VectorXi P, Laurent scalar = Laurent(1)) {
  BracketTerm t;
  t.form = LinearForm(static_cast<int>(L.size()), 0);
  t.form.u = L;
  t.shift = P;
  t.scalar = scalar;
  return t;
}

Operator brackets(std::vector<BracketTerm> ts) { return expand_brackets(3, 0, ts); }

const Laurent two_q = Laurent::q_power(1) + Laurent::q_power(-1);

}  // namespace

TEST_CASE("conjugation factors") {
  auto r2 = conjugation_factor(2, Conjugation::Inner);
  CHECK(r2.denominator.empty());
  REQUIRE(r2.numerator.size() == 2);
  CHECK(r2.numerator[0] == Laurent(1));
  CHECK(r2.numerator[1] == Laurent::q_power(1));  // m(1 + qX) = (1 + q^-1 X) m
  auto r0 = conjugation_factor(0, Conjugation::Outer);
  CHECK(r0.numerator == std::vector<Laurent>{Laurent(1)});
  auto rm2 = conjugation_factor(-2, Conjugation::Outer);
  CHECK(rm2.numerator[1] == Laurent::q_power(-1));  // u + q^-1 uv
  auto r4 = conjugation_factor(4, Conjugation::Inner);
  REQUIRE(r4.numerator.size() == 3);
  CHECK(r4.numerator[1] == Laurent::q_power(2) * two_q);
  CHECK(conjugation_factor(4, Conjugation::Outer).denominator == std::vector<int>{2, 6});
  CHECK_THROWS_AS(conjugation_factor(3, Conjugation::Inner), std::invalid_argument);
}

TEST_CASE("frame preserves the symplectic pairing") {
  auto f = make_frame(5, 1);
  CHECK(commutation_exponent(f.Y, f.Z) == 0);
  CHECK(commutation_exponent(f.Z, f.Y) == 0);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::VectorXi a(5), g(5), a2(5), g2(5);
    for (int k = 0; k < 5; ++k) {
      a[k] = d(rng);
      g[k] = d(rng);
      a2[k] = d(rng);
      g2[k] = d(rng);
    }
    Exponent x(a, g), y(a2, g2);
    CHECK(commutation_exponent(relabel(x, f), relabel(y, f)) == commutation_exponent(x, y));
  }
}

TEST_CASE("simple transformation rule") {
  auto f = make_frame(3, 0);
  auto in = brackets({bracket(vec({0, 0, 1}), vec({0, 0, -1}))});
  auto expected = brackets({bracket(vec({1, 0, 0}), vec({-1, -1, 1})), bracket(vec({0, 1, -1}), vec({0, -1, 0}))});
  auto out = braid_conjugate(in, f);
  CHECK(out == expected);
  CHECK(braid_conjugate(out, f) == in);
}

TEST_CASE("three-term expansion with a [2]_q coefficient") {
  auto f = make_frame(3, 0);
  TransportStats stats;
  auto in = brackets({bracket(vec({-1, 0, 1}), vec({0, 1, -1}))});
  auto out = braid_conjugate(in, f, &stats);
  auto expected = brackets({bracket(vec({0, 1, -2}), vec({1, -1, 0})), bracket(vec({1, 0, -1}), vec({0, -1, 1}), two_q),
                            bracket(vec({2, -1, 0}), vec({-1, -1, 2}))});
  CHECK(out == expected);
  auto terms = rebracket(out);
  CHECK(terms.size() == 3);
  int with_two = 0;
  for (auto& t : terms) with_two += t.scalar == two_q;
  CHECK(with_two == 1);
  CHECK(stats.max_abs_s == 4);
  CHECK(braid_conjugate(out, f) == in);
}

TEST_CASE("shifts in the v-direction are invariant under the frame") {
  // Every conjugation term moves gamma along (-1,0,1); after T the p_v
  // component is the same for all outputs, so e(p_u - p_w) is unreachable
  // from [w - u]e(p_v - p_w).
  auto f = make_frame(3, 0);
  auto out = braid_conjugate(brackets({bracket(vec({-1, 0, 1}), vec({0, 1, -1}))}), f);
  for (const auto& m : out.terms()) CHECK(m.exponent.gamma(1) == -1);
}

TEST_CASE("denominators that do not cancel are reported") {
  LocalizedOperator loc(1, 0, Exponent(vec({1}), vec({0})));
  loc.add({Exponent(vec({0}), vec({1})), Laurent(1)}, conjugation_factor(2, Conjugation::Outer));
  CHECK_THROWS_AS(loc.expand(), NonPolynomialResidue);
}

TEST_CASE("commutation moves") {
  auto a3 = make_datum(Family::A, 3);
  Word w(a3, {1, 3, 2, 1, 3, 2});
  auto op = expand_brackets(6, 0, {bracket(vec({1, 2, 0, 0, 0, -1}), vec({-1, 0, 0, 1, 0, 0}))});
  auto once = commutation_move(op, w, 0);
  CHECK(once != op);
  CHECK(swap_positions(once, 0) == op);
  auto untouched = expand_brackets(6, 0, {bracket(vec({0, 0, 1, 0, 0, -1}), vec({0, 0, 0, 1, 0, 0}))});
  CHECK(commutation_move(untouched, w, 0) == untouched);
  CHECK_THROWS_AS(commutation_move(op, w, 1), std::invalid_argument);
}

TEST_CASE("empty path is the identity") {
  auto a2 = make_datum(Family::A, 2);
  auto op = brackets({bracket(vec({0, 0, 1}), vec({0, 0, -1}))});
  CHECK(transport(op, Word(a2, {2, 1, 2}), {}) == op);
  std::vector<TraceStep> trace;
  auto moved = transport(op, Word(a2, {2, 1, 2}), {{0, MoveKind::Braid}}, nullptr, &trace);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].word == "1,2,1");
  CHECK(trace[0].terms == 4);
  CHECK(moved.size() == 4);
}
