#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "posrep/qtorus.hpp"

using namespace posrep;

namespace {

Eigen::VectorXi vec(std::initializer_list<int> xs) {
  Eigen::VectorXi v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v[i++] = x;
  return v;
}

Operator mono(Eigen::VectorXi a, Eigen::VectorXi g, Laurent c = Laurent(1), VectorQ ell = VectorQ(), int slots = 0) {
  const int n = static_cast<int>(a.size());
  return Operator::single(n, slots, {Exponent(a, g, ell), c});
}

Monomial random_monomial(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Eigen::VectorXi a(n), g(n);
  for (int k = 0; k < n; ++k) {
    a[k] = d(rng);
    g[k] = d(rng);
  }
  return {Exponent(a, g), Laurent::monomial(d(rng), 1 + (rng() % 3))};
}

}  // namespace

TEST_CASE("commutation exponent") {
  Exponent u(vec({1}), vec({0}));
  Exponent p(vec({0}), vec({1}));
  CHECK(commutation_exponent(u, p) == 1);
  CHECK(commutation_exponent(u.scaled(2), p) == 2);  // e^{2 pi b u} e^{2 pi b p} = fq e^{2 pi b p} e^{2 pi b u}
  CHECK(commutation_exponent(u, u) == 0);
}

TEST_CASE("mul cocycle") {
  Monomial u{Exponent(vec({1}), vec({0})), Laurent(1)};
  Monomial p{Exponent(vec({0}), vec({1})), Laurent(1)};
  Monomial up = mul(u, p);
  CHECK(up.exponent == Exponent(vec({1}), vec({1})));
  CHECK(up.coeff == Laurent::monomial(1));
  Monomial pu = mul(p, u);
  CHECK(up.coeff == pu.coeff * Laurent::q_power(commutation_exponent(u, p)));
  Monomial one{Exponent(1), Laurent(1)};
  CHECK(mul(one, u).exponent == u.exponent);
}

TEST_CASE("mul is associative and s is antisymmetric and bilinear") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_monomial(rng, 4), b = random_monomial(rng, 4), c = random_monomial(rng, 4);
    auto l = mul(mul(a, b), c), r = mul(a, mul(b, c));
    CHECK(l.exponent == r.exponent);
    CHECK(l.coeff == r.coeff);
    CHECK(commutation_exponent(a, b) == -commutation_exponent(b, a));
    CHECK(commutation_exponent(a.exponent + b.exponent, c.exponent) ==
          commutation_exponent(a, c) + commutation_exponent(b, c));
  }
}

TEST_CASE("expand_bracket") {
  BracketTerm t;
  t.form = LinearForm(1, 0);
  t.form.u = vec({1});
  t.shift = vec({-1});
  auto op = expand_bracket(t);
  REQUIRE(op.size() == 2);
  // e^{pi b(u-2p)} + e^{pi b(-u-2p)}, both with coefficient 1
  CHECK(op == mono(vec({1}), vec({-1})) + mono(vec({-1}), vec({-1})));

  BracketTerm lam;
  lam.form = LinearForm(1, 1);
  lam.form.lambda[0] = Rational(2);
  lam.shift = vec({0});
  VectorQ two(1), mtwo(1);
  two << Rational(2);
  mtwo << Rational(-2);
  auto lop = expand_bracket(lam);
  CHECK(lop == mono(vec({0}), vec({0}), Laurent::monomial(1), two, 1) +
                   mono(vec({0}), vec({0}), Laurent::monomial(-1), mtwo, 1));

  BracketTerm vw;  // [v - w] e(-p_v) on positions (u,v,w)
  vw.form = LinearForm(3, 0);
  vw.form.u = vec({0, 1, -1});
  vw.shift = vec({0, -1, 0});
  auto vop = expand_bracket(vw);
  for (const auto& m : vop.terms()) CHECK(m.coeff == Laurent(1));

  BracketTerm zero;
  zero.form = LinearForm(1, 0);
  zero.shift = vec({1});
  CHECK_THROWS_AS(expand_bracket(zero), std::invalid_argument);
  t.form.constant = 1;
  CHECK_THROWS_AS(expand_bracket(t), std::invalid_argument);
}

TEST_CASE("rebracket round trip") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BracketTerm> ts;
    for (int j = 0; j < 3; ++j) {
      BracketTerm t;
      t.form = LinearForm(3, 2);
      t.shift = Eigen::VectorXi(3);
      for (int k = 0; k < 3; ++k) {
        t.form.u[k] = d(rng);
        t.shift[k] = j * 7 + d(rng);  // distinct shifts keep terms apart
      }
      t.form.lambda[0] = Rational(d(rng));
      if (t.form.is_zero()) t.form.u[0] = 1;
      t.scalar = Laurent::monomial(d(rng), 1 + j);
      ts.push_back(t);
    }
    auto op = expand_brackets(3, 2, ts);
    auto back = rebracket(op);
    CHECK(back.size() == 3);
    CHECK(expand_brackets(3, 2, back) == op);
  }
  auto single = mono(vec({1}), vec({0}));
  CHECK_THROWS_AS(rebracket(single), NotBracketForm);
  CHECK(term_count(Operator(1, 0)) == 0);
}

TEST_CASE("canonical form is order independent") {
  std::mt19937 rng(3);
  std::vector<Monomial> ms;
  for (int i = 0; i < 30; ++i) ms.push_back(random_monomial(rng, 2));
  auto a = Operator::from_terms(2, 0, ms);
  std::shuffle(ms.begin(), ms.end(), rng);
  Operator b(2, 0);
  for (auto& m : ms) b = b + Operator::single(2, 0, m);
  CHECK(a == b);
  CHECK(Operator::from_terms(2, 0, a.terms()) == a);
  CHECK((a - a).is_zero());
  CHECK(commutator(a, a).is_zero());
}

TEST_CASE("A1 fixed point: [e,f] = (q - q^-1)(K^-1 - K) and Ke = q^2 eK") {
  // e = [u]e(-p), f = [-u - 2 lambda]e(p), K = e^{-pi b(2u + 2 lambda)}
  BracketTerm e;
  e.form = LinearForm(1, 1);
  e.form.u = vec({1});
  e.shift = vec({-1});
  BracketTerm f;
  f.form = LinearForm(1, 1);
  f.form.u = vec({-1});
  f.form.lambda[0] = Rational(-2);
  f.shift = vec({1});
  auto E = expand_bracket(e), F = expand_bracket(f);
  VectorQ ell(1);
  ell << Rational(-2);
  auto K = mono(vec({-2}), vec({0}), Laurent(1), ell, 1);
  auto Kinv = monomial_power(K, -1);
  auto lhs = commutator(E, F);
  auto rhs = (Laurent::q_power(1) - Laurent::q_power(-1)) * (Kinv - K);
  CHECK(lhs == rhs);
  CHECK(K * E == Laurent::q_power(2) * (E * K));
  CHECK(K * F == Laurent::q_power(-2) * (F * K));
  CHECK(K * Kinv == Operator::identity(1, 1));
}
