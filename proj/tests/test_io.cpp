#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "posrep/io.hpp"

using namespace posrep;

TEST_CASE("operator JSON round trip") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::D, 4}}) {
    auto rep = build_rep(good_word(make_datum(f, n)));
    for (const auto& [label, g] : rep.generators)
      for (const Operator* op : {&g.E, &g.F, &g.K}) {
        json j = operator_to_json(*op, rep.word);
        CHECK(operator_from_json(j, rep.word) == *op);
        // canonical text survives a parse and dump unchanged
        const std::string text = j.dump();
        CHECK(json::parse(text).dump() == text);
        CHECK(operator_to_json(operator_from_json(json::parse(text), rep.word), rep.word).dump() == text);
      }
  }
}

TEST_CASE("bracket and Laurent JSON round trip") {
  auto rep = build_rep(good_word(make_datum(Family::A, 2)));
  for (const auto& t : rebracket(rep.F(2))) {
    auto back = bracket_from_json(bracket_to_json(t, rep.word), rep.word);
    CHECK(back.scalar == t.scalar);
    CHECK(back.form.u == t.form.u);
    CHECK(back.form.lambda == t.form.lambda);
    CHECK(back.shift == t.shift);
  }
  Laurent l = Laurent::q_power(3) - Laurent::q_power(-1) * 2;
  CHECK(laurent_from_json(laurent_to_json(l)) == l);
  CHECK(laurent_to_json(Laurent(1)).dump() == "[[0,1]]");
}

TEST_CASE("operator JSON layout") {
  auto a1 = build_rep(good_word(make_datum(Family::A, 1)));
  json e = operator_to_json(a1.E(1), a1.word);
  CHECK(e["type"] == "A1");
  CHECK(e["word"] == json({1}));
  CHECK(e["monomials"].size() == 2);
  REQUIRE(e.contains("brackets"));
  CHECK(e["brackets"][0]["P"]["1.1"] == -1);
  CHECK(e["brackets"][0]["L"]["u"]["1.1"] == 1);
  json k = operator_to_json(a1.K(1), a1.word);
  CHECK_FALSE(k.contains("brackets"));
  CHECK(k["monomials"][0]["alpha"]["1.1"] == -2);
  CHECK(k["monomials"][0]["ell"]["1"] == "-2");

  json whole = representation_to_json(a1);
  CHECK(whole["lambda_mode"] == "formal");
  CHECK(whole["generators"].contains("E1"));
  CHECK(whole["generators"].contains("K1"));
}
