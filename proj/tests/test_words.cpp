#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <deque>
#include <map>
#include <random>
#include <set>

#include "posrep/words.hpp"

using namespace posrep;

namespace {

std::vector<int> occurrence_counts(const Word& w) {
  std::vector<int> c(w.datum().rank(), 0);
  for (int l : w.letters()) ++c[w.datum().slot(l)];
  return c;
}

}  // namespace

TEST_CASE("is_reduced") {
  auto a2 = make_datum(Family::A, 2);
  CHECK(is_reduced(*a2, {1, 2, 1}));
  CHECK_FALSE(is_reduced(*a2, {1, 1}));
  CHECK_FALSE(is_reduced(*a2, {1, 2, 1, 2}));
  auto e6 = make_datum(Family::E, 6);
  auto w = good_word(e6);
  CHECK(is_longest_word(w));
  CHECK(w.length() == 36);
}

TEST_CASE("good words") {
  CHECK(good_word(make_datum(Family::A, 3)).letters() == std::vector<int>{3, 2, 1, 3, 2, 3});
  CHECK(good_word(make_datum(Family::D, 4)).letters() == std::vector<int>{0, 1, 2, 0, 1, 2, 3, 2, 0, 1, 2, 3});
  CHECK(good_word(make_datum(Family::E, 6)).str() ==
        "4,3,4,0,3,4,2,3,0,4,3,2,1,2,3,4,0,3,2,1,5,4,3,2,1,0,3,2,4,3,0,5,4,3,2,1");
}

TEST_CASE("good-word letter counts match the tables") {
  CHECK(occurrence_counts(good_word(make_datum(Family::E, 6))) == std::vector<int>{5, 4, 7, 10, 8, 2});
  CHECK(occurrence_counts(good_word(make_datum(Family::E, 7))) == std::vector<int>{8, 6, 11, 16, 13, 6, 3});
  CHECK(occurrence_counts(good_word(make_datum(Family::E, 8))) == std::vector<int>{14, 10, 19, 28, 23, 14, 9, 3});
  for (int n = 4; n <= 8; ++n) {
    auto w = good_word(make_datum(Family::D, n));
    CHECK(is_longest_word(w));
  }
  for (int n = 1; n <= 6; ++n) {
    auto w = good_word(make_datum(Family::A, n));
    CHECK(is_longest_word(w));
    auto c = occurrence_counts(w);
    for (int i = 1; i <= n; ++i) CHECK(c[i - 1] == i);
  }
}

TEST_CASE("moves") {
  auto a2 = make_datum(Family::A, 2);
  Word w(a2, {1, 2, 1});
  BraidMove b{0, MoveKind::Braid};
  CHECK(apply_move(w, b).letters() == std::vector<int>{2, 1, 2});
  CHECK(apply_move(apply_move(w, b), b) == w);
  auto a3 = make_datum(Family::A, 3);
  Word x(a3, {1, 3, 2, 1, 3, 2});
  CHECK(apply_move(x, {0, MoveKind::Commutation}).letters() == std::vector<int>{3, 1, 2, 1, 3, 2});
  CHECK_THROWS_AS(apply_move(x, {1, MoveKind::Commutation}), std::invalid_argument);
  CHECK_THROWS_AS(apply_move(x, {0, MoveKind::Braid}), std::invalid_argument);
}

TEST_CASE("word_ending_in and word_starting_with") {
  auto a1 = make_datum(Family::A, 1);
  CHECK(word_ending_in(a1, 1).word.letters() == std::vector<int>{1});
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 2}, {Family::A, 4}, {Family::D, 4}, {Family::D, 5}, {Family::E, 6}}) {
    auto d = make_datum(f, n);
    for (int i : d->labels()) {
      auto r = word_ending_in(d, i);
      CHECK(r.word.letters().back() == i);
      CHECK(is_longest_word(r.word));
      CHECK(replay(good_word(d), r.moves) == r.word);
      auto s = word_starting_with(d, i);
      CHECK(s.word.letters().front() == i);
      CHECK(replay(good_word(d), s.moves) == s.word);
    }
  }
}

TEST_CASE("A3 reduced words are pairwise connected by braid_path") {
  auto a3 = make_datum(Family::A, 3);
  auto all = enumerate_reduced_words(good_word(a3));
  CHECK(all.size() == 16);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto path = braid_path(a, b);
      CHECK(replay(a, path) == b);
      CHECK(path.size() <= 6u * 6u * 6u);
      if (a == b) CHECK(path.empty());
    }
}

TEST_CASE("braid_path at high rank") {
  auto e7 = make_datum(Family::E, 7);
  auto w = good_word(e7);
  std::mt19937 rng(11);
  Word x = w;
  for (int step = 0; step < 400; ++step) {
    auto moves = applicable_moves(x);
    x = apply_move(x, moves[rng() % moves.size()]);
  }
  auto path = braid_path(w, x);
  CHECK(replay(w, path) == x);
  CHECK(path.size() <= 63u * 63u * 63u);
  Word y = w;
  for (const auto& m : path) {
    y = apply_move(y, m);
    REQUIRE(is_reduced(y));
  }
}

TEST_CASE("braid_path rejects mismatched words") {
  auto a2 = make_datum(Family::A, 2);
  auto a3 = make_datum(Family::A, 3);
  CHECK_THROWS(braid_path(Word(a2, {1, 2, 1}), Word(a2, {1, 2})));
  CHECK_THROWS(braid_path(Word(a2, {1, 1, 2}), Word(a2, {1, 2, 1})));
  CHECK_THROWS(braid_path(Word(a3, {1, 2, 3}), Word(a3, {3, 2, 1})));
}

TEST_CASE("Lusztig labels") {
  auto a3 = make_datum(Family::A, 3);
  auto labels = lusztig_labels(Word(a3, {3, 2, 1, 3, 2, 3}));
  std::vector<std::string> keys;
  for (auto& l : labels) keys.push_back(label_key(l));
  CHECK(keys == std::vector<std::string>{"3.3", "2.2", "1.1", "3.2", "2.1", "3.1"});
  auto a2 = make_datum(Family::A, 2);
  auto l2 = lusztig_labels(Word(a2, {1, 2, 1}));
  CHECK(label_key(l2[0]) == "1.2");
  CHECK(label_key(l2[1]) == "2.1");
  CHECK(label_key(l2[2]) == "1.1");
  CHECK(position_of(Word(a3, {3, 2, 1, 3, 2, 3}), 3, 2) == 3);
  CHECK(position_of(Word(a3, {3, 2, 1, 3, 2, 3}), 1, 2) == -1);
}

TEST_CASE("catalog parsing") {
  auto cat = parse_catalog("# comment\nE 6: 4,3,4\nD 4 : 0,1\n");
  CHECK(cat.at("E6") == std::vector<int>{4, 3, 4});
  CHECK(cat.at("D4") == std::vector<int>{0, 1});
  CHECK_THROWS(parse_catalog("E6 4,3"));
}

TEST_CASE("bad word shape") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::D, 4}, {Family::D, 5}, {Family::E, 6}, {Family::E, 7}}) {
    auto d = make_datum(f, n);
    auto bw = bad_word(d);
    CHECK(is_longest_word(bw.word));
    CHECK(bw.word.letters().back() == 0);
    CHECK(bw.generator == (f == Family::D ? 2 : 3));
  }
}

TEST_CASE("commutation classes agree with commutation-move closure") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::A, 3}, {Family::A, 4}, {Family::D, 4}}) {
    auto d = make_datum(f, n);
    auto words = enumerate_reduced_words(good_word(d));
    // oracle: connected components under commutation moves only
    std::map<std::vector<int>, int> component;
    int components = 0;
    for (const auto& w : words) {
      if (component.count(w.letters())) continue;
      std::deque<Word> queue{w};
      component[w.letters()] = components;
      while (!queue.empty()) {
        Word x = queue.front();
        queue.pop_front();
        for (const auto& m : applicable_moves(x)) {
          if (m.kind != MoveKind::Commutation) continue;
          Word y = apply_move(x, m);
          if (component.emplace(y.letters(), components).second) queue.push_back(y);
        }
      }
      ++components;
    }
    std::map<std::vector<int>, std::set<int>> by_form;
    for (const auto& w : words) by_form[commutation_normal_form(*d, w.letters())].insert(component[w.letters()]);
    CHECK(static_cast<int>(by_form.size()) == components);
    for (const auto& [form, ids] : by_form) CHECK(ids.size() == 1);
    CHECK(static_cast<int>(commutation_classes(*d, good_word(d).letters()).size()) == components);
  }
  auto a3 = make_datum(Family::A, 3);
  CHECK(commutation_classes(*a3, {1, 2, 1, 3, 2, 1}).size() == 8);
}

TEST_CASE("bad word prefixes by commutation class") {
  auto e6 = make_datum(Family::E, 6);
  auto bw = bad_word(e6);
  const int len = bad_word_prefix_length(e6);
  std::vector<int> prefix(bw.word.letters().begin(), bw.word.letters().begin() + len);
  auto classes = commutation_classes(*e6, prefix);
  CHECK(classes.size() == 6);
  for (const auto& c : classes) CHECK(is_longest_word(bad_word_with_prefix(e6, c).word));
  CHECK_THROWS(bad_word_with_prefix(e6, {1, 2}));
}
