#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "posrep/rootdata.hpp"

namespace posrep {

using DatumPtr = std::shared_ptr<const CartanDatum>;

inline DatumPtr make_datum(Family family, int rank) {
  return std::make_shared<const CartanDatum>(CartanDatum::build(family, rank));
}

/// A word in the simple reflections, letters given by node label, read left
/// to right.
class Word {
 public:
  /// Throws std::invalid_argument if a letter is not a node of the datum.
  Word(DatumPtr datum, std::vector<int> letters);

  const CartanDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int operator[](int pos) const { return letters_[static_cast<std::size_t>(pos)]; }

  /// Comma separated letters, e.g. "3,2,1,3,2,3".
  std::string str() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  DatumPtr datum_;
  std::vector<int> letters_;
};

/// Parses "3,2,1" (whitespace tolerant).
std::vector<int> parse_letters(const std::string& text);

enum class MoveKind { Commutation, Braid };

/// A local rewrite starting at `position`: s_i s_j = s_j s_i for non-adjacent
/// letters, s_i s_j s_i = s_j s_i s_j for adjacent ones.
struct BraidMove {
  int position = 0;
  MoveKind kind = MoveKind::Commutation;

  int span() const { return kind == MoveKind::Braid ? 3 : 2; }
  friend bool operator==(const BraidMove& a, const BraidMove& b) {
    return a.position == b.position && a.kind == b.kind;
  }
};

std::string to_string(const BraidMove& move);

/// Root coordinates matrix of the product s_{i_1} ... s_{i_m}.
Eigen::MatrixXi group_element(const CartanDatum& datum, const std::vector<int>& letters);

bool is_reduced(const CartanDatum& datum, const std::vector<int>& letters);
bool is_reduced(const Word& word);
/// Reduced and of length l(w_0).
bool is_longest_word(const Word& word);

bool move_applicable(const Word& word, const BraidMove& move);
/// Throws std::invalid_argument naming the position if the move does not apply.
Word apply_move(const Word& word, const BraidMove& move);
std::vector<BraidMove> applicable_moves(const Word& word);

/// Moves transforming `from` into `to`, found by aligning prefixes with the
/// exchange condition. Throws if the words are not reduced or represent
/// different elements.
std::vector<BraidMove> braid_path(const Word& from, const Word& to);

/// Replays `moves` on `word`.
Word replay(const Word& word, const std::vector<BraidMove>& moves);

/// The moves of a path in reverse order; each move is its own inverse.
std::vector<BraidMove> reversed_path(const std::vector<BraidMove>& moves);

struct RewrittenWord {
  Word word;
  std::vector<BraidMove> moves;  // base -> word
};

/// A word for the same element as `base` whose last letter is `label`,
/// obtained from `base` by moves. Requires `label` to be a right descent.
RewrittenWord word_ending_in(const Word& base, int label);
/// Mirror of word_ending_in.
RewrittenWord word_starting_with(const Word& base, int label);
/// word_ending_in applied to the good word.
RewrittenWord word_ending_in(const DatumPtr& datum, int label);
RewrittenWord word_starting_with(const DatumPtr& datum, int label);

/// Longest element of the A-type chain `chain` (listed in chain order) as
/// the standard word s_n s_{n-1}..s_1 s_n..s_2 ... s_n.
std::vector<int> standard_chain_word(const std::vector<int>& chain);

/// D_n word 2 12 012 320123 ... before (symmetric = false) or after the
/// replacement of the prefix 212012 by 012012.
std::vector<int> d_series_word(int n, bool symmetric = true);

/// The catalogued good word of each type.
Word good_word(const DatumPtr& datum);

struct BadWord {
  Word word;
  int generator = 0;         // the generator whose action blows up
  std::string description;
};

/// Word of the form w' w_A s_0 where w_A is the longest element of the chain
/// 1..n-1 and w' a reduced word completing w_0; w' is the lexicographically
/// smallest reduced word of its element.
BadWord bad_word(const DatumPtr& datum);

/// bad_word with w' replaced by the given reduced word of the same element.
BadWord bad_word_with_prefix(const DatumPtr& datum, const std::vector<int>& prefix);

/// Length of w' in bad_word(datum).
int bad_word_prefix_length(const DatumPtr& datum);

/// Representative of the commutation class of `letters`: repeatedly takes
/// the smallest letter that commutes past everything to its left.
std::vector<int> commutation_normal_form(const CartanDatum& datum, std::vector<int> letters);

/// Normal forms of the commutation classes reachable from `seed` by braid
/// moves, seed class first. Stops after `limit` classes.
std::vector<std::vector<int>> commutation_classes(const CartanDatum& datum, const std::vector<int>& seed,
                                                  std::size_t limit = 100000);

/// Reduced word for a group element (root coordinates matrix); picks the
/// smallest available left descent at each step.
std::vector<int> reduced_word_of(const CartanDatum& datum, Eigen::MatrixXi element);

/// Letter i, occurrence k counted from the right (k = 1 rightmost).
struct LusztigLabel {
  int root = 0;
  int occurrence = 0;
  friend bool operator==(const LusztigLabel& a, const LusztigLabel& b) {
    return a.root == b.root && a.occurrence == b.occurrence;
  }
};

std::vector<LusztigLabel> lusztig_labels(const Word& word);
/// "i.k"
std::string label_key(const LusztigLabel& label);
/// Position of x_i^k in the word, or -1 if it does not exist.
int position_of(const Word& word, int root, int occurrence);

/// All words reachable from `seed` by moves (small ranks only). Throws
/// std::length_error past `limit` words.
std::vector<Word> enumerate_reduced_words(const Word& seed, std::size_t limit = 100000);

/// Catalog lines `TYPE RANK: i1,i2,...`; '#' starts a comment.
std::map<std::string, std::vector<int>> parse_catalog(const std::string& text);
std::map<std::string, std::vector<int>> load_catalog(const std::string& path);
/// The compiled-in catalog (E6, E7, E8 words).
const std::string& builtin_catalog_text();
/// Overrides the catalog used by good_word for E types.
void set_catalog(std::map<std::string, std::vector<int>> catalog);

}  // namespace posrep
