#include "posrep/words.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace posrep {

Word::Word(DatumPtr datum, std::vector<int> letters) : datum_(std::move(datum)), letters_(std::move(letters)) {
  if (!datum_) throw std::invalid_argument("word without a Cartan datum");
  for (int l : letters_)
    if (!datum_->has_label(l))
      throw std::invalid_argument("letter " + std::to_string(l) + " is not a node of " + datum_->name());
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<int> parse_letters(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    auto b = token.find_first_not_of(" \t");
    auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty letter in '" + text + "'");
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad letter '" + token + "'");
    out.push_back(v);
  }
  return out;
}

std::string to_string(const BraidMove& move) {
  return std::string(move.kind == MoveKind::Braid ? "braid@" : "commute@") + std::to_string(move.position);
}

Eigen::MatrixXi group_element(const CartanDatum& datum, const std::vector<int>& letters) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(datum.rank(), datum.rank());
  for (int l : letters) m = m * reflection_matrix(datum, l);
  return m;
}

bool is_reduced(const CartanDatum& datum, const std::vector<int>& letters) {
  // w s_i is a length-increasing extension iff w(a_i) is positive.
  Eigen::MatrixXi w = Eigen::MatrixXi::Identity(datum.rank(), datum.rank());
  for (int l : letters) {
    if ((w.col(datum.slot(l)).array() < 0).any()) return false;
    w = w * reflection_matrix(datum, l);
  }
  return true;
}

bool is_reduced(const Word& word) { return is_reduced(word.datum(), word.letters()); }

bool is_longest_word(const Word& word) {
  return word.length() == positive_root_count(word.datum()) && is_reduced(word);
}

bool move_applicable(const Word& word, const BraidMove& move) {
  const int p = move.position;
  if (p < 0 || p + move.span() > word.length()) return false;
  const int a = word[p], b = word[p + 1];
  if (a == b) return false;
  if (move.kind == MoveKind::Commutation) return !word.datum().adjacent(a, b);
  return word.datum().adjacent(a, b) && word[p + 2] == a;
}

namespace {

void apply_in_place(std::vector<int>& letters, const BraidMove& move) {
  auto p = static_cast<std::size_t>(move.position);
  if (move.kind == MoveKind::Commutation) {
    std::swap(letters[p], letters[p + 1]);
  } else {
    int a = letters[p], b = letters[p + 1];
    letters[p] = b;
    letters[p + 1] = a;
    letters[p + 2] = b;
  }
}

}  // namespace

Word apply_move(const Word& word, const BraidMove& move) {
  if (!move_applicable(word, move))
    throw std::invalid_argument("move " + to_string(move) + " does not apply to word " + word.str());
  std::vector<int> letters = word.letters();
  apply_in_place(letters, move);
  return Word(word.datum_ptr(), std::move(letters));
}

std::vector<BraidMove> applicable_moves(const Word& word) {
  std::vector<BraidMove> out;
  for (int p = 0; p + 1 < word.length(); ++p) {
    for (MoveKind k : {MoveKind::Commutation, MoveKind::Braid}) {
      BraidMove m{p, k};
      if (move_applicable(word, m)) out.push_back(m);
    }
  }
  return out;
}

namespace {

// Rewrites letters[start..] by moves so that letters[start] == target. The
// target must be a left descent of the element spelled by letters[start..].
class FrontAligner {
 public:
  FrontAligner(const CartanDatum& datum, std::vector<int>& letters, std::vector<BraidMove>& moves)
      : datum_(datum), letters_(letters), moves_(moves) {}

  void bring_to_front(std::size_t start, int target) {
    if (start >= letters_.size()) throw std::logic_error("front alignment ran past the end of the word");
    const int first = letters_[start];
    if (first == target) return;
    if (!datum_.adjacent(first, target)) {
      bring_to_front(start + 1, target);
      record({static_cast<int>(start), MoveKind::Commutation});
    } else {
      bring_to_front(start + 1, target);
      bring_to_front(start + 2, first);
      record({static_cast<int>(start), MoveKind::Braid});
    }
  }

 private:
  void record(const BraidMove& m) {
    apply_in_place(letters_, m);
    moves_.push_back(m);
  }

  const CartanDatum& datum_;
  std::vector<int>& letters_;
  std::vector<BraidMove>& moves_;
};

}  // namespace

std::vector<BraidMove> braid_path(const Word& from, const Word& to) {
  if (from.length() != to.length())
    throw std::invalid_argument("braid_path: words of unequal length (" + from.str() + " vs " + to.str() + ")");
  if (!is_reduced(from)) throw std::invalid_argument("braid_path: source word not reduced: " + from.str());
  if (!is_reduced(to)) throw std::invalid_argument("braid_path: target word not reduced: " + to.str());
  if (group_element(from.datum(), from.letters()) != group_element(to.datum(), to.letters()))
    throw std::invalid_argument("braid_path: words represent different elements");
  std::vector<int> cur = from.letters();
  std::vector<BraidMove> moves;
  FrontAligner aligner(from.datum(), cur, moves);
  for (std::size_t t = 0; t < cur.size(); ++t)
    if (cur[t] != to[static_cast<int>(t)]) aligner.bring_to_front(t, to[static_cast<int>(t)]);
  return moves;
}

Word replay(const Word& word, const std::vector<BraidMove>& moves) {
  Word w = word;
  for (const auto& m : moves) w = apply_move(w, m);
  return w;
}

std::vector<BraidMove> reversed_path(const std::vector<BraidMove>& moves) {
  return {moves.rbegin(), moves.rend()};
}

RewrittenWord word_starting_with(const Word& base, int label) {
  if (!base.datum().has_label(label)) throw std::invalid_argument("unknown node " + std::to_string(label));
  Eigen::MatrixXi inv = group_element(base.datum(), std::vector<int>(base.letters().rbegin(), base.letters().rend()));
  // x^{-1}(a_label) < 0 characterises left descents.
  if (!(inv.col(base.datum().slot(label)).array() <= 0).all())
    throw std::invalid_argument("letter " + std::to_string(label) + " is not a left descent of " + base.str());
  std::vector<int> cur = base.letters();
  std::vector<BraidMove> moves;
  FrontAligner(base.datum(), cur, moves).bring_to_front(0, label);
  return {Word(base.datum_ptr(), std::move(cur)), std::move(moves)};
}

RewrittenWord word_ending_in(const Word& base, int label) {
  Word reversed(base.datum_ptr(), std::vector<int>(base.letters().rbegin(), base.letters().rend()));
  auto front = word_starting_with(reversed, label);
  std::vector<int> letters(front.word.letters().rbegin(), front.word.letters().rend());
  std::vector<BraidMove> moves;
  moves.reserve(front.moves.size());
  for (const auto& m : front.moves) moves.push_back({base.length() - m.position - m.span(), m.kind});
  return {Word(base.datum_ptr(), std::move(letters)), std::move(moves)};
}

RewrittenWord word_ending_in(const DatumPtr& datum, int label) { return word_ending_in(good_word(datum), label); }
RewrittenWord word_starting_with(const DatumPtr& datum, int label) {
  return word_starting_with(good_word(datum), label);
}

std::vector<int> standard_chain_word(const std::vector<int>& chain) {
  std::vector<int> out;
  const int n = static_cast<int>(chain.size());
  for (int start = 0; start < n; ++start)
    for (int k = n - 1; k >= start; --k) out.push_back(chain[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<int> d_series_word(int n, bool symmetric) {
  if (n < 4) throw std::invalid_argument("D_n requires n >= 4");
  std::vector<int> out = symmetric ? std::vector<int>{0, 1, 2, 0, 1, 2} : std::vector<int>{2, 1, 2, 0, 1, 2};
  for (int k = 3; k <= n - 1; ++k) {
    for (int j = k; j >= 2; --j) out.push_back(j);
    out.push_back(0);
    out.push_back(1);
    for (int j = 2; j <= k; ++j) out.push_back(j);
  }
  return out;
}

namespace {

const std::string kBuiltinCatalog = R"(# Good words for the exceptional types; letters are node labels.
E 6: 4,3,4,0,3,4,2,3,0,4,3,2,1,2,3,4,0,3,2,1,5,4,3,2,1,0,3,2,4,3,0,5,4,3,2,1
E 7: 4,3,4,0,3,4,2,3,0,4,3,2,1,2,3,4,0,3,2,1,5,4,3,2,1,0,3,2,4,3,0,5,4,3,2,1,6,5,4,3,2,0,3,4,5,6,1,2,3,4,5,0,3,4,2,3,0,1,2,3,4,5,6
E 8: 4,3,4,0,3,4,2,3,0,4,3,2,1,2,3,4,0,3,2,1,5,4,3,2,1,0,3,2,4,3,0,5,4,3,2,1,6,5,4,3,2,0,3,4,5,6,1,2,3,4,5,0,3,4,2,3,0,1,2,3,4,5,6,7,6,5,4,3,2,1,0,3,2,4,3,5,4,6,5,0,3,4,2,3,0,1,2,3,4,5,6,7,6,5,4,3,2,0,3,4,5,6,1,2,3,4,5,0,3,4,2,3,0,1,2,3,4,5,6,7
)";

std::mutex g_catalog_mutex;
std::map<std::string, std::vector<int>>& catalog_storage() {
  static std::map<std::string, std::vector<int>> catalog = parse_catalog(kBuiltinCatalog);
  return catalog;
}

}  // namespace

const std::string& builtin_catalog_text() { return kBuiltinCatalog; }

std::map<std::string, std::vector<int>> parse_catalog(const std::string& text) {
  std::map<std::string, std::vector<int>> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string family;
    int rank = 0;
    if (!(head >> family >> rank))
      throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": expected 'TYPE RANK'");
    Family f = parse_family(family);
    out[std::string(1, family_char(f)) + std::to_string(rank)] = parse_letters(line.substr(colon + 1));
  }
  return out;
}

std::map<std::string, std::vector<int>> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

void set_catalog(std::map<std::string, std::vector<int>> catalog) {
  std::lock_guard lock(g_catalog_mutex);
  catalog_storage() = std::move(catalog);
}

Word good_word(const DatumPtr& datum) {
  {
    std::lock_guard lock(g_catalog_mutex);
    const auto& cat = catalog_storage();
    if (auto it = cat.find(datum->name()); it != cat.end()) {
      Word w(datum, it->second);
      if (!is_longest_word(w)) throw std::runtime_error("catalog word for " + datum->name() + " is not a reduced word of w_0");
      return w;
    }
  }
  switch (datum->family()) {
    case Family::A:
      return Word(datum, standard_chain_word(datum->labels()));
    case Family::D:
      return Word(datum, d_series_word(datum->rank()));
    case Family::E:
      break;
  }
  throw std::runtime_error("no catalog word for " + datum->name());
}

std::vector<int> reduced_word_of(const CartanDatum& datum, Eigen::MatrixXi element) {
  auto inv_q = exact_inverse(to_rational(element));
  if (!inv_q) throw std::invalid_argument("reduced_word_of: not a group element");
  Eigen::MatrixXi inverse(element.rows(), element.cols());
  for (Eigen::Index i = 0; i < inverse.rows(); ++i)
    for (Eigen::Index j = 0; j < inverse.cols(); ++j) {
      const Rational& q = (*inv_q)(i, j);
      if (!q.is_integer()) throw std::invalid_argument("reduced_word_of: not a group element");
      inverse(i, j) = static_cast<int>(q.num());
    }
  std::vector<int> sorted = datum.labels();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  const Eigen::MatrixXi identity = Eigen::MatrixXi::Identity(datum.rank(), datum.rank());
  // s_i x is shorter than x iff x^{-1}(a_i) is negative.
  while (element != identity) {
    bool found = false;
    for (int l : sorted) {
      if ((inverse.col(datum.slot(l)).array() < 0).any()) {
        Eigen::MatrixXi s = reflection_matrix(datum, l);
        element = s * element;
        inverse = inverse * s;
        out.push_back(l);
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("reduced_word_of: no descent for a non-identity element");
  }
  return out;
}

namespace {

std::vector<int> bad_word_tail(const DatumPtr& datum) {
  if (datum->family() == Family::A) throw std::invalid_argument("bad_word: defined for types D and E only");
  std::vector<int> chain;
  for (int l = 1; l < datum->rank(); ++l) chain.push_back(l);
  std::vector<int> tail = standard_chain_word(chain);
  tail.push_back(0);
  return tail;
}

}  // namespace

BadWord bad_word_with_prefix(const DatumPtr& datum, const std::vector<int>& prefix) {
  std::vector<int> letters = prefix;
  for (int l : bad_word_tail(datum)) letters.push_back(l);
  Word word(datum, std::move(letters));
  if (!is_longest_word(word)) throw std::invalid_argument("bad_word: prefix does not complete w_0");
  BadWord out{word, datum->family() == Family::D ? 2 : 3, {}};
  std::string pre;
  for (std::size_t i = 0; i < prefix.size(); ++i) pre += (i ? "," : "") + std::to_string(prefix[i]);
  out.description = "w' w_A s_0 with w' = [" + pre + "], w_A = standard word of chain 1.." +
                    std::to_string(datum->rank() - 1);
  return out;
}

BadWord bad_word(const DatumPtr& datum) {
  std::vector<int> tail = bad_word_tail(datum);
  Eigen::MatrixXi w0 = group_element(*datum, good_word(datum).letters());
  std::vector<int> tail_inverse(tail.rbegin(), tail.rend());
  BadWord out = bad_word_with_prefix(datum, reduced_word_of(*datum, w0 * group_element(*datum, tail_inverse)));
  out.description.insert(out.description.find(']') + 1, " (lexicographically smallest)");
  return out;
}

int bad_word_prefix_length(const DatumPtr& datum) {
  return positive_root_count(*datum) - static_cast<int>(bad_word_tail(datum).size());
}

std::vector<int> commutation_normal_form(const CartanDatum& datum, std::vector<int> letters) {
  auto blocks = [&](int a, int b) { return a == b || datum.adjacent(a, b); };
  std::vector<int> out;
  out.reserve(letters.size());
  while (!letters.empty()) {
    std::size_t best = letters.size();
    for (std::size_t p = 0; p < letters.size(); ++p) {
      if (best < letters.size() && letters[p] >= letters[best]) continue;
      bool free = true;
      for (std::size_t q = 0; q < p && free; ++q) free = !blocks(letters[q], letters[p]);
      if (free) best = p;
    }
    out.push_back(letters[best]);
    letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

namespace {

// Classes one braid move away: a braid move applies to the heap wherever two
// equal letters p < r have exactly one heap element between them, adjacent
// to both.
std::vector<std::vector<int>> braid_neighbour_classes(const CartanDatum& datum, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  auto blocks = [&](int a, int b) { return a == b || datum.adjacent(a, b); };
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[x][y]: x precedes y in the heap
  for (int x = n - 1; x >= 0; --x) {
    below[x][x] = 1;
    for (int y = x + 1; y < n; ++y)
      if (blocks(w[x], w[y]))
        for (int z = y; z < n; ++z)
          if (below[y][z]) below[x][z] = 1;
  }
  std::vector<std::vector<int>> out;
  for (int p = 0; p < n; ++p) {
    int r = p + 1;
    while (r < n && w[r] != w[p]) ++r;
    if (r == n) continue;
    std::vector<int> mid;
    for (int z = p + 1; z < r; ++z)
      if (below[p][z] && below[z][r]) mid.push_back(z);
    if (mid.size() != 1 || !datum.adjacent(w[mid[0]], w[p])) continue;
    const int q = mid[0];
    std::vector<int> before, after;
    for (int z = 0; z < n; ++z) {
      if (z == p || z == q || z == r) continue;
      (z < r && !below[p][z] ? before : after).push_back(w[z]);
    }
    before.insert(before.end(), {w[q], w[p], w[q]});
    before.insert(before.end(), after.begin(), after.end());
    out.push_back(commutation_normal_form(datum, std::move(before)));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> commutation_classes(const CartanDatum& datum, const std::vector<int>& seed,
                                                  std::size_t limit) {
  std::vector<std::vector<int>> out{commutation_normal_form(datum, seed)};
  std::set<std::vector<int>> seen{out.front()};
  for (std::size_t h = 0; h < out.size() && out.size() < limit; ++h)
    for (auto& c : braid_neighbour_classes(datum, out[h]))
      if (out.size() < limit && seen.insert(c).second) out.push_back(std::move(c));
  return out;
}

std::vector<LusztigLabel> lusztig_labels(const Word& word) {
  std::map<int, int> seen;
  std::vector<LusztigLabel> out(static_cast<std::size_t>(word.length()));
  for (int p = word.length() - 1; p >= 0; --p) {
    int r = word[p];
    out[static_cast<std::size_t>(p)] = {r, ++seen[r]};
  }
  return out;
}

std::string label_key(const LusztigLabel& label) {
  return std::to_string(label.root) + "." + std::to_string(label.occurrence);
}

int position_of(const Word& word, int root, int occurrence) {
  if (occurrence < 1) return -1;
  int seen = 0;
  for (int p = word.length() - 1; p >= 0; --p)
    if (word[p] == root && ++seen == occurrence) return p;
  return -1;
}

std::vector<Word> enumerate_reduced_words(const Word& seed, std::size_t limit) {
  std::set<std::vector<int>> seen{seed.letters()};
  std::deque<Word> queue{seed};
  std::vector<Word> out;
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (const auto& m : applicable_moves(w)) {
      Word next = apply_move(w, m);
      if (seen.insert(next.letters()).second) {
        if (seen.size() > limit) throw std::length_error("enumerate_reduced_words: more than limit words");
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

}  // namespace posrep
