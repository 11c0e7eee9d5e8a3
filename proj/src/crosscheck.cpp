#include "posrep/crosscheck.hpp"

#include <stdexcept>

namespace posrep {

namespace {

// Accumulates one bracket, dropping variables that do not exist.
struct BracketBuilder {
  const Word& word;
  BracketTerm term;

  explicit BracketBuilder(const Word& w) : word(w) {
    term.form = LinearForm(w.length(), w.datum().rank());
    term.shift = Eigen::VectorXi::Zero(w.length());
  }
  void u(int root, int occurrence, int c) {
    if (!word.datum().has_label(root)) return;
    const int pos = position_of(word, root, occurrence);
    if (pos >= 0) term.form.u[pos] += c;
  }
  void p(int root, int occurrence, int c) {
    if (!word.datum().has_label(root)) return;
    const int pos = position_of(word, root, occurrence);
    if (pos >= 0) term.shift[pos] += c;
  }
  void lambda(int root, int c) { term.form.lambda[word.datum().slot(root)] += Rational(c); }
};

int sign(int k) { return k % 2 == 0 ? 1 : -1; }
int s1(int k) { return 2 * ((k + 1) / 2) - 1; }
int s2(int k) { return 2 * (k / 2); }

Rational power(const Rational& x, int e) {
  Rational out(1);
  const Rational base = e < 0 ? Rational(1) / x : x;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

std::vector<Rational> evaluate(const Eigen::MatrixXi& exps, const std::vector<Rational>& values) {
  if (static_cast<Eigen::Index>(values.size()) != exps.cols())
    throw std::invalid_argument("coordinate vector has the wrong length");
  std::vector<Rational> out;
  for (Eigen::Index r = 0; r < exps.rows(); ++r) {
    Rational v(1);
    for (Eigen::Index c = 0; c < exps.cols(); ++c)
      if (exps(r, c) != 0) v *= power(values[static_cast<std::size_t>(c)], exps(r, c));
    out.push_back(v);
  }
  return out;
}

}  // namespace

ClosedForm closed_form_An(const DatumPtr& datum, int i) {
  if (datum->family() != Family::A) throw std::invalid_argument("closed_form_An: type A only");
  const int n = datum->rank();
  std::vector<int> chain;
  for (int l = 1; l <= n; ++l) chain.push_back(l);
  Word word(datum, standard_chain_word(chain));
  const int N = word.length(), r = datum->rank();

  std::vector<BracketTerm> e;
  for (int k = 1; k <= n - i + 1; ++k) {
    BracketBuilder b(word);
    b.u(i + k - 1, k, 1);
    b.u(i + k, k, -1);
    for (int l = 1; l <= k; ++l) {
      b.p(i + l - 1, l - 1, 1);
      b.p(i + l - 1, l, -1);
    }
    e.push_back(b.term);
  }
  std::vector<BracketTerm> f;
  for (int k = 1; k <= i; ++k) {
    BracketBuilder b(word);
    b.u(i, k, 1);
    for (int l = k; l <= i; ++l) {
      b.u(i, l, -2);
      b.u(i - 1, l, 1);
      b.u(i + 1, l + 1, 1);
    }
    b.lambda(i, -2);
    b.p(i, k, 1);
    f.push_back(b.term);
  }
  Eigen::VectorXi alpha = Eigen::VectorXi::Zero(N);
  for (int k = 1; k <= i + 1; ++k) {
    for (auto [root, c] : {std::pair{i, -2}, std::pair{i - 1, 1}, std::pair{i + 1, 1}}) {
      if (!datum->has_label(root)) continue;
      const int pos = position_of(word, root, k);
      if (pos >= 0) alpha[pos] += c;
    }
  }
  VectorQ ell = VectorQ::Constant(r, Rational(0));
  ell[datum->slot(i)] = Rational(-2);
  Operator K = Operator::single(N, r, {Exponent(alpha, Eigen::VectorXi::Zero(N), ell), Laurent(1)});
  return {word, expand_brackets(N, r, e), expand_brackets(N, r, f), K};
}

Operator closed_form_Dn(const DatumPtr& datum, int i) {
  if (datum->family() != Family::D) throw std::invalid_argument("closed_form_Dn: type D only");
  const int n = datum->rank();
  Word word(datum, d_series_word(n, true));
  std::vector<BracketTerm> terms;
  if (i == 0 || i == 1) {
    auto shift = [&](BracketBuilder& b, int k, int l2_end) {
      for (int l = 1; l <= s1(k); ++l) b.p(i, l, sign(l));
      for (int l = 1; l <= s2(k); ++l) b.p(1 - i, l, -sign(l));
      for (int l = 1; l <= l2_end; ++l) b.p(2, l, -sign(l));
    };
    for (int k = 1; k <= n - 1; ++k) {
      BracketBuilder b(word);
      b.u((k + i - 1) % 2, k, 1);
      b.u(2, 2 * k - 1, -1);
      shift(b, k, 2 * k - 2);
      terms.push_back(b.term);
    }
    for (int k = 1; k <= n - 2; ++k) {
      BracketBuilder b(word);
      b.u(2, 2 * k, 1);
      b.u((k + i) % 2, k, -1);
      shift(b, k, 2 * k);
      terms.push_back(b.term);
    }
  } else {
    for (int k = 1; k <= 2 * n - 2 * i - 1; ++k) {
      BracketBuilder b(word);
      b.u(i + 1, k, sign(k));
      b.u(i, k, -sign(k));
      for (int l = 1; l <= s1(k); ++l) b.p(i, l, sign(l));
      for (int l = 1; l <= s2(k); ++l) b.p(i + 1, l, -sign(l));
      terms.push_back(b.term);
    }
  }
  return expand_brackets(word.length(), n, terms);
}

int ClusterCoordinateMap::x_index(int root, int occurrence) const {
  for (std::size_t c = 0; c < lusztig.size(); ++c)
    if (lusztig[c].root == root && lusztig[c].occurrence == occurrence) return static_cast<int>(c);
  throw std::out_of_range("x_" + std::to_string(root) + "^" + std::to_string(occurrence) + " does not exist for A_" +
                          std::to_string(n));
}

int ClusterCoordinateMap::X_index(int i, int j) const {
  for (std::size_t c = 0; c < minors.size(); ++c)
    if (minors[c] == std::pair{i, j}) return static_cast<int>(c);
  throw std::out_of_range("X_{" + std::to_string(i) + "," + std::to_string(j) + "} is not a cluster coordinate of A_" +
                          std::to_string(n));
}

ClusterCoordinateMap cluster_maps(int n) {
  if (n < 1) throw std::out_of_range("cluster_maps: rank must be positive");
  ClusterCoordinateMap map;
  map.n = n;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) map.lusztig.push_back({i, k});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) map.minors.emplace_back(i, j);
  const auto m = static_cast<Eigen::Index>(map.lusztig.size());
  map.X_of_x = Eigen::MatrixXi::Zero(m, m);
  map.x_of_X = Eigen::MatrixXi::Zero(m, m);
  for (const auto& [i, ij] : map.minors) {
    const int row = map.X_index(i, ij);
    for (int a = 1; a <= ij - i; ++a)
      for (int b = 1; b <= i; ++b) map.X_of_x(row, map.x_index(a + b - 1, b)) += 1;
  }
  auto add_minor = [&](int row, int i, int j, int c) {
    if (i == j || i == 0 || j == 0) return;
    map.x_of_X(row, map.X_index(i, j)) += c;
  };
  for (const auto& x : map.lusztig) {
    const int row = map.x_index(x.root, x.occurrence);
    const int i = x.root, j = x.occurrence;
    add_minor(row, j, i + 1, 1);
    add_minor(row, j - 1, i - 1, 1);
    add_minor(row, j, i, -1);
    add_minor(row, j - 1, i, -1);
  }
  return map;
}

std::vector<Rational> minors_from_lusztig(const ClusterCoordinateMap& map, const std::vector<Rational>& x) {
  return evaluate(map.X_of_x, x);
}

std::vector<Rational> lusztig_from_minors(const ClusterCoordinateMap& map, const std::vector<Rational>& X) {
  return evaluate(map.x_of_X, X);
}

std::array<Rational, 3> classical_flip(const Rational& a, const Rational& b, const Rational& c) {
  const Rational zero(0);
  if (!(zero < a) || !(zero < b) || !(zero < c)) throw std::domain_error("classical_flip: coordinates must be positive");
  const Rational s = a + c;
  return {b * c / s, s, a * b / s};
}

std::vector<Rational> classical_transport(const Word& word, std::vector<Rational> coords,
                                          const std::vector<BraidMove>& path) {
  if (static_cast<int>(coords.size()) != word.length())
    throw std::invalid_argument("classical_transport: one coordinate per letter expected");
  Word w = word;
  for (const auto& m : path) {
    const auto p = static_cast<std::size_t>(m.position);
    if (m.kind == MoveKind::Commutation) {
      std::swap(coords[p], coords[p + 1]);
    } else {
      auto [a, b, c] = classical_flip(coords[p], coords[p + 1], coords[p + 2]);
      coords[p] = a;
      coords[p + 1] = b;
      coords[p + 2] = c;
    }
    w = apply_move(w, m);
  }
  return coords;
}

MatrixQ unipotent_product(const Word& word, const std::vector<Rational>& coords) {
  if (word.datum().family() != Family::A) throw std::invalid_argument("unipotent_product: type A only");
  const int size = word.datum().rank() + 1;
  MatrixQ out = MatrixQ::Identity(size, size);
  for (int k = 0; k < word.length(); ++k) {
    // right multiplication by 1 + a E_{i,i+1} adds a * column i to column i+1
    const int i = word[k] - 1;
    out.col(i + 1) += coords[static_cast<std::size_t>(k)] * out.col(i);
  }
  return out;
}

Rational initial_minor(const MatrixQ& m, int i, int j) {
  if (i == 0 || j == 0 || i == j) return Rational(1);
  if (i > j || j > m.cols()) throw std::out_of_range("initial_minor: no minor with lower right (" + std::to_string(i) +
                                                     "," + std::to_string(j) + ")");
  return exact_determinant(m.block(0, j - i, i, i));
}

}  // namespace posrep
