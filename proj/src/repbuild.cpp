#include "posrep/repbuild.hpp"

#include "posrep/io.hpp"

namespace posrep {

namespace {

Eigen::VectorXi unit(int n, int k, int value = 1) {
  Eigen::VectorXi v = Eigen::VectorXi::Zero(n);
  v[k] = value;
  return v;
}

}  // namespace

Operator build_E_rightmost(const Word& word, int label) {
  const int n = word.length();
  if (n == 0 || word[n - 1] != label)
    throw std::invalid_argument("build_E_rightmost: word " + word.str() + " does not end in " + std::to_string(label));
  BracketTerm t;
  t.form = LinearForm(n, word.datum().rank());
  t.form.u = unit(n, n - 1);
  t.shift = unit(n, n - 1, -1);
  return expand_bracket(t);
}

Operator build_F(const Word& word, int label) {
  const CartanDatum& d = word.datum();
  const int n = word.length();
  const int slots = d.rank();
  std::vector<int> occ;  // occ[0] rightmost
  for (int k = n - 1; k >= 0; --k)
    if (word[k] == label) occ.push_back(k);
  const int count = static_cast<int>(occ.size());

  // segment[l]: 2u_{occ_l} minus adjacent u's strictly between occ_{l+1} and occ_l
  std::vector<Eigen::VectorXi> segment(count, Eigen::VectorXi::Zero(n));
  for (int l = 0; l < count; ++l) {
    segment[l][occ[l]] += 2;
    const int left = l + 1 < count ? occ[l + 1] : -1;
    for (int k = left + 1; k < occ[l]; ++k)
      if (d.adjacent(word[k], label)) segment[l][k] -= 1;
  }

  std::vector<BracketTerm> terms;
  Eigen::VectorXi tail = Eigen::VectorXi::Zero(n);
  for (int k = count - 1; k >= 0; --k) {
    tail += segment[k];
    BracketTerm t;
    t.form = LinearForm(n, slots);
    t.form.u = unit(n, occ[k]) - tail;
    t.form.lambda[d.slot(label)] = Rational(-2);
    t.shift = unit(n, occ[k]);
    terms.push_back(std::move(t));
  }
  return expand_brackets(n, slots, terms);
}

Operator build_K(const Word& word, int label) {
  const CartanDatum& d = word.datum();
  const int n = word.length();
  Eigen::VectorXi alpha(n);
  for (int k = 0; k < n; ++k) alpha[k] = -d.entry(label, word[k]);
  VectorQ ell = VectorQ::Constant(d.rank(), Rational(0));
  ell[d.slot(label)] = Rational(-2);
  return Operator::single(n, d.rank(), {Exponent(alpha, Eigen::VectorXi::Zero(n), ell), Laurent(1)});
}

Operator build_E(const Word& word, int label, TransportStats* stats, std::vector<TraceStep>* trace) {
  RewrittenWord ending = word_ending_in(word, label);
  Operator e = build_E_rightmost(ending.word, label);
  return transport(e, ending.word, reversed_path(ending.moves), stats, trace);
}

Representation build_rep(const Word& word, TransportStats* stats) {
  if (!is_longest_word(word)) throw std::invalid_argument("build_rep: " + word.str() + " is not a reduced word of w0");
  Representation rep{word.datum_ptr(), word, LambdaMode::Formal, {}};
  for (int label : word.datum().labels())
    rep.generators[label] = {build_E(word, label, stats), build_F(word, label), build_K(word, label)};
  return rep;
}

Representation transport(const Representation& rep, const std::vector<BraidMove>& path, TransportStats* stats) {
  Representation out{rep.datum, replay(rep.word, path), rep.mode, {}};
  for (const auto& [label, g] : rep.generators)
    out.generators[label] = {transport(g.E, rep.word, path, stats), transport(g.F, rep.word, path, stats),
                             transport(g.K, rep.word, path, stats)};
  return out;
}

std::string classical_render(const Operator& op, const Word& word) {
  const auto labels = lusztig_labels(word);
  std::string out;
  for (const auto& t : rebracket(op)) {
    if (!out.empty()) out += " + ";
    const auto s = t.scalar.at_one();
    if (s != 1) out += std::to_string(s) + " ";
    LinearForm neg = -t.form;
    out += "(1/2 + i(" + render_linear_form(neg, word) + ")) f(";
    std::string args;
    for (int k = 0; k < word.length(); ++k) {
      if (t.shift[k] == 0) continue;
      if (!args.empty()) args += ", ";
      const int b = -t.shift[k];
      args += "u" + label_key(labels[k]) + (b > 0 ? " + " : " - ") + (std::abs(b) == 1 ? "" : std::to_string(std::abs(b))) + "i";
    }
    out += (args.empty() ? "u" : args) + ")";
  }
  return out;
}

}  // namespace posrep
