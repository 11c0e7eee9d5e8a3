#include "posrep/io.hpp"

#include <stdexcept>

namespace posrep {

namespace {

struct TermWriter {
  std::string out;

  template <typename C>
  void add(const C& coeff, const std::string& var) {
    if (coeff == C(0)) return;
    const bool neg = coeff < C(0);
    const C mag = neg ? C(-coeff) : coeff;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string c = to_text(mag);
    if (var.empty())
      out += c;
    else
      out += (c == "1" ? "" : c) + var;
  }

  static std::string to_text(int x) { return std::to_string(x); }
  static std::string to_text(const Rational& x) { return x.str(); }

  std::string str() const { return out.empty() ? "0" : out; }
};

std::string slot_name(const Word& word, int slot) { return "L" + std::to_string(word.datum().label(slot)); }

int position_from_key(const Word& word, const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos) throw std::invalid_argument("bad position key '" + key + "'");
  const int pos = position_of(word, std::stoi(key.substr(0, dot)), std::stoi(key.substr(dot + 1)));
  if (pos < 0) throw std::invalid_argument("position key '" + key + "' does not exist in word " + word.str());
  return pos;
}

json int_map(const Eigen::VectorXi& v, const std::vector<LusztigLabel>& labels) {
  json j = json::object();
  for (Eigen::Index k = 0; k < v.size(); ++k)
    if (v[k] != 0) j[label_key(labels[static_cast<std::size_t>(k)])] = v[k];
  return j;
}

json rational_map(const VectorQ& ell, const Word& word) {
  json j = json::object();
  for (Eigen::Index s = 0; s < ell.size(); ++s)
    if (!ell[s].is_zero()) j[std::to_string(word.datum().label(static_cast<int>(s)))] = ell[s].str();
  return j;
}

Eigen::VectorXi read_int_map(const json& j, const Word& word) {
  Eigen::VectorXi v = Eigen::VectorXi::Zero(word.length());
  for (const auto& [key, value] : j.items()) v[position_from_key(word, key)] = value.get<int>();
  return v;
}

VectorQ read_rational_map(const json& j, const Word& word) {
  VectorQ v = VectorQ::Constant(word.datum().rank(), Rational(0));
  for (const auto& [key, value] : j.items())
    v[word.datum().slot(std::stoi(key))] =
        value.is_string() ? Rational::parse(value.get<std::string>()) : Rational(value.get<long long>());
  return v;
}

}  // namespace

std::string render_linear_form(const LinearForm& form, const Word& word) {
  const auto labels = lusztig_labels(word);
  TermWriter w;
  for (Eigen::Index k = 0; k < form.u.size(); ++k) w.add(form.u[k], "u" + label_key(labels[k]));
  for (Eigen::Index s = 0; s < form.lambda.size(); ++s) w.add(form.lambda[s], slot_name(word, static_cast<int>(s)));
  w.add(form.constant, "");
  return w.str();
}

std::string render_shift(const Eigen::VectorXi& shift, const Word& word) {
  const auto labels = lusztig_labels(word);
  TermWriter w;
  for (Eigen::Index k = 0; k < shift.size(); ++k) w.add(shift[k], "p" + label_key(labels[k]));
  return w.str();
}

std::string render_bracket(const BracketTerm& term, const Word& word) {
  std::string prefix = term.scalar == Laurent(1) ? "" : "(" + term.scalar.str() + ") ";
  return prefix + "[" + render_linear_form(term.form, word) + "] e(" + render_shift(term.shift, word) + ")";
}

std::string render_monomial(const Monomial& m, const Word& word) {
  const auto labels = lusztig_labels(word);
  TermWriter w;
  for (int k = 0; k < word.length(); ++k) w.add(m.exponent.alpha(k), "u" + label_key(labels[k]));
  for (int k = 0; k < word.length(); ++k) w.add(2 * m.exponent.gamma(k), "p" + label_key(labels[k]));
  for (Eigen::Index s = 0; s < m.exponent.ell().size(); ++s)
    w.add(m.exponent.ell()[s], slot_name(word, static_cast<int>(s)));
  std::string prefix = m.coeff == Laurent(1) ? "" : "(" + m.coeff.str() + ") ";
  return prefix + "exp(" + w.str() + ")";
}

std::string render_operator(const Operator& op, const Word& word) {
  if (op.is_zero()) return "0";
  std::string out;
  try {
    for (const auto& t : rebracket(op)) out += (out.empty() ? "" : " + ") + render_bracket(t, word);
  } catch (const NotBracketForm&) {
    out.clear();
    for (const auto& m : op.terms()) out += (out.empty() ? "" : " + ") + render_monomial(m, word);
  }
  return out;
}

json laurent_to_json(const Laurent& l) {
  json j = json::array();
  for (const auto& [e, c] : l.terms()) j.push_back({e, c});
  return j;
}

Laurent laurent_from_json(const json& j) {
  std::vector<Laurent::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), t.at(1).get<std::int64_t>());
  return Laurent::from_terms(std::move(terms));
}

json monomial_to_json(const Monomial& m, const Word& word) {
  const auto labels = lusztig_labels(word);
  json j;
  j["alpha"] = int_map(m.exponent.alpha(), labels);
  j["gamma"] = int_map(m.exponent.gamma(), labels);
  j["ell"] = rational_map(m.exponent.ell(), word);
  j["coeff"] = laurent_to_json(m.coeff);
  return j;
}

Monomial monomial_from_json(const json& j, const Word& word) {
  VectorQ ell = read_rational_map(j.value("ell", json::object()), word);
  return {Exponent(read_int_map(j.at("alpha"), word), read_int_map(j.at("gamma"), word), ell),
          laurent_from_json(j.at("coeff"))};
}

json bracket_to_json(const BracketTerm& t, const Word& word) {
  const auto labels = lusztig_labels(word);
  json j;
  j["scalar"] = laurent_to_json(t.scalar);
  j["L"] = {{"u", int_map(t.form.u, labels)}, {"lambda", rational_map(t.form.lambda, word)}, {"const", t.form.constant}};
  j["P"] = int_map(t.shift, labels);
  return j;
}

BracketTerm bracket_from_json(const json& j, const Word& word) {
  BracketTerm t;
  t.scalar = laurent_from_json(j.at("scalar"));
  t.form.u = read_int_map(j.at("L").at("u"), word);
  t.form.lambda = read_rational_map(j.at("L").value("lambda", json::object()), word);
  t.form.constant = j.at("L").value("const", 0);
  t.shift = read_int_map(j.at("P"), word);
  return t;
}

json operator_to_json(const Operator& op, const Word& word) {
  json j;
  j["type"] = word.datum().name();
  j["word"] = word.letters();
  json ms = json::array();
  for (const auto& m : op.terms()) ms.push_back(monomial_to_json(m, word));
  j["monomials"] = std::move(ms);
  try {
    json bs = json::array();
    for (const auto& t : rebracket(op)) bs.push_back(bracket_to_json(t, word));
    j["brackets"] = std::move(bs);
  } catch (const NotBracketForm&) {
  }
  return j;
}

Operator operator_from_json(const json& j, const Word& word) {
  std::vector<Monomial> terms;
  for (const auto& m : j.at("monomials")) terms.push_back(monomial_from_json(m, word));
  return Operator::from_terms(word.length(), word.datum().rank(), std::move(terms));
}

json representation_to_json(const Representation& rep) {
  json j;
  j["type"] = rep.datum->name();
  j["word"] = rep.word.letters();
  j["lambda_mode"] = rep.mode == LambdaMode::Formal ? "formal" : "normalized";
  json gens = json::object();
  for (const auto& [label, g] : rep.generators) {
    const std::string i = std::to_string(label);
    gens["E" + i] = operator_to_json(g.E, rep.word);
    gens["F" + i] = operator_to_json(g.F, rep.word);
    gens["K" + i] = operator_to_json(g.K, rep.word);
  }
  j["generators"] = std::move(gens);
  return j;
}

}  // namespace posrep
