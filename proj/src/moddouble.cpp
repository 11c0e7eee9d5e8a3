#include "posrep/moddouble.hpp"

#include <set>
#include <stdexcept>

#include "posrep/linalg.hpp"

namespace posrep {

namespace {

Operator scalar_times(const Laurent& c, const Operator& op) { return c * op; }

json pair_witness(const TaggedMonomial& a, const TaggedMonomial& b, const Word& word, const json& s) {
  return {{"a", a.generator},
          {"a_monomial", render_monomial(a.monomial, word)},
          {"b", b.generator},
          {"b_monomial", render_monomial(b.monomial, word)},
          {"s", s}};
}

Certificate parity_scan(const std::string& check, const std::map<int, Generators>& gens, const Word& word) {
  Certificate cert;
  cert.check = check;
  const auto all = generator_monomials(gens);
  std::map<int, std::size_t> values;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      const int s = commutation_exponent(all[a].monomial, all[b].monomial);
      ++values[s];
      if (s % 2 != 0 && cert.pass) {
        cert.pass = false;
        cert.witnesses.push_back(pair_witness(all[a], all[b], word, s));
      }
    }
  json sv = json::object();
  for (auto [s, n] : values) sv[std::to_string(s)] = n;
  cert.data["monomials"] = all.size();
  cert.data["s_values"] = std::move(sv);
  return cert;
}

Certificate gram_certificate(const std::string& check, const std::map<int, Generators>& gens, const Word& word) {
  Certificate cert = parity_scan(check, gens, word);
  const auto all = generator_monomials(gens);
  const int n = word.length();
  MatrixQ lattice(static_cast<Eigen::Index>(all.size()), 2 * n);
  for (std::size_t r = 0; r < all.size(); ++r)
    for (int c = 0; c < 2 * n; ++c)
      lattice(static_cast<Eigen::Index>(r), c) = Rational(all[r].monomial.exponent.lattice()[c]);
  const auto rank = all.empty() ? 0 : exact_rank(lattice);
  cert.data["rank"] = rank;
  cert.data["N"] = n;
  if (rank > 2 * n) {
    cert.pass = false;
    cert.witnesses.push_back({{"rank", rank}, {"bound", 2 * n}});
  }
  cert.data.erase("s_values");
  cert.data["gram_even"] = cert.pass;
  return cert;
}

// lambda part of each bracket of `op`, keyed by (u, shift).
using BracketKey = std::pair<std::vector<int>, std::vector<int>>;

std::map<BracketKey, BracketTerm> brackets_by_key(const Operator& op) {
  std::map<BracketKey, BracketTerm> out;
  for (auto& t : rebracket(op)) {
    BracketKey key{{t.form.u.begin(), t.form.u.end()}, {t.shift.begin(), t.shift.end()}};
    out.emplace(std::move(key), std::move(t));
  }
  return out;
}

Operator substitute_lambda(const Operator& op, const MatrixQ& s) {
  std::vector<Monomial> terms;
  terms.reserve(op.size());
  for (const auto& m : op.terms()) {
    Monomial out = m;
    if (!m.exponent.lambda_free()) out.exponent.set_ell(s.transpose() * m.exponent.ell());
    terms.push_back(std::move(out));
  }
  return Operator::from_terms(op.positions(), op.lambda_slots(), std::move(terms));
}

Rational beta_of(const VectorQ& form) {
  Rational b(0);
  for (Eigen::Index j = 0; j < form.size(); ++j) b += form[j];
  return b;
}

}  // namespace

ModifiedRep build_modified(const Representation& rep, bool flipped) {
  ModifiedRep out{rep, {}, {}};
  const CartanDatum& d = *rep.datum;
  for (int i : d.labels()) {
    const int n = flipped ? 1 - d.parity(i) : d.parity(i);
    out.weight[i] = n;
    const auto& g = rep.generators.at(i);
    Generators m;
    m.E = scalar_times(Laurent::q_power(n), g.E * monomial_power(g.K, n));
    m.F = scalar_times(Laurent::q_power(1 - n), g.F * monomial_power(g.K, n - 1));
    m.K = monomial_power(g.K, 2 * (2 * n - 1));
    out.generators[i] = std::move(m);
  }
  return out;
}

Operator fq_commutator(const Operator& a, const Operator& b, const Laurent& t) {
  return a * b - t.inverted() * (b * a);
}

Operator modified_serre_residue(const Operator& xj, const Operator& xi, const Laurent& t) {
  return commutator(fq_commutator(xj, xi, t), xi);
}

RelationReport check_modified_relations(const ModifiedRep& mrep) {
  RelationReport report;
  const CartanDatum& d = *mrep.base.datum;
  const Word& w = mrep.base.word;
  auto record = [&](const std::string& name, const Operator& residue) {
    RelationResult r;
    r.relation = name;
    r.pass = residue.is_zero();
    if (!r.pass) r.residue = render_operator(residue, w);
    report.results.push_back(std::move(r));
  };
  const Operator one = Operator::identity(w.length(), d.rank());
  for (int i : d.labels()) {
    const std::string si = std::to_string(i);
    const Laurent fqi = mrep.fq(i);
    record("[e'" + si + ",f'" + si + "]_fq = (1 - fq^-1)(1 - K'" + si + ")",
           fq_commutator(mrep.E(i), mrep.F(i), fqi) - (Laurent(1) - fqi.inverted()) * (one - mrep.K(i)));
    for (int j : d.labels()) {
      const std::string sj = std::to_string(j);
      const int a = d.entry(i, j);
      const Laurent twist = Laurent::q_power(2 * mrep.sign(i) * a);
      record("K'" + si + " e'" + sj + " = fq_" + si + "^" + std::to_string(a) + " e' K'",
             q_commutator(mrep.K(i), mrep.E(j), twist));
      record("K'" + si + " f'" + sj + " = fq_" + si + "^" + std::to_string(-a) + " f' K'",
             q_commutator(mrep.K(i), mrep.F(j), twist.inverted()));
      if (i == j) continue;
      record("e'" + si + " f'" + sj + " = f' e'", commutator(mrep.E(i), mrep.F(j)));
      if (a == 0 && i < j) {
        record("[e'" + si + ",e'" + sj + "] = 0", commutator(mrep.E(i), mrep.E(j)));
        record("[f'" + si + ",f'" + sj + "] = 0", commutator(mrep.F(i), mrep.F(j)));
      }
      if (a == -1) {
        record("Serre e'(" + sj + "," + si + ")", modified_serre_residue(mrep.E(j), mrep.E(i), mrep.fq(j)));
        record("Serre f'(" + sj + "," + si + ")", modified_serre_residue(mrep.F(j), mrep.F(i), fqi));
      }
    }
  }
  return report;
}

json Certificate::to_json() const {
  json j;
  j["check"] = check;
  j["status"] = pass ? "pass" : "fail";
  j["witnesses"] = witnesses;
  for (const auto& [k, v] : data.items()) j[k] = v;
  return j;
}

std::vector<TaggedMonomial> generator_monomials(const std::map<int, Generators>& generators) {
  std::vector<TaggedMonomial> out;
  for (const char* kind : {"E", "F", "K"})
    for (const auto& [label, g] : generators) {
      const Operator& op = kind[0] == 'E' ? g.E : kind[0] == 'F' ? g.F : g.K;
      for (const auto& m : op.terms()) out.push_back({kind + std::to_string(label), m});
    }
  return out;
}

Certificate cross_parity_certificate(const ModifiedRep& mrep) {
  return parity_scan("cross_parity", mrep.generators, mrep.base.word);
}

Certificate cross_parity_certificate(const Representation& rep) {
  return parity_scan("cross_parity", rep.generators, rep.word);
}

Certificate qtori_certificate(const ModifiedRep& mrep) { return gram_certificate("qtori", mrep.generators, mrep.base.word); }

Certificate qtori_certificate(const Representation& rep) { return gram_certificate("qtori", rep.generators, rep.word); }

Certificate commutant_check(const ModifiedRep& mrep) {
  Certificate cert;
  cert.check = "commutant";
  const CartanDatum& d = *mrep.base.datum;
  const Word& w = mrep.base.word;
  const int r = d.rank();
  const MatrixQ b = langlands_b_vectors(d);
  const MatrixQ a = to_rational(d.cartan());
  const MatrixQ ab = a * b;
  cert.data["cartan_inverse_ok"] = ab == MatrixQ::Identity(r, r);
  if (!(ab == MatrixQ::Identity(r, r))) cert.pass = false;

  std::vector<Exponent> k_exp;
  for (int slot = 0; slot < r; ++slot) k_exp.push_back(mrep.base.K(d.label(slot)).terms().front().exponent);
  std::vector<TaggedMonomial> targets;
  for (const auto& t : generator_monomials(mrep.generators))
    if (t.generator[0] != 'K') targets.push_back(t);

  // pairing of prod_j K_j^{c_j} with m
  auto pairing = [&](const VectorQ& c, const Monomial& m) {
    Rational s(0);
    for (int j = 0; j < r; ++j)
      if (!c[j].is_zero()) s += commutation_exponent(k_exp[static_cast<std::size_t>(j)], m.exponent, c[j]);
    return s;
  };
  auto even = [](const Rational& s) { return s.is_integer() && s.num() % 2 == 0; };

  json vectors = json::array();
  bool literal_sign = true;
  bool controls_fail = true;
  for (int k = 0; k < r; ++k) {
    VectorQ c(r), literal(r), control(r);
    json bk = json::array();
    for (int j = 0; j < r; ++j) {
      bk.push_back(b(j, k).str());
      c[j] = Rational(2) * b(j, k);
      literal[j] = Rational(2 * mrep.sign(d.label(j))) * b(j, k);
      control[j] = b(j, k);
    }
    std::set<std::string> values;
    bool control_failed = false;
    for (const auto& t : targets) {
      const Rational s = pairing(c, t.monomial);
      values.insert(s.str());
      if (!even(s) && cert.pass) {
        cert.pass = false;
        cert.witnesses.push_back({{"node", d.label(k)},
                                  {"generator", t.generator},
                                  {"monomial", render_monomial(t.monomial, w)},
                                  {"s", s.str()}});
      }
      if (!even(pairing(literal, t.monomial))) literal_sign = false;
      if (!even(pairing(control, t.monomial))) control_failed = true;
    }
    if (!control_failed) controls_fail = false;
    vectors.push_back({{"node", d.label(k)}, {"b", bk}, {"s_values", std::vector<std::string>(values.begin(), values.end())}});
  }
  if (!controls_fail) {
    cert.pass = false;
    cert.witnesses.push_back({{"control", "b/2 combination commutes"}});
  }
  cert.data["b_vectors"] = std::move(vectors);
  cert.data["control_detected"] = controls_fail;
  cert.data["unsigned_K_bar_powers_commute"] = literal_sign;
  return cert;
}

VectorQ weyl_reflect_lambda(const CartanDatum& datum, const VectorQ& lambda, int label) {
  const int i = datum.slot(label);
  VectorQ out = lambda;
  for (int j = 0; j < datum.rank(); ++j) out[j] = lambda[j] - Rational(datum.cartan()(i, j)) * lambda[i];
  return out;
}

DominantResult dominant_representative(const CartanDatum& datum, const VectorQ& lambda) {
  DominantResult out{lambda, {}};
  for (;;) {
    int slot = 0;
    while (slot < datum.rank() && !(out.lambda[slot] < Rational(0))) ++slot;
    if (slot == datum.rank()) return out;
    out.lambda = weyl_reflect_lambda(datum, out.lambda, datum.label(slot));
    out.reflections.push_back(datum.label(slot));
  }
}

Representation reflect_lambda(const Representation& rep, int label) {
  const CartanDatum& d = *rep.datum;
  const int r = d.rank();
  const int i = d.slot(label);
  // lambda_j -> sum_k s(j,k) lambda_k
  MatrixQ s = MatrixQ::Identity(r, r);
  for (int j = 0; j < r; ++j) s(j, i) -= Rational(d.cartan()(i, j));
  Representation out{rep.datum, rep.word, rep.mode, {}};
  for (const auto& [l, g] : rep.generators)
    out.generators[l] = {substitute_lambda(g.E, s), substitute_lambda(g.F, s), substitute_lambda(g.K, s)};
  return out;
}

Certificate verify_weyl_pattern(const DatumPtr& datum, int label) {
  Certificate cert;
  cert.check = "weyl_pattern";
  const CartanDatum& d = *datum;
  const int r = d.rank();
  const int si = d.slot(label);
  Word word = word_starting_with(datum, label).word;
  Representation rep = build_rep(word);
  Representation ref = reflect_lambda(rep, label);
  cert.data["word"] = word.letters();
  auto fail = [&](const std::string& what) {
    cert.pass = false;
    cert.witnesses.push_back(what);
  };
  for (int j : d.labels()) {
    const std::string sj = std::to_string(j);
    if (ref.E(j) != rep.E(j)) fail("E" + sj + " changed");
    // expected change of the lambda part of F_j and K_j
    VectorQ delta = VectorQ::Constant(r, Rational(0));
    if (j == label) delta[si] = Rational(4);
    else if (d.adjacent(j, label)) delta[si] = Rational(-2);
    auto before = brackets_by_key(rep.F(j));
    auto after = brackets_by_key(ref.F(j));
    if (before.size() != after.size()) fail("F" + sj + " bracket count changed");
    for (const auto& [key, t] : before) {
      auto it = after.find(key);
      if (it == after.end()) {
        fail("F" + sj + " bracket [" + render_bracket(t, word) + "] lost");
        continue;
      }
      if (!(it->second.form.lambda == t.form.lambda + delta) || it->second.scalar != t.scalar)
        fail("F" + sj + ": [" + render_bracket(t, word) + "] -> [" + render_bracket(it->second, word) + "]");
    }
    const Exponent& k0 = rep.K(j).terms().front().exponent;
    const Exponent& k1 = ref.K(j).terms().front().exponent;
    if (k0.lattice() != k1.lattice() || !(k1.ell() == k0.ell() + delta)) fail("K" + sj + " lambda part");
  }
  // leftmost coordinate: only F_i has p_0 and a unique E bracket involves u_0
  int f_terms = 0, e_terms = 0;
  for (int j : d.labels()) {
    for (const auto& t : rebracket(rep.F(j)))
      if (t.shift[0] != 0) {
        ++f_terms;
        LinearForm expect(word.length(), r);
        expect.u[0] = -1;
        expect.lambda[si] = Rational(-2);
        if (j != label || !(t.form == expect)) fail("unexpected p_0 term in F" + std::to_string(j));
      }
    for (const auto& t : rebracket(rep.E(j)))
      if (t.form.u[0] != 0 || t.shift[0] != 0) ++e_terms;
  }
  if (f_terms != 1) fail(std::to_string(f_terms) + " F brackets shift p_0");
  if (e_terms != 1) fail(std::to_string(e_terms) + " E brackets involve u_0");
  if (!(reflect_lambda(ref, label).generators.at(label).F == rep.F(label))) fail("reflection is not an involution");
  return cert;
}

Operator shift_u(const Operator& op, int position, const VectorQ& mu) {
  std::vector<Monomial> terms;
  terms.reserve(op.size());
  for (const auto& m : op.terms()) {
    Monomial out = m;
    const int a = m.exponent.alpha(position);
    if (a != 0) {
      VectorQ ell = m.exponent.lambda_free() ? VectorQ::Constant(op.lambda_slots(), Rational(0)) : m.exponent.ell();
      ell -= Rational(a) * mu;
      out.exponent.set_ell(std::move(ell));
    }
    terms.push_back(std::move(out));
  }
  return Operator::from_terms(op.positions(), op.lambda_slots(), std::move(terms));
}

Normalization normalize_lambda(const Representation& rep) {
  if (rep.mode != LambdaMode::Formal) throw std::invalid_argument("normalize_lambda: representation is not in formal mode");
  Normalization out{{}, rep};
  const Word& word = rep.word;
  const int n = word.length();
  for (int k = 0; k < n; ++k) {
    const int label = word[k];
    const BracketTerm* weight = nullptr;
    auto brackets = rebracket(out.rep.F(label));
    for (const auto& t : brackets)
      if (t.shift[k] == 1 && (t.shift.array() != 0).count() == 1) weight = &t;
    if (!weight) throw std::logic_error("normalize_lambda: no F weight with shift e(p_" + std::to_string(k) + ")");
    if (weight->form.u[k] != -1)
      throw std::logic_error("normalize_lambda: weight at position " + std::to_string(k) + " has u-coefficient " +
                             std::to_string(-weight->form.u[k]));
    // the weight reads [sum c_j u_j + lambda'] with L = -(sum c_j u_j + lambda')
    const VectorQ lam = -weight->form.lambda;
    const Rational beta = beta_of(lam) - Rational(1);
    if (!beta.is_integer() || beta.num() <= 0)
      throw std::domain_error("normalize_lambda: beta_" + std::to_string(k + 1) + " = " + beta.str() +
                              " is not a positive integer");
    VectorQ mu = (beta / (beta + Rational(1))) * lam;
    for (auto& [l, g] : out.rep.generators) g = {shift_u(g.E, k, mu), shift_u(g.F, k, mu), shift_u(g.K, k, mu)};
    out.substitution.push_back({k, mu, static_cast<int>(beta.num())});
  }
  out.rep.mode = LambdaMode::Normalized;
  return out;
}

Certificate normalization_certificate(const Normalization& n) {
  Certificate cert;
  cert.check = "normalize_lambda";
  const Representation& rep = n.rep;
  const Word& w = rep.word;
  for (const auto& [label, g] : rep.generators) {
    const Exponent& k = g.K.terms().front().exponent;
    if (!k.lambda_free() && !(k.ell().array() == Rational(0)).all()) {
      cert.pass = false;
      cert.witnesses.push_back("K" + std::to_string(label) + " depends on lambda: " + render_operator(g.K, w));
    }
  }
  json betas = json::array();
  for (const auto& s : n.substitution) {
    betas.push_back(s.beta);
    if (s.beta <= 0) cert.pass = false;
  }
  std::set<std::string> forms;
  for (const auto& [label, g] : rep.generators)
    for (const Operator* op : {&g.E, &g.F})
      for (const auto& t : rebracket(*op)) {
        VectorQ l = t.form.lambda;
        if ((l.array() == Rational(0)).all()) continue;
        Eigen::Index first = 0;
        while (l[first].is_zero()) ++first;
        if (l[first] < Rational(0)) l = -l;
        std::string key;
        for (Eigen::Index j = 0; j < l.size(); ++j) key += l[j].str() + (j + 1 < l.size() ? "," : "");
        forms.insert(key);
      }
  if (static_cast<int>(forms.size()) > rep.datum->rank()) {
    cert.pass = false;
    cert.witnesses.push_back(std::to_string(forms.size()) + " distinct lambda forms");
  }
  cert.data["betas"] = std::move(betas);
  cert.data["lambda_forms"] = std::vector<std::string>(forms.begin(), forms.end());
  return cert;
}

}  // namespace posrep
