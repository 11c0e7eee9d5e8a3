#include "posrep/transport.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace posrep {

namespace {

// Laurent polynomial in X with Laurent coefficients in v: sum c[j] X^{offset + j}.
struct XPoly {
  int offset = 0;
  std::vector<Laurent> c;

  void add(int degree, const Laurent& value) {
    if (value.is_zero()) return;
    if (c.empty()) {
      offset = degree;
      c.push_back(value);
      return;
    }
    if (degree < offset) {
      c.insert(c.begin(), static_cast<std::size_t>(offset - degree), Laurent());
      offset = degree;
    }
    const auto idx = static_cast<std::size_t>(degree - offset);
    if (idx >= c.size()) c.resize(idx + 1);
    c[idx] += value;
  }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::size_t lead = 0;
    while (lead < c.size() && c[lead].is_zero()) ++lead;
    if (lead == c.size()) {
      c.clear();
      offset = 0;
      return;
    }
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead));
    offset += static_cast<int>(lead);
  }

  // Multiplies by (1 + v^e X).
  void times_factor(int e) {
    if (c.empty()) return;
    c.emplace_back();
    for (std::size_t j = c.size() - 1; j > 0; --j) c[j] += c[j - 1].shifted(e);
  }

  // Exact division by (1 + v^e X); false if not divisible.
  bool divide_factor(int e) {
    trim();
    if (c.empty()) return true;
    if (c.size() == 1) return false;
    std::vector<Laurent> q(c.size() - 1);
    q[0] = c[0];
    for (std::size_t j = 1; j < q.size(); ++j) q[j] = c[j] - q[j - 1].shifted(e);
    if (c.back() != q.back().shifted(e)) return false;
    c = std::move(q);
    return true;
  }
};

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string factors_str(const std::vector<int>& denominator) {
  std::string out;
  for (int c : denominator) out += "(1 + " + Laurent::monomial(c).str() + " X)";
  return out.empty() ? "1" : out;
}

int local_pairing(const Exponent& a, const Exponent& b, const MoveFrame& f) {
  int s = 0;
  for (int k : {f.u, f.v, f.w}) s += a.alpha(k) * b.gamma(k) - a.gamma(k) * b.alpha(k);
  return s;
}

}  // namespace

std::string FactorRational::str() const {
  std::string num;
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (numerator[j].is_zero()) continue;
    if (!num.empty()) num += " + ";
    std::string c = numerator[j].str();
    if (j == 0)
      num += c;
    else
      num += (c == "1" ? "" : "(" + c + ")") + "X" + (j > 1 ? "^" + std::to_string(j) : "");
  }
  if (num.empty()) num = "0";
  return denominator.empty() ? num : "(" + num + ") / " + factors_str(denominator);
}

MoveFrame make_frame(int positions, int at) {
  if (at < 0 || at + 2 >= positions) throw std::invalid_argument("make_frame: position out of range");
  MoveFrame f;
  f.u = at;
  f.v = at + 1;
  f.w = at + 2;
  f.Y = Exponent(positions);
  f.Z = Exponent(positions);
  const int sign[3] = {1, -1, 1};
  const int shift[3] = {-1, 0, 1};
  const int pos[3] = {f.u, f.v, f.w};
  for (int k = 0; k < 3; ++k) {
    f.Y.set_alpha(pos[k], sign[k]);
    f.Z.set_alpha(pos[k], -sign[k]);
    f.Y.set_gamma(pos[k], shift[k]);
    f.Z.set_gamma(pos[k], shift[k]);
  }
  return f;
}

Exponent relabel(const Exponent& e, const MoveFrame& f) {
  Exponent out = e;
  const int a1 = e.alpha(f.u), a2 = e.alpha(f.v), a3 = e.alpha(f.w);
  const int g1 = e.gamma(f.u), g2 = e.gamma(f.v), g3 = e.gamma(f.w);
  out.set_alpha(f.u, -a1 + a2 + a3);
  out.set_alpha(f.v, a1);
  out.set_alpha(f.w, a2);
  out.set_gamma(f.u, g3);
  out.set_gamma(f.v, g1 + g3);
  out.set_gamma(f.w, g2 - g3);
  return out;
}

FactorRational conjugation_factor(int s, Conjugation direction) {
  if (s % 2 != 0) throw std::invalid_argument("conjugation_factor: odd commutation exponent " + std::to_string(s));
  const int k = (s < 0 ? -s : s) / 2;
  std::vector<int> powers;  // v-exponents c of the factors (1 + v^c X)
  for (int j = 0; j < k; ++j) powers.push_back(s > 0 ? 2 * (2 * j + 1) : 2 * (1 - 2 * (j + 1)));
  std::sort(powers.begin(), powers.end());
  FactorRational r;
  const bool polynomial = (s > 0) == (direction == Conjugation::Inner);
  if (polynomial || k == 0) {
    XPoly p;
    p.add(0, Laurent(1));
    for (int c : powers) p.times_factor(c);
    r.numerator = p.c;
  } else {
    r.numerator = {Laurent(1)};
    r.denominator = powers;
  }
  return r;
}

void LocalizedOperator::add(Monomial m, FactorRational r) { terms_.push_back({std::move(m), std::move(r)}); }

namespace {

using Terms = std::vector<Monomial>;

// Adds equal exponents and drops zeros; order is not canonical.
Terms merge(Terms terms) {
  std::unordered_map<Exponent, std::size_t, ExponentHash> index;
  index.reserve(terms.size());
  Terms out;
  out.reserve(terms.size());
  for (auto& m : terms) {
    auto [it, inserted] = index.try_emplace(m.exponent, out.size());
    if (inserted)
      out.push_back(std::move(m));
    else
      out[it->second].coeff += m.coeff;
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Monomial& m) { return m.coeff.is_zero(); }), out.end());
  return out;
}

void expand_polynomial(const Monomial& m, const std::vector<Laurent>& numerator, const Exponent& X, Terms& out) {
  const int s_mx = commutation_exponent(m.exponent, X);
  for (std::size_t j = 0; j < numerator.size(); ++j) {
    if (numerator[j].is_zero()) continue;
    const int jj = static_cast<int>(j);
    Exponent e = m.exponent;
    e.add_scaled(X, jj);
    out.push_back({std::move(e), (m.coeff * numerator[j]).shifted(jj * s_mx)});
  }
}

// Clears the denominators of `rational`, coset by coset of <X>, and appends
// the resulting polynomial terms to `out`.
void expand_rational(const std::vector<LocalizedOperator::Term>& rational, const Exponent& X, Terms& out) {
  if (rational.empty()) return;
  // Coset representatives m0 = e - t X with a fixed lattice coordinate of X
  // reduced to the range [0, |x|).
  Eigen::Index pivot = -1;
  for (Eigen::Index i = 0; i < X.lattice().size(); ++i)
    if (X.lattice()[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw NonPolynomialResidue("localized operator with trivial argument");

  struct Group {
    std::vector<std::pair<XPoly, std::vector<int>>> parts;
  };
  std::unordered_map<Exponent, Group, ExponentHash> groups;
  std::vector<Exponent> group_order;

  for (const auto& term : rational) {
    const Monomial& m = term.monomial;
    const int s_mx = commutation_exponent(m.exponent, X);
    const int t = floor_div(m.exponent.lattice()[pivot], X.lattice()[pivot]);
    Exponent m0 = m.exponent;
    m0.add_scaled(X, -t);
    // c e^{e} = c v^{-t s(m0,X)} m0 X^t
    XPoly p;
    for (std::size_t j = 0; j < term.factor.numerator.size(); ++j)
      p.add(t + static_cast<int>(j), (m.coeff * term.factor.numerator[j]).shifted(-t * s_mx));
    auto [it, inserted] = groups.try_emplace(m0);
    if (inserted) group_order.push_back(m0);
    it->second.parts.emplace_back(std::move(p), term.factor.denominator);
  }

  for (const auto& m0 : group_order) {
    const Group& g = groups.at(m0);
    std::map<int, int> common;
    for (const auto& [p, den] : g.parts) {
      std::map<int, int> mult;
      for (int c : den) ++mult[c];
      for (auto [c, n] : mult) common[c] = std::max(common[c], n);
    }
    XPoly total;
    for (const auto& [p, den] : g.parts) {
      std::map<int, int> missing = common;
      for (int c : den) --missing[c];
      XPoly q = p;
      for (auto [c, n] : missing)
        for (int r = 0; r < n; ++r) q.times_factor(c);
      for (std::size_t j = 0; j < q.c.size(); ++j) total.add(q.offset + static_cast<int>(j), q.c[j]);
    }
    std::vector<int> denominator;
    for (auto [c, n] : common)
      for (int r = 0; r < n; ++r) denominator.push_back(c);
    for (int c : denominator)
      if (!total.divide_factor(c))
        throw NonPolynomialResidue("conjugation left a denominator " + factors_str(denominator) +
                                   " that does not cancel");
    const int s0 = commutation_exponent(m0, X);
    for (std::size_t j = 0; j < total.c.size(); ++j) {
      if (total.c[j].is_zero()) continue;
      const int d = total.offset + static_cast<int>(j);
      Exponent e = m0;
      e.add_scaled(X, d);
      out.push_back({std::move(e), total.c[j].shifted(d * s0)});
    }
  }
}

Terms conjugate_stage(Terms in, const Exponent& X, const MoveFrame& frame, Conjugation dir, TransportStats* stats) {
  // Terms with s(X, m) = 0 pass through. New terms keep s(X, m + jX) = s(X, m)
  // != 0, so they can only collide with each other.
  Terms fixed, moved;
  fixed.reserve(in.size());
  std::vector<LocalizedOperator::Term> rational;
  for (auto& m : in) {
    const int s = local_pairing(X, m.exponent, frame);
    if (s == 0) {
      fixed.push_back(std::move(m));
      continue;
    }
    if (stats) stats->max_abs_s = std::max(stats->max_abs_s, s < 0 ? -s : s);
    if (s % 2 != 0)
      throw std::invalid_argument("braid_conjugate: odd commutation exponent " + std::to_string(s) +
                                  " at positions " + std::to_string(frame.u) + ".." + std::to_string(frame.w));
    FactorRational r = conjugation_factor(s, dir);
    if (r.is_polynomial())
      expand_polynomial(m, r.numerator, X, moved);
    else
      rational.push_back({std::move(m), std::move(r)});
  }
  expand_rational(rational, X, moved);
  moved = merge(std::move(moved));
  fixed.insert(fixed.end(), std::make_move_iterator(moved.begin()), std::make_move_iterator(moved.end()));
  if (stats) {
    stats->max_terms = std::max(stats->max_terms, fixed.size());
    if (stats->term_limit && fixed.size() > stats->term_limit)
      throw TermLimitExceeded("operator grew past the term limit", fixed.size());
  }
  return fixed;
}

Terms braid_terms(Terms terms, const MoveFrame& frame, TransportStats* stats) {
  terms = conjugate_stage(std::move(terms), frame.Z, frame, Conjugation::Inner, stats);
  terms = conjugate_stage(std::move(terms), frame.Y, frame, Conjugation::Outer, stats);
  for (auto& m : terms) m.exponent = relabel(m.exponent, frame);
  return terms;
}

void swap_terms(Terms& terms, int t) {
  for (auto& m : terms) {
    const int n = m.exponent.positions();
    std::swap(m.exponent.lattice()[t], m.exponent.lattice()[t + 1]);
    std::swap(m.exponent.lattice()[n + t], m.exponent.lattice()[n + t + 1]);
  }
}

}  // namespace

Operator LocalizedOperator::expand() const {
  Terms out;
  std::vector<Term> rational;
  for (const auto& term : terms_) {
    if (term.factor.is_polynomial())
      expand_polynomial(term.monomial, term.factor.numerator, argument_, out);
    else
      rational.push_back(term);
  }
  expand_rational(rational, argument_, out);
  return Operator::from_terms(positions_, lambda_slots_, std::move(out));
}

Operator braid_conjugate(const Operator& op, const MoveFrame& frame, TransportStats* stats) {
  return Operator::from_terms(op.positions(), op.lambda_slots(), braid_terms(op.terms(), frame, stats));
}

Operator swap_positions(const Operator& op, int t) {
  if (t < 0 || t + 1 >= op.positions()) throw std::invalid_argument("swap_positions: position out of range");
  Terms terms = op.terms();
  swap_terms(terms, t);
  return Operator::from_terms(op.positions(), op.lambda_slots(), std::move(terms));
}

Operator commutation_move(const Operator& op, const Word& word, int t) {
  if (t < 0 || t + 1 >= word.length()) throw std::invalid_argument("commutation_move: position out of range");
  const int a = word[t], b = word[t + 1];
  if (a == b || word.datum().adjacent(a, b))
    throw std::invalid_argument("commutation_move: letters " + std::to_string(a) + "," + std::to_string(b) +
                                " at position " + std::to_string(t) + " do not commute");
  return swap_positions(op, t);
}

Operator transport(const Operator& op, const Word& from, const std::vector<BraidMove>& path, TransportStats* stats,
                   std::vector<TraceStep>* trace) {
  if (op.positions() != from.length()) throw std::invalid_argument("transport: operator and word lengths differ");
  Terms cur = op.terms();
  Word word = from;
  for (const auto& move : path) {
    if (!move_applicable(word, move))
      throw std::invalid_argument("transport: move " + to_string(move) + " does not apply to " + word.str());
    if (move.kind == MoveKind::Commutation)
      swap_terms(cur, move.position);
    else
      cur = braid_terms(std::move(cur), make_frame(op.positions(), move.position), stats);
    word = apply_move(word, move);
    if (trace) trace->push_back({word.str(), move, cur.size()});
  }
  return Operator::from_terms(op.positions(), op.lambda_slots(), std::move(cur));
}

}  // namespace posrep
