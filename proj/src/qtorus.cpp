#include "posrep/qtorus.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace posrep {

namespace {

VectorQ normalized_ell(VectorQ ell) {
  for (Eigen::Index i = 0; i < ell.size(); ++i)
    if (!ell[i].is_zero()) return ell;
  return VectorQ();
}

}  // namespace

Exponent::Exponent(const Eigen::VectorXi& alpha, const Eigen::VectorXi& gamma, const VectorQ& ell) {
  if (alpha.size() != gamma.size()) throw std::invalid_argument("Exponent: alpha/gamma size mismatch");
  const auto n = alpha.size();
  lattice_.resize(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    lattice_[k] = narrow(alpha[k]);
    lattice_[n + k] = narrow(gamma[k]);
  }
  ell_ = normalized_ell(ell);
}

void Exponent::set_ell(VectorQ ell) { ell_ = normalized_ell(std::move(ell)); }

Exponent Exponent::operator-() const {
  Exponent e;
  e.lattice_ = -lattice_;
  if (ell_.size()) e.ell_ = -ell_;
  return e;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.lattice_.size() != b.lattice_.size()) throw std::invalid_argument("Exponent: position count mismatch");
  Exponent e;
  e.lattice_.resize(a.lattice_.size());
  for (Eigen::Index i = 0; i < a.lattice_.size(); ++i)
    e.lattice_[i] = Exponent::narrow(int(a.lattice_[i]) + int(b.lattice_[i]));
  if (a.ell_.size() == 0)
    e.ell_ = b.ell_;
  else if (b.ell_.size() == 0)
    e.ell_ = a.ell_;
  else
    e.ell_ = normalized_ell(a.ell_ + b.ell_);
  return e;
}

Exponent Exponent::scaled(int factor) const {
  Exponent e;
  e.lattice_.resize(lattice_.size());
  for (Eigen::Index i = 0; i < lattice_.size(); ++i) e.lattice_[i] = narrow(int(lattice_[i]) * factor);
  if (ell_.size()) e.ell_ = normalized_ell(ell_ * Rational(factor));
  return e;
}

Exponent& Exponent::add_scaled(const Exponent& x, int factor) {
  if (x.lattice_.size() != lattice_.size()) throw std::invalid_argument("Exponent: position count mismatch");
  if (factor == 0) return *this;
  for (Eigen::Index i = 0; i < lattice_.size(); ++i)
    if (x.lattice_[i] != 0) lattice_[i] = narrow(int(lattice_[i]) + factor * int(x.lattice_[i]));
  if (x.ell_.size()) {
    VectorQ sum = ell_.size() ? ell_ : VectorQ::Constant(x.ell_.size(), Rational(0));
    set_ell(sum + x.ell_ * Rational(factor));
  }
  return *this;
}

bool operator<(const Exponent& a, const Exponent& b) {
  const auto* pa = a.lattice_.data();
  const auto* pb = b.lattice_.data();
  const auto n = std::min(a.lattice_.size(), b.lattice_.size());
  for (Eigen::Index i = 0; i < n; ++i)
    if (pa[i] != pb[i]) return pa[i] < pb[i];
  if (a.lattice_.size() != b.lattice_.size()) return a.lattice_.size() < b.lattice_.size();
  const Eigen::Index slots = std::max(a.ell_.size(), b.ell_.size());
  for (Eigen::Index i = 0; i < slots; ++i) {
    Rational x = a.ell(static_cast<int>(i)), y = b.ell(static_cast<int>(i));
    if (x != y) return x < y;
  }
  return false;
}

std::size_t Exponent::hash() const {
  const auto* data = lattice_.data();
  const auto n = static_cast<std::size_t>(lattice_.size());
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint64_t chunk;
    std::memcpy(&chunk, data + i, sizeof chunk);
    h = (h ^ chunk) * 0xff51afd7ed558ccdull;
    h ^= h >> 32;
  }
  for (; i < n; ++i) h = (h ^ static_cast<std::uint16_t>(data[i])) * 0x100000001b3ull;
  for (Eigen::Index k = 0; k < ell_.size(); ++k) h ^= RationalHash{}(ell_[k]) + 0x9e3779b97f4a7c15ull + (h << 6);
  return static_cast<std::size_t>(h);
}

int commutation_exponent(const Exponent& a, const Exponent& b) {
  const int n = a.positions();
  if (n != b.positions()) throw std::invalid_argument("commutation_exponent: position count mismatch");
  const auto* la = a.lattice().data();
  const auto* lb = b.lattice().data();
  int s = 0;
  for (int k = 0; k < n; ++k) s += int(la[k]) * int(lb[n + k]) - int(la[n + k]) * int(lb[k]);
  return s;
}

Rational commutation_exponent(const Exponent& a, const Exponent& b, const Rational& scale_a) {
  return scale_a * Rational(commutation_exponent(a, b));
}

int commutation_exponent(const Monomial& a, const Monomial& b) {
  return commutation_exponent(a.exponent, b.exponent);
}

Monomial mul(const Monomial& a, const Monomial& b) {
  const int s = commutation_exponent(a.exponent, b.exponent);
  return {a.exponent + b.exponent, (a.coeff * b.coeff).shifted(s)};
}

Operator Operator::from_terms(int positions, int lambda_slots, std::vector<Monomial> terms) {
  Operator op(positions, lambda_slots);
  std::sort(terms.begin(), terms.end(),
            [](const Monomial& x, const Monomial& y) { return x.exponent < y.exponent; });
  op.terms_.reserve(terms.size());
  for (auto& m : terms) {
    if (m.exponent.positions() != positions) throw std::invalid_argument("Operator: monomial on wrong lattice");
    if (!op.terms_.empty() && op.terms_.back().exponent == m.exponent) {
      op.terms_.back().coeff += m.coeff;
      if (op.terms_.back().coeff.is_zero()) op.terms_.pop_back();
    } else if (!m.coeff.is_zero()) {
      op.terms_.push_back(std::move(m));
    }
  }
  return op;
}

Operator Operator::single(int positions, int lambda_slots, Monomial m) {
  std::vector<Monomial> v;
  v.push_back(std::move(m));
  return from_terms(positions, lambda_slots, std::move(v));
}

Operator Operator::identity(int positions, int lambda_slots) {
  return single(positions, lambda_slots, {Exponent(positions), Laurent(1)});
}

void Operator::check_compatible(const Operator& o) const {
  if (positions_ != o.positions_ || lambda_slots_ != o.lambda_slots_)
    throw std::invalid_argument("operators on incompatible lattices");
}

Operator operator+(const Operator& a, const Operator& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  a.check_compatible(b);
  Operator out(a.positions_, a.lambda_slots_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin(), j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->exponent < i->exponent) {
      out.terms_.push_back(*j++);
    } else {
      Laurent c = i->coeff + j->coeff;
      if (!c.is_zero()) out.terms_.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Operator Operator::operator-() const {
  Operator out = *this;
  for (auto& m : out.terms_) m.coeff = -m.coeff;
  return out;
}

Operator operator-(const Operator& a, const Operator& b) { return a + (-b); }

Operator operator*(const Operator& a, const Operator& b) {
  if (a.is_zero() || b.is_zero()) return Operator(std::max(a.positions_, b.positions_), std::max(a.lambda_slots_, b.lambda_slots_));
  a.check_compatible(b);
  std::unordered_map<Exponent, Laurent, ExponentHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      Monomial m = mul(x, y);
      auto [it, inserted] = acc.try_emplace(std::move(m.exponent), m.coeff);
      if (!inserted) it->second += m.coeff;
    }
  std::vector<Monomial> terms;
  terms.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) terms.push_back({e, c});
  return Operator::from_terms(a.positions_, a.lambda_slots_, std::move(terms));
}

Operator operator*(const Laurent& c, const Operator& a) {
  if (c.is_zero()) return Operator(a.positions_, a.lambda_slots_);
  Operator out = a;
  for (auto& m : out.terms_) m.coeff = c * m.coeff;
  return out;
}

Operator q_commutator(const Operator& a, const Operator& b, const Laurent& twist) {
  return a * b - twist * (b * a);
}

Operator monomial_power(const Operator& m, int power) {
  if (m.size() != 1) throw std::invalid_argument("monomial_power: operator is not a single monomial");
  const Monomial& base = m.terms().front();
  if (!base.coeff.is_unit_monomial() && power < 0)
    throw std::invalid_argument("monomial_power: negative power of a non-unit coefficient");
  // Powers of one exponent commute, so the cocycle is trivial.
  Laurent c(1);
  const int reps = power < 0 ? -power : power;
  for (int i = 0; i < reps; ++i) c = c * base.coeff;
  if (power < 0) c = c.inverted();
  return Operator::single(m.positions(), m.lambda_slots(), {base.exponent.scaled(power), c});
}

bool LinearForm::is_zero() const {
  if (constant != 0 || (u.array() != 0).any()) return false;
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (!lambda[i].is_zero()) return false;
  return true;
}

LinearForm LinearForm::operator-() const {
  LinearForm f = *this;
  f.u = -f.u;
  f.lambda = -f.lambda;
  f.constant = -f.constant;
  return f;
}

Operator expand_bracket(const BracketTerm& term) {
  const auto& L = term.form;
  if (L.constant != 0)
    throw std::invalid_argument("expand_bracket: nonzero constant in bracket weight is not representable");
  if (L.is_zero()) throw std::invalid_argument("expand_bracket: bracket weight is identically zero");
  if (L.u.size() != term.shift.size()) throw std::invalid_argument("expand_bracket: shift/weight size mismatch");
  const int n = static_cast<int>(L.u.size());
  const int slots = static_cast<int>(L.lambda.size());
  const int s = L.u.dot(term.shift);
  std::vector<Monomial> terms;
  terms.push_back({Exponent(L.u, term.shift, L.lambda), term.scalar.shifted(1 + s)});
  terms.push_back({Exponent(-L.u, term.shift, -L.lambda), term.scalar.shifted(-(1 + s))});
  return Operator::from_terms(n, slots, std::move(terms));
}

Operator expand_brackets(int positions, int lambda_slots, const std::vector<BracketTerm>& terms) {
  std::vector<Monomial> all;
  for (const auto& t : terms) {
    Operator op = expand_bracket(t);
    for (const auto& m : op.terms()) all.push_back(m);
  }
  return Operator::from_terms(positions, lambda_slots, std::move(all));
}

std::vector<BracketTerm> rebracket(const Operator& op) {
  const int n = op.positions();
  const int slots = op.lambda_slots();
  std::unordered_map<Exponent, std::size_t, ExponentHash> index;
  index.reserve(op.size());
  for (std::size_t i = 0; i < op.size(); ++i) index.emplace(op.terms()[i].exponent, i);
  std::vector<bool> used(op.size(), false);
  std::vector<BracketTerm> out;
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (used[i]) continue;
    const Monomial& a = op.terms()[i];
    Exponent partner_exp(a.exponent.alpha() * -1, a.exponent.gamma(),
                         a.exponent.ell().size() ? VectorQ(-a.exponent.ell()) : VectorQ());
    auto it = index.find(partner_exp);
    if (it == index.end() || it->second == i || used[it->second]) {
      std::string msg = "unpaired monomial with alpha=(";
      for (int k = 0; k < n; ++k) msg += (k ? "," : "") + std::to_string(a.exponent.alpha(k));
      msg += ") gamma=(";
      for (int k = 0; k < n; ++k) msg += (k ? "," : "") + std::to_string(a.exponent.gamma(k));
      msg += ")";
      throw NotBracketForm(msg);
    }
    const Monomial& b = op.terms()[it->second];
    used[i] = used[it->second] = true;
    const Eigen::VectorXi alpha = a.exponent.alpha();
    const Eigen::VectorXi shift = a.exponent.gamma();
    const int s = alpha.dot(shift);
    BracketTerm t;
    t.shift = shift;
    t.form = LinearForm(n, slots);
    VectorQ ell = a.exponent.ell().size() ? a.exponent.ell() : VectorQ::Constant(slots, Rational(0));
    if (a.coeff.shifted(-2 - 2 * s) == b.coeff) {
      t.scalar = a.coeff.shifted(-1 - s);
      t.form.u = alpha;
      t.form.lambda = ell;
    } else if (b.coeff.shifted(2 * s - 2) == a.coeff) {
      t.scalar = b.coeff.shifted(s - 1);
      t.form.u = -alpha;
      t.form.lambda = -ell;
    } else {
      throw NotBracketForm("monomial pair with coefficients " + a.coeff.str() + " / " + b.coeff.str() +
                           " is not a bracket");
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::size_t term_count(const Operator& op) { return rebracket(op).size(); }

}  // namespace posrep
