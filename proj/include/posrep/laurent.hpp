#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace posrep {

/// Laurent polynomial in v = q^{1/2} with coefficients in `Coeff`, stored as
/// sorted (exponent, coefficient) pairs with no zero coefficients.
template <typename Coeff>
class BasicLaurent {
 public:
  using Term = std::pair<int, Coeff>;

  BasicLaurent() = default;
  BasicLaurent(Coeff c) {  // NOLINT(google-explicit-constructor)
    if (c != Coeff(0)) terms_.emplace_back(0, c);
  }

  /// c v^e
  static BasicLaurent monomial(int e, Coeff c = Coeff(1)) {
    BasicLaurent l;
    if (c != Coeff(0)) l.terms_.emplace_back(e, c);
    return l;
  }
  /// q^k = v^{2k}
  static BasicLaurent q_power(int k) { return monomial(2 * k); }
  /// [n]_q = (q^n - q^{-n}) / (q - q^{-1})
  static BasicLaurent q_integer(int n) {
    BasicLaurent l;
    const int m = n < 0 ? -n : n;
    for (int j = 0; j < m; ++j) l += monomial(2 * (m - 1 - 2 * j));
    return n < 0 ? -l : l;
  }

  static BasicLaurent from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    BasicLaurent l;
    for (auto& [e, c] : terms) {
      if (!l.terms_.empty() && l.terms_.back().first == e)
        l.terms_.back().second += c;
      else
        l.terms_.emplace_back(e, c);
      if (l.terms_.back().second == Coeff(0)) l.terms_.pop_back();
    }
    return l;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Exactly one term with coefficient 1.
  bool is_unit_monomial() const { return terms_.size() == 1 && terms_[0].second == Coeff(1); }
  /// Exactly one term with coefficient +-1.
  bool is_signed_unit() const {
    return terms_.size() == 1 && (terms_[0].second == Coeff(1) || terms_[0].second == Coeff(-1));
  }
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  /// Value at v = 1.
  Coeff at_one() const {
    Coeff s(0);
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  /// Multiplies by v^k.
  BasicLaurent shifted(int k) const {
    BasicLaurent l = *this;
    for (auto& t : l.terms_) t.first += k;
    return l;
  }

  /// Substitutes v -> v^{-1}.
  BasicLaurent inverted() const {
    BasicLaurent l;
    l.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) l.terms_.emplace_back(-it->first, it->second);
    return l;
  }

  BasicLaurent operator-() const {
    BasicLaurent l = *this;
    for (auto& t : l.terms_) t.second = -t.second;
    return l;
  }

  friend BasicLaurent operator+(const BasicLaurent& a, const BasicLaurent& b) {
    BasicLaurent out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        out.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        out.terms_.push_back(*j++);
      } else {
        Coeff c = i->second + j->second;
        if (c != Coeff(0)) out.terms_.emplace_back(i->first, c);
        ++i;
        ++j;
      }
    }
    return out;
  }
  friend BasicLaurent operator-(const BasicLaurent& a, const BasicLaurent& b) { return a + (-b); }
  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    if (a.terms_.size() == 1 && a.terms_[0].second == Coeff(1)) return b.shifted(a.terms_[0].first);
    if (b.terms_.size() == 1 && b.terms_[0].second == Coeff(1)) return a.shifted(b.terms_[0].first);
    std::vector<Term> raw;
    raw.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
    return from_terms(std::move(raw));
  }
  BasicLaurent& operator+=(const BasicLaurent& o) { return *this = *this + o; }
  BasicLaurent& operator-=(const BasicLaurent& o) { return *this = *this - o; }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BasicLaurent& a, const BasicLaurent& b) { return !(a == b); }
  friend bool operator<(const BasicLaurent& a, const BasicLaurent& b) { return a.terms_ < b.terms_; }

  /// Renders in q when every exponent is even ("q + q^-1"), otherwise in v.
  std::string str() const {
    if (terms_.empty()) return "0";
    bool even = std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
    const std::string var = even ? "q" : "v";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Coeff c = it->second;
      int e = even ? it->first / 2 : it->first;
      bool neg = c < Coeff(0);
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      std::string cs = std::to_string(c);
      if (e == 0) {
        out += cs;
      } else {
        if (c != Coeff(1)) out += cs;
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BasicLaurent& l) { return os << l.str(); }

 private:
  std::vector<Term> terms_;
};

using Laurent = BasicLaurent<std::int64_t>;

}  // namespace posrep
