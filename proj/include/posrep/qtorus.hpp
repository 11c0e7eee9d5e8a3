#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "posrep/laurent.hpp"
#include "posrep/linalg.hpp"

namespace posrep {

// Quantum torus of exponential monomials
//
//   m = e^{pi b (alpha . u + 2 gamma . p + ell . lambda)}
//
// over positions k = 0..N-1 of a word, with [p_k, u_k] = 1/(2 pi i) and the
// lambda slots central. Two monomials satisfy m m' = q^s m' m with
//
//   s = alpha . gamma' - gamma . alpha'
//
// and multiply as m m' = v^s e^{pi b (sum of exponents)} where v = q^{1/2}.

using LatticeScalar = std::int16_t;
using Lattice = Eigen::Matrix<LatticeScalar, Eigen::Dynamic, 1>;

class Exponent {
 public:
  Exponent() = default;
  /// Zero exponent on `positions` positions.
  explicit Exponent(int positions) : lattice_(Lattice::Zero(2 * positions)) {}
  Exponent(const Eigen::VectorXi& alpha, const Eigen::VectorXi& gamma, const VectorQ& ell = VectorQ());

  int positions() const { return static_cast<int>(lattice_.size() / 2); }
  int alpha(int k) const { return lattice_[k]; }
  int gamma(int k) const { return lattice_[positions() + k]; }
  void set_alpha(int k, int value) { lattice_[k] = narrow(value); }
  void set_gamma(int k, int value) { lattice_[positions() + k] = narrow(value); }
  Eigen::VectorXi alpha() const { return lattice_.head(positions()).cast<int>(); }
  Eigen::VectorXi gamma() const { return lattice_.tail(positions()).cast<int>(); }
  const Lattice& lattice() const { return lattice_; }
  Lattice& lattice() { return lattice_; }

  /// Lambda part; empty when zero, otherwise one entry per lambda slot.
  const VectorQ& ell() const { return ell_; }
  Rational ell(int slot) const { return ell_.size() == 0 ? Rational(0) : ell_[slot]; }
  void set_ell(VectorQ ell);
  bool lambda_free() const { return ell_.size() == 0; }
  /// True when the u/p lattice part is zero (the monomial is central).
  bool lattice_zero() const { return (lattice_.array() == 0).all(); }

  Exponent operator-() const;
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }
  Exponent scaled(int factor) const;
  /// this += factor * x
  Exponent& add_scaled(const Exponent& x, int factor);

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.lattice_ == b.lattice_ && a.ell_.size() == b.ell_.size() && a.ell_ == b.ell_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  /// Lexicographic on (alpha, gamma, ell).
  friend bool operator<(const Exponent& a, const Exponent& b);

  std::size_t hash() const;

  static LatticeScalar narrow(int value) {
    if (value > INT16_MAX || value < INT16_MIN) throw std::overflow_error("exponent lattice entry overflow");
    return static_cast<LatticeScalar>(value);
  }

 private:
  Lattice lattice_;  // [alpha | gamma]
  VectorQ ell_;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const { return e.hash(); }
};

/// s with m m' = q^s m' m. Lambda parts never contribute.
int commutation_exponent(const Exponent& a, const Exponent& b);

/// Symplectic pairing with rational weights on the lattice: used for
/// fractional powers, where the exponents are scaled by rationals.
Rational commutation_exponent(const Exponent& a, const Exponent& b, const Rational& scale_a);

struct Monomial {
  Exponent exponent;
  Laurent coeff;
};

int commutation_exponent(const Monomial& a, const Monomial& b);

/// Exponents add; coefficient picks up v^s.
Monomial mul(const Monomial& a, const Monomial& b);

/// A finite sum of monomials in canonical form: sorted by exponent, distinct
/// exponents, nonzero coefficients.
class Operator {
 public:
  Operator() = default;
  Operator(int positions, int lambda_slots) : positions_(positions), lambda_slots_(lambda_slots) {}
  static Operator from_terms(int positions, int lambda_slots, std::vector<Monomial> terms);
  static Operator single(int positions, int lambda_slots, Monomial m);
  static Operator identity(int positions, int lambda_slots);

  int positions() const { return positions_; }
  int lambda_slots() const { return lambda_slots_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(const Laurent& c, const Operator& a);
  Operator operator-() const;

  friend bool operator==(const Operator& a, const Operator& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
  }
  friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

 private:
  void check_compatible(const Operator& o) const;

  int positions_ = 0;
  int lambda_slots_ = 0;
  std::vector<Monomial> terms_;
};

/// a b - twist * b a.
Operator q_commutator(const Operator& a, const Operator& b, const Laurent& twist);
inline Operator commutator(const Operator& a, const Operator& b) { return q_commutator(a, b, Laurent(1)); }

/// Integer power of a single-monomial operator (negative allowed).
Operator monomial_power(const Operator& m, int power);

/// L = u . coeffs + lambda . coeffs + constant.
struct LinearForm {
  Eigen::VectorXi u;
  VectorQ lambda;
  int constant = 0;

  LinearForm() = default;
  LinearForm(int positions, int lambda_slots)
      : u(Eigen::VectorXi::Zero(positions)), lambda(VectorQ::Constant(lambda_slots, Rational(0))) {}
  bool is_zero() const;
  LinearForm operator-() const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.u == b.u && a.lambda == b.lambda && a.constant == b.constant;
  }
};

/// scalar * [L] e(P), where [L] = [Q/2b - (i/b) L]_q and e(P) = e^{2 pi b P.p},
/// with the prefactor i/(q - q^{-1}) dropped.
struct BracketTerm {
  Laurent scalar = Laurent(1);
  LinearForm form;
  Eigen::VectorXi shift;

  friend bool operator==(const BracketTerm& a, const BracketTerm& b) {
    return a.scalar == b.scalar && a.form == b.form && a.shift == b.shift;
  }
};

/// Thrown by rebracket on an operator that is not a sum of brackets.
class NotBracketForm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// scalar (v^{1+s} m(L + 2P) + v^{-(1+s)} m(-L + 2P)), s = L_u . P.
/// Throws std::invalid_argument for L = 0 or a nonzero constant in L (the
/// constant would need e^{pi b c}, which is outside the coefficient ring).
Operator expand_bracket(const BracketTerm& term);

/// Inverse of expand_bracket over a sum: pairs monomials with equal gamma
/// and opposite (alpha, ell). The sign of L is fixed by the coefficients.
std::vector<BracketTerm> rebracket(const Operator& op);

/// Number of bracket terms; propagates NotBracketForm.
std::size_t term_count(const Operator& op);

/// Sum of expanded brackets.
Operator expand_brackets(int positions, int lambda_slots, const std::vector<BracketTerm>& terms);

}  // namespace posrep
