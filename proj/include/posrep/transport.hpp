#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "posrep/qtorus.hpp"
#include "posrep/words.hpp"

namespace posrep {

/// Positions (u, v, w) = (at, at+1, at+2) of a braid move together with the
/// arguments of the two quantum dilogarithms
///
///   Y = e^{pi b(2p_w - 2p_u + u - v + w)},  Z = e^{pi b(2p_w - 2p_u - u + v - w)}.
struct MoveFrame {
  int u = 0, v = 1, w = 2;
  Exponent Y, Z;
};

MoveFrame make_frame(int positions, int at);

/// T on one exponent: alpha -> M^T alpha and gamma -> M^{-1} gamma on
/// (u, v, w), with M = [[-1,1,0],[1,0,1],[1,0,0]].
Exponent relabel(const Exponent& e, const MoveFrame& frame);

enum class Conjugation {
  Inner,  // g(X)^* m g(X) = m R(X)
  Outer,  // g(X) m g(X)^* = m R(X)
};

/// N(X) / prod_c (1 + v^c X) with Laurent coefficients; N is stored from
/// X^0 upward.
struct FactorRational {
  std::vector<Laurent> numerator;
  std::vector<int> denominator;

  bool is_polynomial() const { return denominator.empty(); }
  std::string str() const;
};

/// The factor R with conj(m) = m R(X), for s = s(X, m). Inner: s = 2k gives
/// prod_{j=0}^{k-1} (1 + q^{2j+1} X) and s = -2k gives the reciprocal of
/// prod_{j=1}^{k} (1 + q^{1-2j} X). Outer is the reciprocal of Inner.
/// Throws std::invalid_argument for odd s.
FactorRational conjugation_factor(int s, Conjugation direction);

/// Thrown when a conjugated sum does not collapse to a Laurent polynomial.
class NonPolynomialResidue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sum of m R(X) over a fixed argument X.
class LocalizedOperator {
 public:
  struct Term {
    Monomial monomial;
    FactorRational factor;
  };

  LocalizedOperator(int positions, int lambda_slots, Exponent argument)
      : positions_(positions), lambda_slots_(lambda_slots), argument_(std::move(argument)) {}

  void add(Monomial m, FactorRational r);
  const std::vector<Term>& terms() const { return terms_; }
  const Exponent& argument() const { return argument_; }

  /// Clears denominators coset by coset; throws NonPolynomialResidue naming
  /// the denominator that survives.
  Operator expand() const;

 private:
  int positions_;
  int lambda_slots_;
  Exponent argument_;
  std::vector<Term> terms_;
};

struct TransportStats {
  int max_abs_s = 0;
  std::size_t max_terms = 0;
  std::size_t term_limit = 0;  // 0 for no limit
};

/// Thrown when an intermediate operator exceeds TransportStats::term_limit.
class TermLimitExceeded : public std::length_error {
 public:
  TermLimitExceeded(const std::string& what, std::size_t terms) : std::length_error(what), terms(terms) {}
  std::size_t terms;
};

/// Phi = T o Ad(g(Y) g(Z)^*) for the braid move whose frame is given.
Operator braid_conjugate(const Operator& op, const MoveFrame& frame, TransportStats* stats = nullptr);

/// Swaps positions t and t+1 in every exponent.
Operator swap_positions(const Operator& op, int t);

/// swap_positions after checking that the letters at t, t+1 of `word` are
/// distinct and not adjacent.
Operator commutation_move(const Operator& op, const Word& word, int t);

struct TraceStep {
  std::string word;  // word after the move
  BraidMove move;
  std::size_t terms = 0;  // monomials after the move
};

/// Folds the moves of `path` (starting at `from`) over `op`.
Operator transport(const Operator& op, const Word& from, const std::vector<BraidMove>& path,
                   TransportStats* stats = nullptr, std::vector<TraceStep>* trace = nullptr);

}  // namespace posrep
