#pragma once

#include <array>
#include <utility>
#include <vector>

#include "posrep/qtorus.hpp"
#include "posrep/words.hpp"

namespace posrep {

// Closed forms written against the published displays, independent of the
// transport engine. Variables that do not exist in the word are dropped.

struct ClosedForm {
  Word word;
  Operator E, F, K;
};

/// E_i, F_i, K_i of type A_n on the standard word s_n..s_1 s_n..s_2 ... s_n.
/// K_i = e^{-pi b (sum_k (2u_i^k - u_{i-1}^k) - sum_{k<=i+1} u_{i+1}^k + 2 lambda_i)}.
ClosedForm closed_form_An(const DatumPtr& datum, int label);

/// E_i of type D_n on the symmetric good word 012 012 320123 ...
Operator closed_form_Dn(const DatumPtr& datum, int label);

/// Integer monomial maps between the Lusztig coordinates x_i^k of the
/// standard A_n word and the initial minors X_{i,j} (1 <= i < j <= n+1):
///   x_i^j = X_{j,i+1} X_{j-1,i-1} / (X_{j,i} X_{j-1,i}),
///   X_{i,i+j} = prod_{m=1}^{j} prod_{l=1}^{i} x_{m+l-1}^{l},
/// with X_{i,i} = X_{i,0} = X_{0,j} = 1.
struct ClusterCoordinateMap {
  int n = 0;
  std::vector<LusztigLabel> lusztig;       // x coordinates, column order
  std::vector<std::pair<int, int>> minors; // (i, j) of X_{i,j}, column order
  Eigen::MatrixXi x_of_X;                  // row per x: exponents of the X's
  Eigen::MatrixXi X_of_x;                  // row per X: exponents of the x's

  /// Throws std::out_of_range outside the triangular ranges.
  int x_index(int root, int occurrence) const;
  int X_index(int i, int j) const;
};

ClusterCoordinateMap cluster_maps(int n);

/// Evaluates the monomial maps at positive rationals.
std::vector<Rational> minors_from_lusztig(const ClusterCoordinateMap& map, const std::vector<Rational>& x);
std::vector<Rational> lusztig_from_minors(const ClusterCoordinateMap& map, const std::vector<Rational>& X);

/// (a, b, c) on s_i s_j s_i to (bc/(a+c), a+c, ab/(a+c)) on s_j s_i s_j.
/// Throws std::domain_error unless a, b, c > 0.
std::array<Rational, 3> classical_flip(const Rational& a, const Rational& b, const Rational& c);

/// Coordinates of x_{i_1}(a_1)...x_{i_m}(a_m) after each move of `path`:
/// braid moves flip, commutation moves swap.
std::vector<Rational> classical_transport(const Word& word, std::vector<Rational> coords,
                                          const std::vector<BraidMove>& path);

/// x_{i_1}(a_1)...x_{i_m}(a_m) in SL(n+1) for type A_n, x_i(a) = 1 + a E_{i,i+1}.
MatrixQ unipotent_product(const Word& word, const std::vector<Rational>& coords);

/// Determinant of rows 1..i and columns j-i+1..j of an upper unipotent matrix.
Rational initial_minor(const MatrixQ& m, int i, int j);

}  // namespace posrep
