#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "posrep/linalg.hpp"

namespace posrep {

enum class Family { A, D, E };

Family parse_family(const std::string& text);
char family_char(Family f);

/// Simply-laced Cartan datum with the node labels of the standard diagrams:
/// A_n uses 1..n along the chain; D_n uses the chain 1..n-1 with node 0
/// attached to 2; E_n uses the chain 1..n-1 with node 0 attached to 3.
///
/// Matrices and vectors are indexed by slot; `slot(label)` converts.
class CartanDatum {
 public:
  /// Throws std::invalid_argument outside A_n (n>=1), D_n (n>=4), E_6..E_8.
  static CartanDatum build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;

  const std::vector<int>& labels() const { return labels_; }
  int label(int slot) const { return labels_[static_cast<std::size_t>(slot)]; }
  int slot(int label) const;
  bool has_label(int label) const;

  const Eigen::MatrixXi& cartan() const { return cartan_; }
  int entry(int label_i, int label_j) const { return cartan_(slot(label_i), slot(label_j)); }
  bool adjacent(int label_i, int label_j) const { return label_i != label_j && entry(label_i, label_j) == -1; }
  std::vector<int> neighbours(int label) const;

  /// Weight n_i in {0,1} of each slot; a proper 2-colouring of the diagram.
  const std::vector<int>& bipartition() const { return bipartition_; }
  int parity(int label) const { return bipartition_[static_cast<std::size_t>(slot(label))]; }
  /// Copy with every n_i replaced by 1 - n_i.
  CartanDatum with_flipped_bipartition() const;

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<int> labels_;
  Eigen::MatrixXi cartan_;
  std::vector<int> bipartition_;
};

/// Simple reflection s_i acting on root coordinates: s_i(a_j) = a_j - a_ij a_i.
Eigen::MatrixXi reflection_matrix(const CartanDatum& datum, int label);

/// All positive roots in simple-root coordinates, by closure of the simple
/// roots under simple reflections.
std::vector<Eigen::VectorXi> positive_roots(const CartanDatum& datum);

/// l(w_0), the number of positive roots.
int positive_root_count(const CartanDatum& datum);

/// Columns b^k of the inverse Cartan matrix, so that A b^k = e_k.
MatrixQ langlands_b_vectors(const CartanDatum& datum);

}  // namespace posrep
