#include "posrep/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace posrep {

Family parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "D" || text == "d") return Family::D;
  if (text == "E" || text == "e") return Family::E;
  throw std::invalid_argument("unsupported family '" + text + "' (expected A, D or E)");
}

char family_char(Family f) {
  switch (f) {
    case Family::A:
      return 'A';
    case Family::D:
      return 'D';
    case Family::E:
      return 'E';
  }
  return '?';
}

CartanDatum CartanDatum::build(Family family, int rank) {
  CartanDatum d;
  d.family_ = family;
  d.rank_ = rank;
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
      for (int i = 1; i <= rank; ++i) d.labels_.push_back(i);
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_n requires n >= 4");
      for (int i = 0; i < rank; ++i) d.labels_.push_back(i);
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, 2);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_n requires n in {6,7,8}");
      for (int i = 0; i < rank; ++i) d.labels_.push_back(i);
      for (int i = 1; i < rank - 1; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(0, 3);
      break;
  }
  d.cartan_ = 2 * Eigen::MatrixXi::Identity(rank, rank);
  for (auto [a, b] : edges) {
    d.cartan_(d.slot(a), d.slot(b)) = -1;
    d.cartan_(d.slot(b), d.slot(a)) = -1;
  }

  // 2-colouring by BFS from the smallest label, which gets weight 0.
  d.bipartition_.assign(static_cast<std::size_t>(rank), -1);
  std::deque<int> queue{0};
  d.bipartition_[0] = 0;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t = 0; t < rank; ++t) {
      if (d.cartan_(s, t) != -1) continue;
      if (d.bipartition_[static_cast<std::size_t>(t)] < 0) {
        d.bipartition_[static_cast<std::size_t>(t)] = 1 - d.bipartition_[static_cast<std::size_t>(s)];
        queue.push_back(t);
      }
    }
  }
  return d;
}

std::string CartanDatum::name() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

int CartanDatum::slot(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("node " + std::to_string(label) + " not in " + name());
  return static_cast<int>(it - labels_.begin());
}

bool CartanDatum::has_label(int label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<int> CartanDatum::neighbours(int label) const {
  std::vector<int> out;
  for (int l : labels_)
    if (adjacent(label, l)) out.push_back(l);
  return out;
}

CartanDatum CartanDatum::with_flipped_bipartition() const {
  CartanDatum d = *this;
  for (int& n : d.bipartition_) n = 1 - n;
  return d;
}

Eigen::MatrixXi reflection_matrix(const CartanDatum& datum, int label) {
  const int r = datum.rank();
  const int i = datum.slot(label);
  Eigen::MatrixXi s = Eigen::MatrixXi::Identity(r, r);
  s.row(i) -= datum.cartan().row(i);
  return s;
}

namespace {

bool is_positive(const Eigen::VectorXi& root) { return (root.array() >= 0).all(); }

struct LexLess {
  bool operator()(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  }
};

}  // namespace

std::vector<Eigen::VectorXi> positive_roots(const CartanDatum& datum) {
  const int r = datum.rank();
  std::vector<Eigen::MatrixXi> refl;
  for (int l : datum.labels()) refl.push_back(reflection_matrix(datum, l));
  std::set<Eigen::VectorXi, LexLess> seen;
  std::deque<Eigen::VectorXi> queue;
  for (int i = 0; i < r; ++i) {
    Eigen::VectorXi e = Eigen::VectorXi::Unit(r, i);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Eigen::VectorXi root = queue.front();
    queue.pop_front();
    for (const auto& s : refl) {
      Eigen::VectorXi image = s * root;
      if (is_positive(image) && seen.insert(image).second) queue.push_back(image);
    }
  }
  return {seen.begin(), seen.end()};
}

int positive_root_count(const CartanDatum& datum) { return static_cast<int>(positive_roots(datum).size()); }

MatrixQ langlands_b_vectors(const CartanDatum& datum) {
  auto inv = exact_inverse(to_rational(datum.cartan()));
  if (!inv) throw std::logic_error("Cartan matrix of finite type is singular");
  return *inv;
}

}  // namespace posrep
