#pragma once

#include <map>
#include <string>
#include <vector>

#include "posrep/io.hpp"
#include "posrep/repbuild.hpp"

namespace posrep {

struct RelationResult {
  std::string relation;  // e.g. "[e1,f2] = 0"
  bool pass = false;
  std::string residue;   // rendered, empty on success
};

struct RelationReport {
  std::vector<RelationResult> results;

  bool all_pass() const;
  std::size_t failures() const;
  json to_json() const;
};

/// Rescaled relations: [e_i,f_i] = (q - q^-1)(K_i^-1 - K_i), [e_i,f_j] = 0,
/// K_i e_j = q^{a_ij} e_j K_i, K_i f_j = q^{-a_ij} f_j K_i, K_i K_j = K_j K_i,
/// [e_i,e_j] = [f_i,f_j] = 0 for non-adjacent i,j, and both Serre relations.
RelationReport check_relations(const Representation& rep);

/// e_i^2 e_j - [2]_q e_i e_j e_i + e_j e_i^2.
Operator serre_residue(const Operator& ei, const Operator& ej);

struct ChainCertificate {
  bool ordered = false;                // an order with every pair at s = +2 exists
  bool all_even = true;                // every pairwise s is even
  std::vector<std::size_t> order;      // monomial indices, when ordered
  std::map<int, std::size_t> s_values; // multiset of s(A_j, A_k) for j < k in canonical order
  json to_json() const;
};

/// Looks for a total order A_1..A_m of the monomials of `op` with
/// A_j A_k = q^2 A_k A_j for all j < k.
ChainCertificate q2_chain_certificate(const Operator& op);

struct PathReport {
  bool pass = true;
  std::size_t paths_compared = 0;
  std::vector<std::string> mismatches;
  json to_json() const;
};

/// Transports the representation built on `from` to `to` along braid_path
/// and along a detour through a neighbouring word, and compares both with
/// each other and with F, K built directly on `to` and E built on `to`.
PathReport path_independence(const Word& from, const Word& to);

/// Transports along `loop` (a closed path from `rep.word`) and checks that
/// every generator comes back unchanged.
bool loop_is_identity(const Representation& rep, const std::vector<BraidMove>& loop);

}  // namespace posrep
