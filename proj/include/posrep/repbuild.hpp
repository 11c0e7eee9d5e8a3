#pragma once

#include <map>
#include <string>
#include <vector>

#include "posrep/qtorus.hpp"
#include "posrep/transport.hpp"
#include "posrep/words.hpp"

namespace posrep {

enum class LambdaMode { Formal, Normalized };

struct Generators {
  Operator E, F, K;
};

/// Rescaled generators e_i, f_i, K_i acting on the coordinates of one word.
/// Lambda slots are indexed by datum slot.
struct Representation {
  DatumPtr datum;
  Word word;
  LambdaMode mode = LambdaMode::Formal;
  std::map<int, Generators> generators;  // by node label

  int positions() const { return word.length(); }
  int lambda_slots() const { return datum->rank(); }
  const Operator& E(int label) const { return generators.at(label).E; }
  const Operator& F(int label) const { return generators.at(label).F; }
  const Operator& K(int label) const { return generators.at(label).K; }
};

/// [u_N]e(-p_N) for a word ending in `label`.
Operator build_E_rightmost(const Word& word, int label);

/// sum_k [u_i^k - sum_{l>=k} (2u_i^l - sum of adjacent u between x_i^{l+1}
/// and x_i^l) - 2 lambda_i] e(p_i^k); the l = n segment runs to the left end.
Operator build_F(const Word& word, int label);

/// e^{-pi b(sum_k a_{i,r(k)} u_k + 2 lambda_i)}.
Operator build_K(const Word& word, int label);

/// F and K directly on `word`; each E_i built on a word ending in i and
/// transported back to `word`.
Representation build_rep(const Word& word, TransportStats* stats = nullptr);

/// Transports every generator along `path` starting at rep.word.
Representation transport(const Representation& rep, const std::vector<BraidMove>& path,
                         TransportStats* stats = nullptr);

/// E_i alone, built and transported as in build_rep.
Operator build_E(const Word& word, int label, TransportStats* stats = nullptr,
                 std::vector<TraceStep>* trace = nullptr);

/// Each bracket s[L]e(P) read classically as s(1) (1/2 - i L) f(u - i P).
std::string classical_render(const Operator& op, const Word& word);

}  // namespace posrep
