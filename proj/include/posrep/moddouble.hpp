#pragma once

#include <map>
#include <string>
#include <vector>

#include "posrep/io.hpp"
#include "posrep/repbuild.hpp"
#include "posrep/verify.hpp"

namespace posrep {

/// Modified generators in the rescaled convention:
///   e'_i = q^{n_i} e_i K_i^{n_i},  f'_i = q^{1-n_i} f_i K_i^{n_i-1},  K'_i = K_i^{2 eps_i}
/// with eps_i = 2 n_i - 1, and fq_i = q^{2 eps_i}.
struct ModifiedRep {
  Representation base;
  std::map<int, int> weight;             // n_i by node label
  std::map<int, Generators> generators;  // E, F, K hold e'_i, f'_i, K'_i

  int sign(int label) const { return 2 * weight.at(label) - 1; }
  /// fq_i as a Laurent monomial.
  Laurent fq(int label) const { return Laurent::q_power(2 * sign(label)); }
  const Operator& E(int label) const { return generators.at(label).E; }
  const Operator& F(int label) const { return generators.at(label).F; }
  const Operator& K(int label) const { return generators.at(label).K; }
};

/// Weights n_i from the datum's bipartition, or its complement when `flipped`.
ModifiedRep build_modified(const Representation& rep, bool flipped = false);

/// [A,B]_t = AB - t^{-1} BA.
Operator fq_commutator(const Operator& a, const Operator& b, const Laurent& t);

/// [[x_j, x_i]_t, x_i].
Operator modified_serre_residue(const Operator& xj, const Operator& xi, const Laurent& t);

/// K'_i e'_j = fq_i^{a_ij} e'_j K'_i, K'_i f'_j = fq_i^{-a_ij} f'_j K'_i,
/// e'_i f'_j = f'_j e'_i (i != j), [e'_i, f'_i]_{fq_i} = (1 - fq_i^{-1})(1 - K'_i),
/// commutation of non-adjacent e', f', and for adjacent i, j the Serre
/// relations [[e'_j, e'_i]_{fq_j}, e'_i] = 0 and [[f'_j, f'_i]_{fq_i}, f'_i] = 0.
RelationReport check_modified_relations(const ModifiedRep& mrep);

/// Report with {check, status, witnesses} plus check-specific fields.
struct Certificate {
  std::string check;
  bool pass = true;
  json witnesses = json::array();
  json data = json::object();
  json to_json() const;
};

/// Labelled monomials of every generator, e.g. ("E1", m).
struct TaggedMonomial {
  std::string generator;
  Monomial monomial;
};
std::vector<TaggedMonomial> generator_monomials(const std::map<int, Generators>& generators);

/// All pairwise commutation exponents between monomials of all generators
/// are even. On failure the first odd pair is the witness.
Certificate cross_parity_certificate(const ModifiedRep& mrep);
/// The same scan over the unmodified generators of a representation.
Certificate cross_parity_certificate(const Representation& rep);

/// Parity of the symplectic Gram matrix on the lattice spanned by all
/// generator exponents, and its rank against 2N.
Certificate qtori_certificate(const ModifiedRep& mrep);
Certificate qtori_certificate(const Representation& rep);

/// For each column b^k of A^{-1}, the fractional product prod_j (K_j^2)^{b^k_j}
/// (that is K'_j^{eps_j b^k_j}) has even pairing with every monomial of every
/// e'_i, f'_i, so its b^{-1} copy commutes strongly with them. The control
/// combination b^k / 2 must produce an odd or fractional pairing.
Certificate commutant_check(const ModifiedRep& mrep);

/// s_i(lambda)_j = lambda_j - a_ij lambda_i on a tuple of values by slot.
VectorQ weyl_reflect_lambda(const CartanDatum& datum, const VectorQ& lambda, int label);

struct DominantResult {
  VectorQ lambda;
  std::vector<int> reflections;  // applied in order
};
/// Reflects by any s_i with lambda_i < 0 until every entry is >= 0.
DominantResult dominant_representative(const CartanDatum& datum, const VectorQ& lambda);

/// Substitutes lambda_j -> s_i(lambda)_j in every generator.
Representation reflect_lambda(const Representation& rep, int label);

/// Builds the representation on a word starting with s_i and compares it with
/// its lambda-reflected copy: F_i brackets flip -2 lambda_i to +2 lambda_i,
/// adjacent F_j brackets gain -2 lambda_i, other brackets and all E are
/// unchanged, K_i and adjacent K_j change consistently. Also checks that only
/// F_i moves the leftmost coordinate and that a unique E bracket involves it.
Certificate verify_weyl_pattern(const DatumPtr& datum, int label);

/// u at `position` replaced by u - mu . lambda.
struct LambdaShift {
  int position = 0;
  VectorQ mu;
  int beta = 0;
};

struct Normalization {
  std::vector<LambdaShift> substitution;
  Representation rep;
};

Operator shift_u(const Operator& op, int position, const VectorQ& mu);

/// Left to right, reads the F weight with shift e(p_k), lambda part lambda',
/// sets beta_k = beta(lambda') - 1 and substitutes u_k -> u_k - beta_k/(beta_k+1) lambda'.
/// Throws std::domain_error when some beta_k is not a positive integer.
Normalization normalize_lambda(const Representation& rep);

/// K_i lambda-free, every beta_k a positive integer, and the lambda parts of
/// all brackets drawn from at most rank distinct forms up to sign.
Certificate normalization_certificate(const Normalization& n);

}  // namespace posrep
