#pragma once

#include <string>

#include "json.hpp"
#include "posrep/qtorus.hpp"
#include "posrep/repbuild.hpp"
#include "posrep/words.hpp"

namespace posrep {

using json = nlohmann::ordered_json;

/// "-u1.1 - 2L1"; positions named by Lusztig label, lambda slots by node.
std::string render_linear_form(const LinearForm& form, const Word& word);
/// "-p3.1", "2p3.1 - p2.1"; "0" for the zero shift.
std::string render_shift(const Eigen::VectorXi& shift, const Word& word);
/// "[u3.1] e(-p3.1)", with a parenthesised scalar in front unless it is 1.
std::string render_bracket(const BracketTerm& term, const Word& word);
/// "exp(-2u1.1 - 2L1)", with a coefficient in front unless it is 1.
std::string render_monomial(const Monomial& m, const Word& word);
/// Brackets joined by " + " when the operator is in bracket form,
/// otherwise its monomials.
std::string render_operator(const Operator& op, const Word& word);

json laurent_to_json(const Laurent& l);
Laurent laurent_from_json(const json& j);
json monomial_to_json(const Monomial& m, const Word& word);
Monomial monomial_from_json(const json& j, const Word& word);
json bracket_to_json(const BracketTerm& t, const Word& word);
BracketTerm bracket_from_json(const json& j, const Word& word);

/// {"word": [...], "type": "A3", "monomials": [...], "brackets": [...]};
/// "brackets" is present only for operators in bracket form.
json operator_to_json(const Operator& op, const Word& word);
/// Reads "monomials" against `word`.
Operator operator_from_json(const json& j, const Word& word);

json representation_to_json(const Representation& rep);

}  // namespace posrep
