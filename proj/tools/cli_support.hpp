#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "posrep/repbuild.hpp"

namespace posrep::cli {

inline constexpr std::size_t kDefaultMaxTerms = 5000000;

/// POSREP_MAX_TERMS, or the default when unset or unparsable.
inline std::size_t max_terms_from_env() {
  const char* raw = std::getenv("POSREP_MAX_TERMS");
  if (!raw || !*raw) return kDefaultMaxTerms;
  try {
    return static_cast<std::size_t>(std::stoull(raw));
  } catch (const std::exception&) {
    return kDefaultMaxTerms;
  }
}

inline DatumPtr datum_of(const std::string& type, int rank) { return make_datum(parse_family(type), rank); }

/// "good", "end:i", "start:i" or an explicit letter list.
inline Word resolve_word(const DatumPtr& datum, const std::string& spec) {
  if (spec == "good") return good_word(datum);
  if (spec.rfind("end:", 0) == 0) return word_ending_in(datum, std::stoi(spec.substr(4))).word;
  if (spec.rfind("start:", 0) == 0) return word_starting_with(datum, std::stoi(spec.substr(6))).word;
  Word w(datum, parse_letters(spec));
  if (!is_longest_word(w)) throw std::invalid_argument("word " + w.str() + " is not a reduced word of w0");
  return w;
}

/// "E3" -> ('E', 3).
inline std::pair<char, int> parse_generator(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'E' && spec[0] != 'F' && spec[0] != 'K'))
    throw std::invalid_argument("generator must look like E3, F1 or K0, got '" + spec + "'");
  std::size_t used = 0;
  const int label = std::stoi(spec.substr(1), &used);
  if (used + 1 != spec.size()) throw std::invalid_argument("bad generator '" + spec + "'");
  return {spec[0], label};
}

inline const Operator& pick(const Representation& rep, std::pair<char, int> gen) {
  if (!rep.datum->has_label(gen.second))
    throw std::invalid_argument("no node " + std::to_string(gen.second) + " in " + rep.datum->name());
  switch (gen.first) {
    case 'E': return rep.E(gen.second);
    case 'F': return rep.F(gen.second);
    default: return rep.K(gen.second);
  }
}

}  // namespace posrep::cli
