#include <chrono>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "posrep/io.hpp"
#include "posrep/moddouble.hpp"
#include "posrep/verify.hpp"

using namespace posrep;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kGuard = 3 };

struct Target {
  std::string type;
  int rank = 0;
  void add(CLI::App* cmd) {
    cmd->add_option("type", type, "A, D or E")->required();
    cmd->add_option("rank", rank, "rank")->required();
  }
  DatumPtr datum() const { return cli::datum_of(type, rank); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Operator build_one(const Word& w, std::pair<char, int> gen, TransportStats* stats = nullptr) {
  if (!w.datum().has_label(gen.second))
    throw std::invalid_argument("no node " + std::to_string(gen.second) + " in " + w.datum().name());
  switch (gen.first) {
    case 'E': return build_E(w, gen.second, stats);
    case 'F': return build_F(w, gen.second);
    default: return build_K(w, gen.second);
  }
}

void print_operator(const Operator& op, const Word& w, const std::string& format) {
  if (format == "json")
    std::cout << operator_to_json(op, w).dump(2) << "\n";
  else
    std::cout << render_operator(op, w) << "\n";
}

json counts_row(const std::vector<std::size_t>& row) {
  json j = json::array();
  for (auto c : row) j.push_back(c);
  return j;
}

int cmd_tables(const DatumPtr& d, const std::string& format) {
  Word w = good_word(d);
  std::vector<std::size_t> e, f;
  TransportStats stats;
  const auto t0 = std::chrono::steady_clock::now();
  for (int i : d->labels()) {
    e.push_back(term_count(build_E(w, i, &stats)));
    f.push_back(term_count(build_F(w, i)));
  }
  const std::size_t te = std::accumulate(e.begin(), e.end(), std::size_t{0});
  const std::size_t tf = std::accumulate(f.begin(), f.end(), std::size_t{0});
  if (format == "json") {
    json j;
    j["type"] = d->name();
    j["word"] = w.letters();
    j["labels"] = d->labels();
    j["E"] = counts_row(e);
    j["E_total"] = te;
    j["F"] = counts_row(f);
    j["F_total"] = tf;
    j["max_abs_s"] = stats.max_abs_s;
    j["seconds"] = seconds_since(t0);
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << d->name() << " on " << w.str() << "\n";
  std::cout << "node ";
  for (int i : d->labels()) std::cout << " " << i;
  std::cout << "  total\nE    ";
  for (auto c : e) std::cout << " " << c;
  std::cout << "  " << te << "\nF    ";
  for (auto c : f) std::cout << " " << c;
  std::cout << "  " << tf << "\n";
  return kOk;
}

json badword_count(const BadWord& bad, std::size_t limit, bool& aborted) {
  TransportStats stats;
  stats.term_limit = limit;
  std::vector<TraceStep> trace;
  json j;
  j["type"] = bad.word.datum().name();
  j["word"] = bad.word.str();
  j["generator"] = "E" + std::to_string(bad.generator);
  j["description"] = bad.description;
  j["term_limit"] = limit;
  const auto t0 = std::chrono::steady_clock::now();
  aborted = false;
  try {
    Operator e = build_E(bad.word, bad.generator, &stats, &trace);
    j["status"] = "complete";
    j["bracket_terms"] = term_count(e);
    j["monomials"] = e.size();
  } catch (const TermLimitExceeded& ex) {
    aborted = true;
    j["status"] = "aborted";
    j["terms_at_abort"] = ex.terms;
    j["moves_completed"] = trace.size();
  }
  j["max_abs_s"] = stats.max_abs_s;
  j["max_intermediate_terms"] = stats.max_terms;
  j["seconds"] = seconds_since(t0);
  return j;
}

int cmd_badword(const DatumPtr& d, const std::string& prefix, int classes) {
  const std::size_t limit = cli::max_terms_from_env();
  bool aborted = false;
  if (classes <= 0) {
    BadWord bad = prefix.empty() ? bad_word(d) : bad_word_with_prefix(d, parse_letters(prefix));
    std::cout << badword_count(bad, limit, aborted).dump(2) << "\n";
    return aborted ? kGuard : kOk;
  }
  // one count per commutation class of the prefix w'
  const BadWord seed = bad_word(d);
  std::vector<int> wprime(seed.word.letters().begin(),
                          seed.word.letters().begin() + bad_word_prefix_length(d));
  if (!prefix.empty()) wprime = parse_letters(prefix);
  json out = json::array();
  bool any_aborted = false;
  for (const auto& cls : commutation_classes(*d, wprime, static_cast<std::size_t>(classes))) {
    json j = badword_count(bad_word_with_prefix(d, cls), limit, aborted);
    any_aborted = any_aborted || aborted;
    j["prefix"] = cls;
    j.erase("word");
    out.push_back(j);
    std::cout << out.back().dump() << "\n" << std::flush;
  }
  return any_aborted ? kGuard : kOk;
}

int cmd_verify(const DatumPtr& d, const std::string& spec, bool modified, bool flipped) {
  auto rep = build_rep(cli::resolve_word(d, spec));
  json j;
  j["type"] = d->name();
  j["word"] = rep.word.letters();
  bool pass = true;
  if (modified) {
    auto m = build_modified(rep, flipped);
    auto rel = check_modified_relations(m);
    auto parity = cross_parity_certificate(m);
    auto tori = qtori_certificate(m);
    j["modified_relations"] = rel.to_json();
    j["cross_parity"] = parity.to_json();
    j["qtori"] = tori.to_json();
    pass = rel.all_pass() && parity.pass && tori.pass;
  } else {
    auto rel = check_relations(rep);
    j["relations"] = rel.to_json();
    pass = rel.all_pass();
    json chains = json::object();
    for (const auto& [label, g] : rep.generators) {
      const std::string i = std::to_string(label);
      auto ce = q2_chain_certificate(g.E), cf = q2_chain_certificate(g.F);
      chains["E" + i] = ce.to_json();
      chains["F" + i] = cf.to_json();
      pass = pass && ce.all_even && cf.all_even;
    }
    j["q2_chains"] = std::move(chains);
  }
  j["status"] = pass ? "pass" : "fail";
  std::cout << j.dump(2) << "\n";
  return pass ? kOk : kCheckFailed;
}

int cmd_transport(const DatumPtr& d, const std::string& from, const std::string& to, const std::string& gen,
                  const std::string& format) {
  Word a = cli::resolve_word(d, from), b = cli::resolve_word(d, to);
  auto g = cli::parse_generator(gen);
  TransportStats stats;
  stats.term_limit = cli::max_terms_from_env();
  Operator op = build_one(a, g, &stats);
  auto path = braid_path(a, b);
  Operator moved = transport(op, a, path, &stats);
  if (format == "json") {
    json j;
    j["from"] = operator_to_json(op, a);
    j["to"] = operator_to_json(moved, b);
    j["moves"] = path.size();
    j["max_abs_s"] = stats.max_abs_s;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << render_operator(moved, b) << "\n";
  }
  return kOk;
}

int cmd_normalize(const DatumPtr& d, const std::string& spec) {
  auto norm = normalize_lambda(build_rep(cli::resolve_word(d, spec)));
  auto cert = normalization_certificate(norm);
  const auto labels = lusztig_labels(norm.rep.word);
  json j = cert.to_json();
  json subs = json::array();
  for (const auto& s : norm.substitution) {
    json mu = json::object();
    for (Eigen::Index k = 0; k < s.mu.size(); ++k)
      if (s.mu[k] != Rational(0)) mu["L" + std::to_string(d->label(static_cast<int>(k)))] = s.mu[k].str();
    subs.push_back({{"position", label_key(labels[static_cast<std::size_t>(s.position)])}, {"beta", s.beta}, {"mu", mu}});
  }
  j["substitution"] = std::move(subs);
  json ks = json::object();
  for (int i : d->labels()) ks["K" + std::to_string(i)] = render_operator(norm.rep.K(i), norm.rep.word);
  j["K"] = std::move(ks);
  std::cout << j.dump(2) << "\n";
  return cert.pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positive representations of split real quantum groups: construction and checks"};
  app.require_subcommand(1);
  std::string catalog;
  app.add_option("--catalog", catalog, "word catalog overriding the built-in good words")->check(CLI::ExistingFile);

  std::string word = "good", gen, format = "text", from, to, prefix;
  bool badword = false, modified = false, flipped = false;
  int classes = 0;

  Target construct_t, tables_t, verify_t, transport_t, commutant_t, normalize_t, classical_t;

  auto* construct = app.add_subcommand("construct", "print one generator");
  construct_t.add(construct);
  construct->add_option("--word", word, "good | end:i | start:i | i1,i2,...");
  construct->add_option("--gen", gen, "E<i>, F<i> or K<i>")->required();
  construct->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tables = app.add_subcommand("tables", "E and F term counts on the good word");
  tables_t.add(tables);
  tables->add_flag("--badword", badword, "count the blown-up generator on the bad word");
  tables->add_option("--prefix", prefix, "reduced word replacing w' in the bad word");
  tables->add_option("--classes", classes, "with --badword: count over the first N commutation classes of w'");
  tables->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "relation suite and certificates");
  verify_t.add(verify);
  verify->add_option("--word", word);
  verify->add_flag("--modified", modified, "check the modified generators instead");
  verify->add_flag("--flipped", flipped, "use the complementary bipartition");

  auto* transport_cmd = app.add_subcommand("transport", "transport one generator between words");
  transport_t.add(transport_cmd);
  transport_cmd->add_option("--from", from)->required();
  transport_cmd->add_option("--to", to)->required();
  transport_cmd->add_option("--gen", gen)->required();
  transport_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* commutant = app.add_subcommand("commutant", "fractional K' combinations commuting with the modified generators");
  commutant_t.add(commutant);
  commutant->add_flag("--flipped", flipped);

  auto* normalize = app.add_subcommand("normalize-lambda", "absorb lambda into the u coordinates");
  normalize_t.add(normalize);
  normalize->add_option("--word", word);

  auto* classical = app.add_subcommand("classical", "classical reading of one generator");
  classical_t.add(classical);
  classical->add_option("--word", word);
  classical->add_option("--gen", gen)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (!catalog.empty()) set_catalog(load_catalog(catalog));
    if (construct->parsed()) {
      Word w = cli::resolve_word(construct_t.datum(), word);
      print_operator(build_one(w, cli::parse_generator(gen)), w, format);
      return kOk;
    }
    if (tables->parsed()) {
      if (badword) return cmd_badword(tables_t.datum(), prefix, classes);
      return cmd_tables(tables_t.datum(), format);
    }
    if (verify->parsed()) return cmd_verify(verify_t.datum(), word, modified, flipped);
    if (transport_cmd->parsed()) return cmd_transport(transport_t.datum(), from, to, gen, format);
    if (commutant->parsed()) {
      auto cert = commutant_check(build_modified(build_rep(good_word(commutant_t.datum())), flipped));
      std::cout << cert.to_json().dump(2) << "\n";
      return cert.pass ? kOk : kCheckFailed;
    }
    if (normalize->parsed()) return cmd_normalize(normalize_t.datum(), word);
    if (classical->parsed()) {
      Word w = cli::resolve_word(classical_t.datum(), word);
      std::cout << classical_render(build_one(w, cli::parse_generator(gen)), w) << "\n";
      return kOk;
    }
  } catch (const TermLimitExceeded& e) {
    std::cerr << "aborted: " << e.what() << " (" << e.terms << " terms; raise POSREP_MAX_TERMS)\n";
    return kGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
