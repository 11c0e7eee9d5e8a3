#include "posrep/verify.hpp"

#include <algorithm>
#include <numeric>

namespace posrep {

namespace {

const Laurent kTwoQ = Laurent::q_power(1) + Laurent::q_power(-1);

void record(RelationReport& report, const std::string& name, const Operator& residue, const Word& word) {
  RelationResult r;
  r.relation = name;
  r.pass = residue.is_zero();
  if (!r.pass) r.residue = render_operator(residue, word);
  report.results.push_back(std::move(r));
}

std::string gen(const char* g, int label) { return g + std::to_string(label); }

}  // namespace

bool RelationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.pass; });
}

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const RelationResult& r) { return !r.pass; }));
}

json RelationReport::to_json() const {
  json j;
  j["check"] = "relations";
  j["status"] = all_pass() ? "pass" : "fail";
  j["checked"] = results.size();
  json failed = json::array();
  for (const auto& r : results)
    if (!r.pass) failed.push_back({{"relation", r.relation}, {"residue", r.residue}});
  j["witnesses"] = std::move(failed);
  return j;
}

Operator serre_residue(const Operator& ei, const Operator& ej) {
  Operator eiej = ei * ej;
  Operator ei2 = ei * ei;
  return ei2 * ej - kTwoQ * (eiej * ei) + ej * ei2;
}

RelationReport check_relations(const Representation& rep) {
  RelationReport report;
  const CartanDatum& d = *rep.datum;
  const Word& w = rep.word;
  const Laurent q_minus = Laurent::q_power(1) - Laurent::q_power(-1);
  for (int i : d.labels()) {
    const auto& g = rep.generators.at(i);
    Operator Kinv = monomial_power(g.K, -1);
    record(report, "[" + gen("e", i) + "," + gen("f", i) + "] = (q - q^-1)(K" + std::to_string(i) + "^-1 - K" +
                       std::to_string(i) + ")",
           commutator(g.E, g.F) - q_minus * (Kinv - g.K), w);
    for (int j : d.labels()) {
      const auto& h = rep.generators.at(j);
      const int a = d.entry(i, j);
      const std::string ij = std::to_string(i) + "," + std::to_string(j);
      record(report, "K" + std::to_string(i) + " e" + std::to_string(j) + " = q^" + std::to_string(a) + " e K",
             q_commutator(g.K, h.E, Laurent::q_power(a)), w);
      record(report, "K" + std::to_string(i) + " f" + std::to_string(j) + " = q^" + std::to_string(-a) + " f K",
             q_commutator(g.K, h.F, Laurent::q_power(-a)), w);
      if (i == j) continue;
      record(report, "[e" + std::to_string(i) + ",f" + std::to_string(j) + "] = 0", commutator(g.E, h.F), w);
      if (i < j) record(report, "[K" + ij + "] = 0", commutator(g.K, h.K), w);
      if (a == 0 && i < j) {
        record(report, "[e" + ij + "] = 0", commutator(g.E, h.E), w);
        record(report, "[f" + ij + "] = 0", commutator(g.F, h.F), w);
      }
      if (a == -1) {
        record(report, "Serre e(" + ij + ")", serre_residue(g.E, h.E), w);
        record(report, "Serre f(" + ij + ")", serre_residue(g.F, h.F), w);
      }
    }
  }
  return report;
}

json ChainCertificate::to_json() const {
  json j;
  j["check"] = "q2_chain";
  j["status"] = ordered ? "pass" : "fail";
  j["all_even"] = all_even;
  j["order"] = order;
  json s = json::object();
  for (auto [v, n] : s_values) s[std::to_string(v)] = n;
  j["s_values"] = std::move(s);
  return j;
}

ChainCertificate q2_chain_certificate(const Operator& op) {
  ChainCertificate cert;
  const auto& t = op.terms();
  const std::size_t m = t.size();
  std::vector<int> wins(m, 0);
  std::vector<std::vector<int>> s(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const int v = commutation_exponent(t[a].exponent, t[b].exponent);
      s[a][b] = v;
      s[b][a] = -v;
      ++cert.s_values[v];
      if (v % 2 != 0) cert.all_even = false;
      if (v == 2) ++wins[a];
      if (v == -2) ++wins[b];
    }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return wins[x] > wins[y]; });
  bool ok = true;
  for (std::size_t a = 0; a < m && ok; ++a)
    for (std::size_t b = a + 1; b < m && ok; ++b) ok = s[order[a]][order[b]] == 2;
  cert.ordered = ok;
  if (ok) cert.order = std::move(order);
  return cert;
}

json PathReport::to_json() const {
  json j;
  j["check"] = "path_independence";
  j["status"] = pass ? "pass" : "fail";
  j["paths_compared"] = paths_compared;
  j["witnesses"] = mismatches;
  return j;
}

PathReport path_independence(const Word& from, const Word& to) {
  PathReport report;
  Representation base = build_rep(from);
  std::vector<std::vector<BraidMove>> paths;
  paths.push_back(braid_path(from, to));
  for (const auto& first : applicable_moves(from)) {
    Word mid = apply_move(from, first);
    std::vector<BraidMove> detour{first};
    for (const auto& m : braid_path(mid, to)) detour.push_back(m);
    if (detour != paths.front()) {
      paths.push_back(std::move(detour));
      break;
    }
  }
  std::vector<Representation> results;
  for (const auto& p : paths) results.push_back(transport(base, p));
  report.paths_compared = paths.size();
  auto mismatch = [&](const std::string& what) {
    report.pass = false;
    report.mismatches.push_back(what + " on " + to.str());
  };
  for (int i : from.datum().labels()) {
    const std::string s = std::to_string(i);
    for (std::size_t p = 1; p < results.size(); ++p) {
      if (results[p].E(i) != results[0].E(i)) mismatch("E" + s + " differs between paths");
      if (results[p].F(i) != results[0].F(i)) mismatch("F" + s + " differs between paths");
      if (results[p].K(i) != results[0].K(i)) mismatch("K" + s + " differs between paths");
    }
    if (results[0].F(i) != build_F(to, i)) mismatch("transported F" + s + " differs from direct build");
    if (results[0].K(i) != build_K(to, i)) mismatch("transported K" + s + " differs from direct build");
    if (results[0].E(i) != build_E(to, i)) mismatch("transported E" + s + " differs from direct build");
  }
  return report;
}

bool loop_is_identity(const Representation& rep, const std::vector<BraidMove>& loop) {
  Representation back = transport(rep, loop);
  if (back.word != rep.word) throw std::invalid_argument("loop_is_identity: path is not closed");
  for (const auto& [label, g] : rep.generators)
    if (back.E(label) != g.E || back.F(label) != g.F || back.K(label) != g.K) return false;
  return true;
}

}  // namespace posrep
