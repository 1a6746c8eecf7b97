#include "kostant/report.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

namespace kostant {

using nlohmann::json;

namespace {

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

json one_based(const std::vector<int>& v) {
  json arr = json::array();
  for (int x : v) arr.push_back(x + 1);
  return arr;
}

}  // namespace

json game_graph_json(const Game& g, const GameGraph& gg) {
  json j;
  j["type"] = g.diagram.type.name() + (g.diagram.dualized ? " (coroots)" : "");
  j["marked_vertex"] = g.marking ? json(g.marking->vertex + 1) : json(nullptr);
  j["arrows"] = g.marking ? json(g.marking->arrows) : json(nullptr);
  j["nodes"] = json::array();
  for (const auto& node : gg.nodes) j["nodes"].push_back(node);
  j["edges"] = json::array();
  for (const auto& e : gg.edges)
    j["edges"].push_back({{"from", e.from}, {"fired", e.fired + 1}, {"to", e.to}});
  j["terminals"] = gg.terminals;
  return j;
}

std::string game_graph_dot(const Game& g, const GameGraph& gg) {
  std::ostringstream out;
  out << "digraph kostant_game {\n";
  for (std::size_t i = 0; i < gg.nodes.size(); ++i)
    out << "  n" << i << " [label=\"" << vec_str(gg.nodes[i]) << "\"];\n";
  for (const auto& e : gg.edges)
    out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.fired + 1 << "\"];\n";
  out << "}\n";
  (void)g;
  return out.str();
}

json coset_family_json(const CartanData& d, const CosetFamily& fam, bool with_words) {
  json j;
  j["type"] = d.type.name();
  j["j"] = fam.excluded + 1;
  j["size"] = fam.words.size();
  j["longest_word"] = one_based(fam.words[fam.longest]);
  if (with_words) {
    j["words"] = json::array();
    for (const auto& w : fam.words) j["words"].push_back(one_based(w));
  }
  return j;
}

json coroot_string_json(const CartanData& d, const ParabolicSubset& p, const CorootString& s,
                        const StringCertificate& cert) {
  json j;
  j["type"] = d.type.name();
  j["S_P"] = one_based(p.members);
  j["beta"] = s.beta + 1;
  j["n_beta"] = cert.n_beta;
  j["string"] = json::array();
  for (const auto& e : s.elements) j["string"].push_back(e);
  j["good"] = cert.good;
  j["maximal"] = cert.maximal;
  return j;
}

CaseResult verify_case(const CartanData& d, const ParabolicSubset& p) {
  CaseResult res;
  res.type = d.type;
  res.parabolic = p.members;

  BoxReport box = verify_vanishing_box(d, p);
  auto certs = certify_linear_factors(d, p);
  Inequalities q = inequalities(d, p);
  C1Data c = c1(d, p);

  json j;
  j["type"] = d.type.name();
  j["S_P"] = one_based(p.members);
  j["b2"] = c.b2;
  j["dim"] = c.dim;
  json nb;
  for (auto [beta, n_beta] : c.n_beta) nb[std::to_string(beta + 1)] = n_beta;
  j["n_beta"] = nb;
  j["index_k0"] = c.k0;
  j["box_points_checked"] = box.points_checked;
  j["box_all_zero"] = box.all_zero;
  j["value_at_minus_c1"] = box.value_at_minus_c1.str();
  j["pasquier"] = {{"lhs", q.pasquier_lhs}, {"rhs", q.dim}, {"ok", q.pasquier_ok}};
  j["mukai"] = {{"lhs", q.mukai_lhs}, {"rhs", q.dim}, {"ok", q.mukai_ok}};
  j["factor_certificates"] = json::array();
  for (const auto& cert : certs)
    j["factor_certificates"].push_back({{"beta", cert.beta + 1},
                                        {"ok", cert.ok},
                                        {"factors", cert.string_elements.size()}});
  res.report = std::move(j);

  std::string where = d.type.name() + " S_P=" + vec_str(p.members);
  if (!box.all_zero)
    res.failures.push_back(where + ": nonzero box value at ntilde=" + vec_str(box.witnesses[0]));
  if (!box.c1_value_ok)
    res.failures.push_back(where + ": H(-c1) = " + box.value_at_minus_c1.str() +
                           " != (-1)^" + std::to_string(c.dim));
  for (const auto& cert : certs)
    if (!cert.ok)
      res.failures.push_back(where + ": factor certificate for beta=" +
                             std::to_string(cert.beta + 1) + " failed: " + cert.error);
  if (!q.pasquier_ok) res.failures.push_back(where + ": Pasquier inequality violated");
  if (!q.mukai_ok) res.failures.push_back(where + ": Mukai inequality violated");
  return res;
}

SurveyReport run_survey(const SurveyOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    LieType type;
    ParabolicSubset p;
  };
  std::vector<Case> cases;
  for (LieType t : all_types(options.max_rank)) {
    // Every proper subset of the vertices, the empty one included.
    for (unsigned mask = 0; mask + 1 < (1u << t.rank); ++mask) {
      ParabolicSubset p;
      for (int v = 0; v < t.rank; ++v)
        if (mask & (1u << v)) p.members.push_back(v);
      cases.push_back({t, std::move(p)});
    }
  }

  SurveyReport report;
  report.cases.resize(cases.size());
  int jobs = options.jobs;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      report.cases[i] = verify_case(build(cases[i].type), cases[i].p);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  report.total_cases = static_cast<long>(cases.size());
  for (const auto& cr : report.cases) report.total_failures += static_cast<long>(cr.failures.size());
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

json survey_json(const SurveyReport& report) {
  json j;
  j["cases"] = json::array();
  json failures = json::array();
  for (const auto& cr : report.cases) {
    j["cases"].push_back(cr.report);
    for (const auto& f : cr.failures) failures.push_back(f);
  }
  j["summary"] = {{"cases", report.total_cases},
                  {"failures", failures},
                  {"failure_count", report.total_failures},
                  {"wall_time", report.wall_time_seconds}};
  return j;
}

}  // namespace kostant
