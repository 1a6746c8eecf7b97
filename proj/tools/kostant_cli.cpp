#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "kostant/coroot_strings.hpp"
#include "kostant/hilbert_index.hpp"
#include "kostant/kostant_game.hpp"
#include "kostant/report.hpp"
#include "kostant/root_system.hpp"
#include "kostant/weyl_words.hpp"

using nlohmann::json;
using namespace kostant;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

std::optional<CartanData> parse_type(const std::string& type_str, bool dualize = false) {
  auto t = LieType::parse(type_str);
  if (!t) return std::nullopt;
  CartanData d = build(*t);
  return dualize ? dual(d) : d;
}

std::string chips_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kostant game, coroot strings and flag-variety Hilbert polynomials"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  std::string type_str, parabolic_str, dot_path;
  bool dualize = false, modified = false, with_words = false;
  int vertex = 0, arrows = 1, start = 0, beta = 0;
  IntVec eval_at;
  int max_rank = 4, jobs = 0;

  auto* cmd_roots = app.add_subcommand("roots", "Positive roots with heights");
  cmd_roots->add_option("type", type_str)->required();
  cmd_roots->add_flag("--dual", dualize, "Use the coroot diagram");

  auto* cmd_game = app.add_subcommand("game", "Play the (modified) Kostant game");
  cmd_game->add_option("type", type_str)->required();
  cmd_game->add_flag("--dual", dualize, "Play on the coroot diagram");
  cmd_game->add_flag("--modified", modified, "Modified game (requires --vertex)");
  cmd_game->add_option("--vertex", vertex, "Marked vertex (1-based)");
  cmd_game->add_option("--arrows", arrows, "Arrows into the marked vertex")->default_val(1);
  cmd_game->add_option("--start", start, "Standard game: start with one chip here (1-based)");
  cmd_game->add_option("--dot", dot_path, "Write the full game graph as DOT");

  auto* cmd_coset = app.add_subcommand("coset", "Minimal coset representatives W^j");
  cmd_coset->add_option("type", type_str)->required();
  cmd_coset->add_option("--vertex", vertex, "Excluded vertex j (1-based)")->required();
  cmd_coset->add_flag("--words", with_words, "Include every reduced word");

  auto* cmd_string = app.add_subcommand("string", "Maximal good string of coroots");
  cmd_string->add_option("type", type_str)->required();
  cmd_string->add_option("--parabolic", parabolic_str, "S_P, 1-based comma list");
  cmd_string->add_option("--beta", beta, "Vertex beta outside S_P (1-based)")->required();

  auto* cmd_hilbert = app.add_subcommand("hilbert", "Factored Hilbert polynomial of G/P");
  cmd_hilbert->add_option("type", type_str)->required();
  cmd_hilbert->add_option("--parabolic", parabolic_str, "S_P, 1-based comma list");
  cmd_hilbert->add_option("--eval", eval_at, "Evaluate at these k_beta (variable order)");

  auto* cmd_verify = app.add_subcommand("verify", "Vanishing box + factor certificates + inequalities");
  cmd_verify->add_option("type", type_str)->required();
  cmd_verify->add_option("--parabolic", parabolic_str, "S_P, 1-based comma list");

  auto* cmd_survey = app.add_subcommand("survey", "Verify every type/parabolic up to a rank");
  cmd_survey->add_option("--max-rank", max_rank, "Largest rank to survey")->default_val(4);
  cmd_survey->add_option("--jobs", jobs, "Worker count (0 = hardware)")->default_val(0);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_roots) {
      auto d = parse_type(type_str, dualize);
      if (!d) return usage_error("unknown type '" + type_str + "'");
      auto roots = positive_roots(*d);
      if (format == "json") {
        json j{{"type", d->type.name()}, {"dual", dualize}, {"count", roots.size()}};
        j["roots"] = json::array();
        for (const auto& r : roots) j["roots"].push_back({{"coeffs", r}, {"height", height(r)}});
        emit(j, format);
      } else {
        for (const auto& r : roots) {
          if (format == "csv") {
            for (int c : r) std::cout << c << ",";
            std::cout << height(r) << "\n";
          } else {
            std::cout << chips_str(r) << " ht=" << height(r) << "\n";
          }
        }
      }
      return kExitOk;
    }

    if (*cmd_game) {
      auto d = parse_type(type_str, dualize);
      if (!d) return usage_error("unknown type '" + type_str + "'");
      if (modified && (vertex < 1 || vertex > d->n)) return usage_error("--modified needs a valid --vertex");
      if (!modified && (start < 1 || start > d->n)) return usage_error("standard game needs a valid --start");
      Game g{*d, std::nullopt};
      IntVec init(d->n, 0);
      if (modified) {
        g = modified_game(*d, vertex - 1, arrows);
      } else {
        init[start - 1] = 1;
      }
      PlayResult r = play(g, init);
      if (!dot_path.empty()) {
        GameGraph gg = game_graph(g, init);
        std::ofstream out(dot_path);
        out << game_graph_dot(g, gg);
      }
      if (format == "json") {
        GameGraph gg = game_graph(g, init);
        json j = game_graph_json(g, gg);
        j["terminal"] = r.terminal;
        json mv = json::array();
        for (int m : r.moves) mv.push_back(m + 1);
        j["moves"] = mv;
        emit(j, format);
      } else {
        std::cout << "terminal " << chips_str(r.terminal) << " height "
                  << game_height(g, r.terminal) << "\n";
      }
      return kExitOk;
    }

    if (*cmd_coset) {
      auto d = parse_type(type_str);
      if (!d) return usage_error("unknown type '" + type_str + "'");
      if (vertex < 1 || vertex > d->n) return usage_error("--vertex out of range");
      CosetFamily fam = coset_reps(*d, vertex - 1);
      json j = coset_family_json(*d, fam, with_words);
      if (format == "text")
        std::cout << "|W^" << vertex << "| = " << fam.words.size() << ", longest word length "
                  << fam.words[fam.longest].size() << "\n";
      else
        emit(j, format);
      return kExitOk;
    }

    if (*cmd_string || *cmd_hilbert || *cmd_verify) {
      auto d = parse_type(type_str);
      if (!d) return usage_error("unknown type '" + type_str + "'");
      auto p = parse_parabolic(parabolic_str, d->n);
      if (!p) return usage_error("bad --parabolic '" + parabolic_str + "'");
      if (static_cast<int>(p->members.size()) == d->n)
        return usage_error("S_P = S makes G/P a point");

      if (*cmd_string) {
        if (beta < 1 || beta > d->n || p->contains(beta - 1))
          return usage_error("--beta must name a vertex outside S_P");
        CorootString s = maximal_good_string(*d, *p, beta - 1);
        StringCertificate cert = certify(*d, *p, s);
        json j = coroot_string_json(*d, *p, s, cert);
        if (format == "text") {
          for (const auto& e : s.elements) std::cout << chips_str(e) << " ht=" << height(e) << "\n";
          std::cout << "good=" << cert.good << " maximal=" << cert.maximal
                    << " n_beta=" << cert.n_beta << "\n";
        } else {
          emit(j, format);
        }
        return (cert.good && cert.maximal) ? kExitOk : kExitFalsified;
      }

      if (*cmd_hilbert) {
        HilbertPoly h = hilbert(*d, *p);
        if (!eval_at.empty()) {
          if (eval_at.size() != h.variables.size())
            return usage_error("--eval needs one value per variable");
          IntVec k(d->n, 0);
          for (std::size_t i = 0; i < h.variables.size(); ++i) k[h.variables[i]] = eval_at[i];
          std::cout << evaluate(h, k) << "\n";
          return kExitOk;
        }
        json j{{"type", d->type.name()}, {"denominator", h.denominator.str()}};
        json vars = json::array();
        for (int v : h.variables) vars.push_back(v + 1);
        j["variables"] = vars;
        j["factors"] = json::array();
        for (const auto& f : h.factors)
          j["factors"].push_back({{"coeff", f.coeff}, {"constant", f.constant}});
        if (format == "text") {
          for (const auto& f : h.factors) {
            std::string s;
            for (int v : h.variables)
              if (f.coeff[v] != 0)
                s += (s.empty() ? "" : " + ") + std::to_string(f.coeff[v]) + "*k" +
                     std::to_string(v + 1);
            std::cout << "(" << s << " + " << f.constant << ")\n";
          }
          std::cout << "denominator " << h.denominator << "\n";
        } else {
          emit(j, format);
        }
        return kExitOk;
      }

      CaseResult res = verify_case(*d, *p);
      if (format == "text") {
        std::cout << res.report.dump(2) << "\n";
        for (const auto& f : res.failures) std::cout << "FALSIFIED: " << f << "\n";
      } else {
        json j = res.report;
        j["failures"] = res.failures;
        emit(j, format);
      }
      return res.failures.empty() ? kExitOk : kExitFalsified;
    }

    if (*cmd_survey) {
      if (max_rank < 1 || max_rank > 8) return usage_error("--max-rank must be in 1..8");
      if (const char* env = std::getenv("KOSTANT_JOBS")) jobs = std::atoi(env);
      SurveyReport report = run_survey({max_rank, jobs});
      if (format == "csv") {
        std::cout << "type,parabolic,dim,b2,k0,failures\n";
        for (const auto& cr : report.cases) {
          std::string pstr;
          for (int v : cr.parabolic) pstr += (pstr.empty() ? "" : " ") + std::to_string(v + 1);
          std::cout << cr.type.name() << ",\"" << pstr << "\"," << cr.report["dim"] << ","
                    << cr.report["b2"] << "," << cr.report["index_k0"] << ","
                    << cr.failures.size() << "\n";
        }
      } else if (format == "json") {
        emit(survey_json(report), format);
      } else {
        std::cout << report.total_cases << " cases, " << report.total_failures << " failures, "
                  << report.wall_time_seconds << " s\n";
        for (const auto& cr : report.cases)
          for (const auto& f : cr.failures) std::cout << "FALSIFIED: " << f << "\n";
      }
      return report.total_failures == 0 ? kExitOk : kExitFalsified;
    }
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalsified;
  }
  return kExitUsage;
}
