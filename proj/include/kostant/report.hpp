#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "kostant/coroot_strings.hpp"
#include "kostant/hilbert_index.hpp"
#include "kostant/kostant_game.hpp"
#include "kostant/weyl_words.hpp"

// JSON/CSV/DOT serialization and the exhaustive survey runner.

namespace kostant {

nlohmann::json game_graph_json(const Game& g, const GameGraph& gg);
std::string game_graph_dot(const Game& g, const GameGraph& gg);

nlohmann::json coset_family_json(const CartanData& d, const CosetFamily& fam, bool with_words);

nlohmann::json coroot_string_json(const CartanData& d, const ParabolicSubset& p,
                                  const CorootString& s, const StringCertificate& cert);

// Per-case verification report: vanishing box, factor certificates,
// inequalities.  `failures` lists every falsified invariant with a witness.
struct CaseResult {
  LieType type;
  std::vector<int> parabolic;  // 0-based
  nlohmann::json report;
  std::vector<std::string> failures;
};

CaseResult verify_case(const CartanData& d, const ParabolicSubset& p);

struct SurveyOptions {
  int max_rank = 4;
  int jobs = 1;  // 0 means hardware concurrency
};

struct SurveyReport {
  std::vector<CaseResult> cases;  // deterministic order
  long total_cases = 0;
  long total_failures = 0;
  double wall_time_seconds = 0;
};

// Every type with rank <= max_rank, every proper parabolic subset.
SurveyReport run_survey(const SurveyOptions& options);

nlohmann::json survey_json(const SurveyReport& report);

}  // namespace kostant
