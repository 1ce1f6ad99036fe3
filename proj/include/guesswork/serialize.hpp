#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "guesswork/engine.hpp"
#include "guesswork/harness.hpp"
#include "guesswork/simulate.hpp"

namespace guesswork {

// Thrown on malformed JSON or schema mismatches; distinct from
// ValidationError so callers can map the two to different exit codes.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using nlohmann::json;

// Wire format: complex numbers as [re, im], matrices as row-major arrays of
// rows, rankings as 1-based image lists.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const Ensemble& e);
Ensemble ensemble_from_json(const json& j);

json to_json(const Povm& p);
Povm povm_from_json(const json& j);

json to_json(const RankingPovm& p);
RankingPovm ranking_povm_from_json(const json& j);

json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);

json to_json(const GuessworkResult& r);
json to_json(const GameStats& s);
json to_json(const TrialReport& r);

json load_json_file(const std::string& path);
Ensemble load_ensemble(const std::string& path);
RankingPovm load_ranking_povm(const std::string& path);

}  // namespace guesswork
