#include "guesswork/serialize.hpp"

#include <fstream>

namespace guesswork {

namespace {

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  return j.at(key);
}

int positive_int_field(const json& j, const char* key, const char* what) {
  const json& v = require_field(j, key, what);
  if (!v.is_number_integer() || v.get<long long>() <= 0)
    throw ParseError(std::string(what) + ": field \"" + key + "\" must be a positive integer");
  return v.get<int>();
}

double number_at(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

Matrix matrix_with_dim(const json& j, int dim, const char* what) {
  Matrix m = matrix_from_json(j);
  if (m.rows() != dim || m.cols() != dim)
    throw ParseError(std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                     std::to_string(dim) + " matrix, got " + std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  return m;
}

std::vector<Matrix> matrix_list(const json& j, const char* key, int dim, const char* what) {
  const json& arr = require_field(j, key, what);
  if (!arr.is_array() || arr.empty())
    throw ParseError(std::string(what) + ": field \"" + key + "\" must be a nonempty array");
  std::vector<Matrix> out;
  out.reserve(arr.size());
  for (const json& entry : arr) out.push_back(matrix_with_dim(entry, dim, what));
  return out;
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix: rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  Matrix m(static_cast<long>(rows), static_cast<long>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) throw ParseError("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& entry = row[c];
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("matrix: entries must be [re, im] pairs");
      m(static_cast<long>(r), static_cast<long>(c)) =
          Complex(number_at(entry[0], "matrix entry"), number_at(entry[1], "matrix entry"));
    }
  }
  return m;
}

json to_json(const Permutation& p) {
  json images = json::array();
  for (int v : p.images()) images.push_back(v + 1);
  return images;
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("ranking: expected a nonempty integer array");
  std::vector<int> images;
  images.reserve(j.size());
  for (const json& entry : j) {
    if (!entry.is_number_integer()) throw ParseError("ranking: entries must be integers");
    images.push_back(entry.get<int>() - 1);
  }
  return Permutation(std::move(images));
}

json to_json(const Ensemble& e) {
  json states = json::array();
  for (int x = 0; x < e.size(); ++x) states.push_back(to_json(e.state(x).matrix()));
  return json{{"dim", e.dim()}, {"states", std::move(states)}, {"probs", e.probs().probs()}};
}

Ensemble ensemble_from_json(const json& j) {
  const int dim = positive_int_field(j, "dim", "ensemble");
  std::vector<Matrix> raw = matrix_list(j, "states", dim, "ensemble");
  const json& probs_json = require_field(j, "probs", "ensemble");
  if (!probs_json.is_array() || probs_json.size() != raw.size())
    throw ParseError("ensemble: \"probs\" must list one probability per state");
  std::vector<double> probs;
  probs.reserve(probs_json.size());
  for (const json& p : probs_json) probs.push_back(number_at(p, "ensemble probability"));
  std::vector<DensityMatrix> states;
  states.reserve(raw.size());
  for (Matrix& m : raw) states.emplace_back(std::move(m));
  return Ensemble(std::move(states), Distribution(std::move(probs)));
}

json to_json(const Povm& p) {
  json outcomes = json::array();
  json elements = json::array();
  for (int y = 0; y < p.size(); ++y) {
    outcomes.push_back(y + 1);
    elements.push_back(to_json(p.element(y)));
  }
  return json{{"dim", p.dim()}, {"outcomes", std::move(outcomes)}, {"elements", std::move(elements)}};
}

Povm povm_from_json(const json& j) {
  const int dim = positive_int_field(j, "dim", "povm");
  return Povm(matrix_list(j, "elements", dim, "povm"));
}

json to_json(const RankingPovm& p) {
  json outcomes = json::array();
  json elements = json::array();
  for (int k = 0; k < p.size(); ++k) {
    outcomes.push_back(to_json(p.outcome(k)));
    elements.push_back(to_json(p.element(k)));
  }
  return json{{"n", p.n()},
              {"dim", p.dim()},
              {"outcomes", std::move(outcomes)},
              {"elements", std::move(elements)}};
}

RankingPovm ranking_povm_from_json(const json& j) {
  const int n = positive_int_field(j, "n", "ranking povm");
  const int dim = positive_int_field(j, "dim", "ranking povm");
  std::vector<Matrix> elements = matrix_list(j, "elements", dim, "ranking povm");
  const json& outcomes = require_field(j, "outcomes", "ranking povm");
  if (!outcomes.is_array() || outcomes.size() != elements.size())
    throw ParseError("ranking povm: \"outcomes\" must list one ranking per element");
  std::vector<std::pair<Permutation, Matrix>> entries;
  entries.reserve(elements.size());
  for (std::size_t k = 0; k < elements.size(); ++k)
    entries.emplace_back(permutation_from_json(outcomes[k]), std::move(elements[k]));
  return RankingPovm(n, std::move(entries));
}

json to_json(const KrausChannel& ch) {
  json kraus = json::array();
  for (int l = 0; l < ch.size(); ++l) kraus.push_back(to_json(ch.kraus(l)));
  return json{{"dim_in", ch.dim_in()}, {"dim_out", ch.dim_out()}, {"kraus", std::move(kraus)}};
}

KrausChannel channel_from_json(const json& j) {
  const int din = positive_int_field(j, "dim_in", "channel");
  const int dout = positive_int_field(j, "dim_out", "channel");
  const json& arr = require_field(j, "kraus", "channel");
  if (!arr.is_array() || arr.empty())
    throw ParseError("channel: \"kraus\" must be a nonempty array");
  std::vector<Matrix> kraus;
  kraus.reserve(arr.size());
  for (const json& entry : arr) {
    Matrix v = matrix_from_json(entry);
    if (v.rows() != dout || v.cols() != din)
      throw ParseError("channel: Kraus operators must be " + std::to_string(dout) + "x" +
                       std::to_string(din));
    kraus.push_back(std::move(v));
  }
  return KrausChannel(std::move(kraus));
}

json to_json(const GuessworkResult& r) {
  json out;
  out["value"] = r.value ? json(*r.value) : json(nullptr);
  out["method"] = r.method == Method::closed_form ? "closed_form" : "bracket_only";
  out["sigma_star"] = r.sigma_star ? to_json(*r.sigma_star) : json(nullptr);
  out["bracket"] = json::array({r.bracket.lower, r.bracket.upper});
  out["povm"] = r.povm ? to_json(*r.povm) : json(nullptr);
  return out;
}

json to_json(const GameStats& s) {
  return json{{"shots", s.shots},
              {"mean_guesses", s.mean_guesses},
              {"std_error", s.std_error},
              {"histogram", s.histogram}};
}

json to_json(const TrialReport& r) {
  return json{{"property", r.property},
              {"trials", r.trials},
              {"passes", r.passes},
              {"failures", r.failures},
              {"skips", r.skips},
              {"skip_reasons", r.skip_reasons},
              {"worst_violation", r.worst_violation},
              {"seed", r.seed}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(path + ": " + err.what());
  }
  return j;
}

Ensemble load_ensemble(const std::string& path) { return ensemble_from_json(load_json_file(path)); }

RankingPovm load_ranking_povm(const std::string& path) {
  return ranking_povm_from_json(load_json_file(path));
}

}  // namespace guesswork
