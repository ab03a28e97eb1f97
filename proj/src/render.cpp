#include "tdshuffle/render.hpp"

namespace tdshuffle {

namespace {

nlohmann::json word_to_json(const TensorWord& w) {
  nlohmann::json letters = nlohmann::json::array();
  for (const auto& letter : w.letters()) {
    letters.push_back(letter.exponents());
  }
  return letters;
}

}  // namespace

nlohmann::json to_json(const Coefficient& c) { return c.str(); }

nlohmann::json to_json(const TensorElement& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) {
    out.push_back({{"coeff", c.str()}, {"word", word_to_json(w)}});
  }
  return out;
}

nlohmann::json to_json(const TensorSquareElement& e) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [pair, c] : e.terms()) {
    out.push_back({{"coeff", c.str()},
                   {"left", word_to_json(pair.first)},
                   {"right", word_to_json(pair.second)}});
  }
  return out;
}

nlohmann::json to_json(const HopfReport& report) {
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& law : report.laws) {
    nlohmann::json row = {{"law", law.law},
                          {"asserted", law.asserted},
                          {"holds", law.holds},
                          {"checked", law.checked},
                          {"failures", law.failures}};
    if (!law.first_counterexample.empty()) {
      row["first_counterexample"] = law.first_counterexample;
    }
    laws.push_back(std::move(row));
  }
  return {{"degree_bound", report.degree_bound},
          {"vars", report.vars},
          {"words_enumerated", report.words_enumerated},
          {"result", report.all_hold() ? "PASS" : "FAIL"},
          {"laws", std::move(laws)}};
}

nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  std::size_t violations = 0;
  for (const auto& o : result.outcomes) {
    if (!o.holds) ++violations;
    nlohmann::json row = {{"name", o.name},
                          {"holds", o.holds},
                          {"checked", o.checked}};
    if (!o.counterexample.empty()) row["counterexample"] = o.counterexample;
    if (!o.notes.empty()) row["notes"] = o.notes;
    rows.push_back(std::move(row));
  }
  return {{"suite", result.options.suite},
          {"seed", result.options.seed},
          {"trials", result.options.trials},
          {"max_degree", result.options.max_degree},
          {"max_length", result.options.max_length},
          {"vars", result.options.vars},
          {"result", result.ok() ? "PASS" : "FAIL"},
          {"violations", violations},
          {"laws", std::move(rows)}};
}

}  // namespace tdshuffle
