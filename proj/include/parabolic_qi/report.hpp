#pragma once

// WitnessReport: outcome of one verification run, serialised to JSON.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabolic_qi/membership.hpp"
#include "parabolic_qi/words.hpp"

namespace pqi {

inline constexpr const char* kVersion = "0.1.0";

inline nlohmann::json word_json(const BraidWord& w) {
  return {{"type", std::string(1, type_char(w.group.type))}, {"rank", w.group.rank}, {"word", format_word(w)}};
}

inline nlohmann::json interval_json(const Interval& I) { return {{"m", I.m}, {"k", I.k}, {"n", I.n}}; }

inline nlohmann::json witness_json(const Witness& w) {
  if (w.kind == Witness::Kind::Interval) return {{"interval", interval_json(w.interval)}};
  return {{"delta_squared_power", w.power}};
}

struct Factor {
  BraidWord word;
  Witness witness;
};

struct Decomposition {
  std::string case_label;
  std::vector<Factor> factors;
};

inline nlohmann::json decomposition_json(const Decomposition& d) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : d.factors) factors.push_back({{"word", word_json(f.word)}, {"witness", witness_json(f.witness)}});
  return {{"case", d.case_label}, {"length", d.factors.size()}, {"factors", factors}};
}

struct FailureRecord {
  std::string case_label;
  nlohmann::json inputs;
  std::string expected;
  std::string got;
};

class WitnessReport {
 public:
  static constexpr std::size_t kStoredFailures = 25;

  WitnessReport(std::string statement, int rank, std::uint64_t seed)
      : statement_(std::move(statement)), rank_(rank), seed_(seed) {}

  const std::string& statement() const { return statement_; }
  int rank() const { return rank_; }
  std::uint64_t seed() const { return seed_; }
  std::int64_t trials() const { return trials_; }
  std::int64_t failure_count() const { return failure_count_; }
  const std::vector<FailureRecord>& failures() const { return failures_; }
  const std::map<std::string, std::int64_t>& cases() const { return cases_; }
  const std::map<std::string, std::size_t>& max_factors() const { return max_factors_; }
  bool passed() const { return failure_count_ == 0; }

  std::int64_t case_count(const std::string& label) const {
    auto it = cases_.find(label);
    return it == cases_.end() ? 0 : it->second;
  }
  std::size_t max_length(const std::string& label) const {
    auto it = max_factors_.find(label);
    return it == max_factors_.end() ? 0 : it->second;
  }

  void add_trial() { ++trials_; }
  void count(const std::string& label) { ++cases_[label]; }

  void fail(const std::string& label, nlohmann::json inputs, std::string expected, std::string got) {
    ++failure_count_;
    if (failures_.size() < kStoredFailures)
      failures_.push_back({label, std::move(inputs), std::move(expected), std::move(got)});
  }

  /// Convenience: records a failure unless ok.
  bool expect(bool ok, const std::string& label, const nlohmann::json& inputs, const std::string& expected,
              const std::string& got = "false") {
    if (!ok) fail(label, inputs, expected, got);
    return ok;
  }

  void record(const Decomposition& d) {
    auto& longest = max_factors_[d.case_label];
    longest = std::max(longest, d.factors.size());
    if (!examples_.count(d.case_label)) examples_.emplace(d.case_label, d);
  }

  void require_cases(std::vector<std::string> labels, std::int64_t min_count) {
    required_ = std::move(labels);
    min_cases_ = min_count;
  }

  /// Turns missing stratification coverage into failures. Call once.
  void finalize() {
    for (const auto& label : required_) {
      if (case_count(label) < min_cases_)
        fail("coverage", {{"case", label}}, ">= " + std::to_string(min_cases_) + " hits",
             std::to_string(case_count(label)));
    }
  }

  nlohmann::json& caps() { return caps_; }
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  nlohmann::json to_json() const {
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : failures_)
      failures.push_back({{"case", f.case_label}, {"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
    nlohmann::json decompositions = nlohmann::json::object();
    for (const auto& [label, d] : examples_) decompositions[label] = decomposition_json(d);
    nlohmann::json out;
    out["statement"] = statement_;
    out["rank"] = rank_;
    out["trials"] = trials_;
    out["failure_count"] = failure_count_;
    out["failures"] = failures;
    out["cases"] = cases_;
    out["min_cases"] = min_cases_;
    out["max_factors"] = max_factors_;
    out["decompositions"] = decompositions;
    out["caps"] = caps_.is_null() ? nlohmann::json::object() : caps_;
    out["seed"] = seed_;
    out["elapsed_ms"] = elapsed_ms_ ? nlohmann::json(*elapsed_ms_) : nlohmann::json(nullptr);
    out["version"] = kVersion;
    return out;
  }

 private:
  std::string statement_;
  int rank_;
  std::uint64_t seed_;
  std::int64_t trials_ = 0;
  std::int64_t failure_count_ = 0;
  std::vector<FailureRecord> failures_;
  std::map<std::string, std::int64_t> cases_;
  std::map<std::string, std::size_t> max_factors_;
  std::map<std::string, Decomposition> examples_;
  std::vector<std::string> required_;
  std::int64_t min_cases_ = 0;
  nlohmann::json caps_;
  std::optional<double> elapsed_ms_;
};

}  // namespace pqi
