#pragma once

// Desk-scale metric experiments with the infinite generating sets P and NP:
// truncated generator enumeration, BFS norm upper bounds, quasi-isometry
// constant estimates and the P-versus-NP distortion probe.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "parabolic_qi/membership.hpp"
#include "parabolic_qi/report.hpp"
#include "parabolic_qi/samplers.hpp"

namespace pqi {

enum class SetKind { P, NP };

inline const char* set_name(SetKind k) { return k == SetKind::P ? "P" : "NP"; }

struct GeneratorTruncation {
  SetKind kind = SetKind::P;
  GroupType group;
  int max_length = 3;       // longest enumerated generator word
  int max_delta_power = 1;  // Delta^{2k} (or Delta^j for NP) with |k| up to this
  bool exact_last_step = true;
  bool positive_only = false;  // enumerate positive generator words only

  nlohmann::json to_json() const {
    return {{"set", set_name(kind)},
            {"positive_only", positive_only},
            {"type", std::string(1, type_char(group.type))},
            {"rank", group.rank},
            {"max_length", max_length},
            {"max_delta_power", max_delta_power},
            {"exact_last_step", exact_last_step}};
  }
};

inline constexpr std::size_t kGeneratorGuard = 1000000;

/// Exact membership in the full (untruncated) set.
inline std::optional<Witness> in_set(SetKind kind, const BraidWord& w) {
  return kind == SetKind::P ? in_P_set(w) : in_NP_set(w);
}

namespace detail {

inline void enumerate_words(GroupType g, const std::vector<int>& alphabet, int max_length, bool positive_only,
                            const std::function<void(const BraidWord&)>& visit) {
  BraidWord w(g);
  std::function<void()> rec = [&] {
    if (!w.empty()) visit(w);
    if (static_cast<int>(w.size()) == max_length) return;
    for (int j : alphabet)
      for (int l : {j, -j}) {
        if (positive_only && l < 0) continue;
        if (!w.empty() && w.letters.back() == -l) continue;
        w.letters.push_back(l);
        rec();
        w.letters.pop_back();
      }
  };
  rec();
}

inline double candidate_count(std::size_t alphabet, int max_length, bool positive_only) {
  double total = 0, layer = 1;
  for (int l = 1; l <= max_length; ++l) {
    layer *= (positive_only ? 1.0 : 2.0) * static_cast<double>(alphabet);
    total += layer;
  }
  return total;
}

}  // namespace detail

/// All distinct elements of the truncated P or NP set (identity excluded),
/// one word per element, in deterministic order.
inline std::vector<BraidWord> enumerate_generators(const GeneratorTruncation& t) {
  const GroupType g = t.group;
  std::unordered_set<NormalForm, NormalFormHash> seen;
  std::vector<BraidWord> out;
  auto keep = [&](const BraidWord& w) {
    NormalForm nf = group_normal_form(w);
    if (nf.inf() == 0 && nf.factors().empty()) return;
    if (seen.insert(nf).second) out.push_back(w);
  };

  double budget = 0;
  if (t.kind == SetKind::P) {
    for (const Interval& I : intervals(g.rank)) budget += detail::candidate_count(static_cast<std::size_t>(I.k), t.max_length, t.positive_only);
  } else {
    budget = detail::candidate_count(static_cast<std::size_t>(g.rank), t.max_length, t.positive_only);
  }
  if (budget > static_cast<double>(kGeneratorGuard))
    throw std::length_error("generator truncation exceeds " + std::to_string(kGeneratorGuard) + " candidates");

  if (t.kind == SetKind::P) {
    for (const Interval& I : intervals(g.rank)) detail::enumerate_words(g, interval_indices(I), t.max_length, t.positive_only, keep);
    const BraidWord d2 = power(garside_element(g), 2);
    for (int k = 1; k <= t.max_delta_power; ++k) {
      keep(power(d2, k));
      keep(power(d2, -k));
    }
  } else {
    detail::enumerate_words(g, all_indices(g.rank), t.max_length, t.positive_only, [&](const BraidWord& w) {
      if (in_NP_set(w)) keep(w);
    });
    const BraidWord d = garside_element(g);
    for (int j = 1; j <= 2 * t.max_delta_power; ++j)
      for (int s : {j, -j}) {
        BraidWord dj = power(d, s);
        if (in_NP_set(dj)) keep(dj);
      }
  }
  return out;
}

struct NormBound {
  int bound = 0;
  std::vector<Factor> path;  // product of the factor words equals the target
};

/// BFS from the identity by right multiplication with truncated generators,
/// states keyed by normal form. With exact_last_step, a state s at depth d
/// also closes at d+1 when s^-1 w is in the full set (decided exactly).
/// The result is an upper bound on the word norm realised by an explicit path.
inline std::optional<NormBound> norm_upper_bound(const BraidWord& w, const GeneratorTruncation& t, int radius_cap) {
  if (!(w.group == t.group)) throw std::invalid_argument("norm_upper_bound: group mismatch");
  const NormalForm target = group_normal_form(w);
  if (target.inf() == 0 && target.factors().empty()) return NormBound{0, {}};
  if (radius_cap < 1) return std::nullopt;
  if (t.exact_last_step) {
    if (auto wit = in_set(t.kind, w)) return NormBound{1, {{w, *wit}}};
  }

  const std::vector<BraidWord> gens = enumerate_generators(t);
  std::vector<Witness> gen_witness;
  gen_witness.reserve(gens.size());
  for (const auto& gw : gens) gen_witness.push_back(*in_set(t.kind, gw));

  struct Node {
    NormalForm nf;
    int parent;
    int gen;
  };
  std::vector<Node> nodes;
  nodes.push_back({group_normal_form(identity_word(t.group)), -1, -1});
  std::unordered_set<NormalForm, NormalFormHash> visited{nodes[0].nf};

  auto path_of = [&](int node) {
    std::vector<Factor> path;
    for (int v = node; nodes[static_cast<std::size_t>(v)].parent >= 0; v = nodes[static_cast<std::size_t>(v)].parent) {
      int gi = nodes[static_cast<std::size_t>(v)].gen;
      path.push_back({gens[static_cast<std::size_t>(gi)], gen_witness[static_cast<std::size_t>(gi)]});
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  auto word_of = [&](const std::vector<Factor>& path) {
    BraidWord out(t.group);
    for (const auto& f : path) out *= f.word;
    return out;
  };

  // Layers below radius_cap are stored. The final layer is only probed for
  // the target, and with an exact last step it is subsumed entirely.
  std::size_t level_begin = 0;
  for (int depth = 1; depth <= radius_cap; ++depth) {
    const bool last = depth == radius_cap;
    if (last && t.exact_last_step) break;
    const std::size_t level_end = nodes.size();
    for (std::size_t v = level_begin; v < level_end; ++v) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        NormalForm next = nodes[v].nf;
        next.multiply(type_a_image(gens[gi]));
        if (next == target) {
          auto path = path_of(static_cast<int>(v));
          path.push_back({gens[gi], gen_witness[gi]});
          return NormBound{depth, path};
        }
        if (last || !visited.insert(next).second) continue;
        nodes.push_back({std::move(next), static_cast<int>(v), static_cast<int>(gi)});
      }
    }
    level_begin = level_end;
    if (t.exact_last_step) {  // closes at depth + 1
      for (std::size_t v = level_begin; v < nodes.size(); ++v) {
        auto path = path_of(static_cast<int>(v));
        BraidWord rest = free_reduce(inverse(word_of(path)) * w);
        if (auto wit = in_set(t.kind, rest)) {
          path.push_back({rest, *wit});
          return NormBound{depth + 1, path};
        }
      }
    }
    if (level_begin == nodes.size()) break;
  }
  return std::nullopt;
}

/// Replays a path: every factor carries a valid witness and the product is the target.
inline bool path_is_valid(const BraidWord& target, const std::vector<Factor>& path, SetKind kind) {
  BraidWord product(target.group);
  for (const auto& f : path) {
    bool ok = kind == SetKind::P ? certify_P(f.word, f.witness) : certify_NP(f.word, f.witness);
    if (!ok) return false;
    product *= f.word;
  }
  return equal(product, target);
}

/// Caps shared by the B-side and A-side searches of one experiment.
struct ExperimentCaps {
  int max_length = 3;
  int max_delta_power = 1;
  int radius = 3;
  bool exact_last_step = true;
  bool positive_only = false;

  GeneratorTruncation truncation(SetKind kind, GroupType g) const {
    return GeneratorTruncation{kind, g, max_length, max_delta_power, exact_last_step, positive_only};
  }
  nlohmann::json to_json() const {
    return {{"max_length", max_length}, {"max_delta_power", max_delta_power}, {"radius", radius},
            {"exact_last_step", exact_last_step}, {"positive_only", positive_only}};
  }
};

struct MetricRecord {
  BraidWord word;
  std::optional<int> first;   // B-side bound (qi) or P bound (distortion)
  std::optional<int> second;  // A-side bound of eta(x) (qi) or NP bound (distortion)
  std::optional<int> transported;  // length of the eta-image of the B-side path (qi only)
};

struct MetricReport {
  std::string experiment;
  int rank = 3;
  SetKind kind = SetKind::P;
  std::uint64_t seed = 0;
  ExperimentCaps caps;
  std::vector<MetricRecord> records;
  nlohmann::json aggregate = nlohmann::json::object();
  std::optional<double> elapsed_ms;

  nlohmann::json to_json() const {
    auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    nlohmann::json rows = nlohmann::json::array();
    const bool qi = experiment == "qi";
    for (const auto& r : records) {
      nlohmann::json row{{"word", format_word(r.word)}};
      if (qi) {
        row["bound_B"] = opt(r.first);
        row["bound_A"] = opt(r.second);
        row["transported_A"] = opt(r.transported);
      } else {
        row["bound_P"] = opt(r.first);
        row["bound_NP"] = opt(r.second);
      }
      rows.push_back(row);
    }
    nlohmann::json out;
    out["experiment"] = experiment;
    out["rank"] = rank;
    if (qi) out["set"] = set_name(kind);
    out["seed"] = seed;
    out["caps"] = caps.to_json();
    out["records"] = rows;
    out["aggregate"] = aggregate;
    out["note"] = "all distances are upper bounds from truncated generating sets";
    out["elapsed_ms"] = elapsed_ms ? nlohmann::json(*elapsed_ms) : nlohmann::json(nullptr);
    out["version"] = kVersion;
    return out;
  }

  std::string to_csv() const {
    std::string out = experiment == "qi" ? "word,bound_B,bound_A,transported_A\n" : "word,bound_P,bound_NP\n";
    auto cell = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& r : records) {
      out += '"' + format_word(r.word) + "\"," + cell(r.first) + ',' + cell(r.second);
      if (experiment == "qi") out += ',' + cell(r.transported);
      out += '\n';
    }
    return out;
  }
};

/// Compares norm bounds of sampled x in A(B_n) with those of eta(x) in A(A_n).
/// The B-side witness path maps under eta to an A-side path of equal length
/// (the 1-Lipschitz direction); its validity is checked factor by factor.
inline MetricReport qi_estimate(int n, SetKind kind, int samples, int max_word_length, std::uint64_t seed,
                                const ExperimentCaps& caps) {
  MetricReport report{"qi", n, kind, seed, caps, {}, {}, {}};
  const GroupType ga = type_a(n), gb = type_b(n);
  const auto tb = caps.truncation(kind, gb);
  const auto ta = caps.truncation(kind, ga);
  double max_ratio = 0, max_excess_b = 0, max_excess_a = 0;
  bool lipschitz_holds = true;
  for (int s = 0; s < samples; ++s) {
    Rng rng = trial_rng(seed, 101, static_cast<std::uint64_t>(s));
    BraidWord x = s == 0 ? identity_word(gb) : random_word(gb, all_indices(n), 1, max_word_length, rng);
    MetricRecord rec{x, {}, {}, {}};
    auto bb = norm_upper_bound(x, tb, caps.radius);
    auto ba = norm_upper_bound(eta(x), ta, caps.radius);
    if (bb) {
      rec.first = bb->bound;
      std::vector<Factor> image;
      bool valid = true;
      for (const auto& f : bb->path) {
        BraidWord y = eta(f.word);
        auto wit = in_set(kind, y);
        if (!wit) valid = false;
        else image.push_back({y, *wit});
      }
      if (valid && path_is_valid(eta(x), image, kind)) rec.transported = static_cast<int>(image.size());
      else lipschitz_holds = false;
    }
    if (ba) rec.second = ba->bound;
    int a_side = rec.second.value_or(1 << 20);
    if (rec.transported) a_side = std::min(a_side, *rec.transported);
    if (rec.first && a_side < (1 << 20)) {
      if (a_side > 0) max_ratio = std::max(max_ratio, static_cast<double>(*rec.first) / a_side);
      max_excess_b = std::max(max_excess_b, static_cast<double>(*rec.first - a_side));
      max_excess_a = std::max(max_excess_a, static_cast<double>(a_side - *rec.first));
    }
    report.records.push_back(std::move(rec));
  }
  report.aggregate = {{"samples", samples},
                      {"max_word_length", max_word_length},
                      {"eta_lipschitz_on_witnesses", lipschitz_holds},
                      {"max_ratio_B_over_A", max_ratio},
                      {"max_additive_B_minus_A", max_excess_b},
                      {"max_additive_A_minus_B", max_excess_a}};
  return report;
}

/// Tabulates P-norm and NP-norm upper bounds of word^p in A(B_n).
inline MetricReport distortion_probe(int n, const BraidWord& word, const std::vector<int>& powers,
                                     const ExperimentCaps& caps) {
  if (word.group.type != Type::B || word.group.rank != n)
    throw std::invalid_argument("distortion_probe expects a type-B word of rank n");
  MetricReport report{"distortion", n, SetKind::P, 0, caps, {}, {}, {}};
  const auto tp = caps.truncation(SetKind::P, word.group);
  const auto tnp = caps.truncation(SetKind::NP, word.group);
  bool inclusion_holds = true;
  for (int p : powers) {
    BraidWord x = power(word, p);
    MetricRecord rec{x, {}, {}, {}};
    if (auto b = norm_upper_bound(x, tp, caps.radius)) rec.first = b->bound;
    if (auto b = norm_upper_bound(x, tnp, caps.radius)) rec.second = b->bound;
    if (rec.first && (!rec.second || *rec.second > *rec.first)) inclusion_holds = false;
    report.records.push_back(std::move(rec));
  }
  report.aggregate = {{"base_word", format_word(word)}, {"np_bound_le_p_bound", inclusion_holds}};
  return report;
}

}  // namespace pqi
