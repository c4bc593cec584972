// parabolic-qi: command-line front end for the parabolic_qi library.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "parabolic_qi/cosets.hpp"
#include "parabolic_qi/curves.hpp"
#include "parabolic_qi/garside.hpp"
#include "parabolic_qi/lab.hpp"
#include "parabolic_qi/membership.hpp"
#include "parabolic_qi/report.hpp"
#include "parabolic_qi/verify.hpp"

namespace {

using namespace pqi;
using nlohmann::json;

struct Globals {
  std::string type = "A";
  int rank = 3;
  std::uint64_t seed = 1;
  std::string json_path;
  bool timing = false;

  GroupType group() const {
    if (type == "A" || type == "a") return type_a(rank);
    if (type == "B" || type == "b") return type_b(rank);
    throw std::invalid_argument("--type must be A or B");
  }
};

/// Accepts "4,5,6", "4..6" or "4-6".
Interval parse_interval(const std::string& text, int n) {
  std::vector<int> values;
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '.' || c == '-' || c == '{' || c == '}') c = ' ';
  std::istringstream in(cleaned);
  for (int v; in >> v;) values.push_back(v);
  if (values.empty()) throw std::invalid_argument("empty interval: " + text);
  const bool range = text.find("..") != std::string::npos || (text.find('-') != std::string::npos && values.size() == 2);
  if (range && values.size() == 2) return make_interval(values[0], values[1] - values[0] + 1, n);
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] != values[i - 1] + 1) throw std::invalid_argument("interval is not connected: " + text);
  return make_interval(values.front(), static_cast<int>(values.size()), n);
}

SetKind parse_set(const std::string& s) {
  if (s == "P") return SetKind::P;
  if (s == "NP") return SetKind::NP;
  throw std::invalid_argument("--set must be P or NP");
}

void emit_json(const Globals& g, const json& j) {
  if (g.json_path.empty()) return;
  if (g.json_path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(g.json_path);
  if (!out) throw std::runtime_error("cannot write " + g.json_path);
  out << j.dump(2) << '\n';
}

std::string normal_form_text(const NormalForm& nf) {
  std::string out = "Delta^" + std::to_string(nf.inf());
  for (const auto& s : nf.factors()) {
    out += " | ";
    std::string letters;
    for (int l : simple_letters(s)) letters += (letters.empty() ? "" : " ") + std::to_string(l);
    out += letters;
  }
  return out;
}

json normal_form_json(const NormalForm& nf) {
  json factors = json::array();
  for (const auto& s : nf.factors()) {
    std::string letters;
    for (int l : simple_letters(s)) letters += (letters.empty() ? "" : " ") + std::to_string(l);
    factors.push_back(letters);
  }
  return {{"inf", nf.inf()}, {"factors", factors}};
}

struct CapsFlags {
  int max_length = 3;
  int max_delta_power = 1;
  int radius = 3;
  bool no_exact_last_step = false;
  bool positive_only = false;

  void attach(CLI::App* app) {
    app->add_option("--max-length", max_length, "longest enumerated generator word")->capture_default_str();
    app->add_option("--max-delta-power", max_delta_power, "largest |k| for Delta^(2k)")->capture_default_str();
    app->add_option("--radius", radius, "BFS radius cap")->capture_default_str();
    app->add_flag("--no-exact-last-step", no_exact_last_step, "close paths only with truncated generators");
    app->add_flag("--positive-only", positive_only, "enumerate positive generator words only");
  }
  ExperimentCaps caps() const {
    ExperimentCaps c;
    c.max_length = max_length;
    c.max_delta_power = max_delta_power;
    c.radius = radius;
    c.exact_last_step = !no_exact_last_step;
    c.positive_only = positive_only;
    return c;
  }
};

std::string path_text(const std::vector<Factor>& path) {
  std::string out;
  for (const auto& f : path) out += "  [" + format_word(f.word) + "]  " + f.witness.to_string() + '\n';
  return out;
}

json path_json(const std::vector<Factor>& path) {
  json out = json::array();
  for (const auto& f : path) out.push_back({{"word", format_word(f.word)}, {"witness", witness_json(f.witness)}});
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid groups of types A and B: normal forms, curves, coset maps and verification checks"};
  app.name("parabolic-qi");
  app.set_config("--config", "", "TOML or INI file mirroring the command-line flags");
  app.require_subcommand(1);

  Globals g;
  app.add_option("--type", g.type, "group type, A or B")->capture_default_str();
  app.add_option("--rank", g.rank, "rank n (n+1 strands)")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--json", g.json_path, "write a JSON result to PATH ('-' for stdout)");
  app.add_flag("--timing", g.timing, "record elapsed_ms in JSON reports");
  app.add_flag_callback("--version", [] {
    std::cout << "parabolic-qi " << kVersion << '\n';
    throw CLI::Success();
  }, "print the version");

  int exit_code = 0;
  std::string word, word2, interval_text, set_text = "P", statement, powers_text = "1,2,3", csv_path;
  std::int64_t trials = 0;
  int samples = 20, max_word_length = 6;
  CapsFlags caps_flags;

  auto* nf = app.add_subcommand("nf", "left normal form (type B through eta)");
  nf->add_option("word", word, "signed letters, e.g. \"1 -2 3\"")->required();
  nf->callback([&] {
    BraidWord w = parse_word(word, g.group());
    NormalForm f = group_normal_form(w);
    std::cout << normal_form_text(f) << '\n';
    emit_json(g, {{"word", word_json(w)}, {"normal_form", normal_form_json(f)}});
  });

  auto* eq = app.add_subcommand("eq", "decide whether two words are equal");
  eq->add_option("u", word, "first word")->required();
  eq->add_option("v", word2, "second word")->required();
  eq->callback([&] {
    bool same = equal(parse_word(word, g.group()), parse_word(word2, g.group()));
    std::cout << (same ? "equal" : "different") << '\n';
    emit_json(g, {{"equal", same}});
  });

  auto* member = app.add_subcommand("member", "membership in P or NP, or in one standard parabolic");
  member->add_option("word", word, "word to test")->required();
  member->add_option("--set", set_text, "P or NP")->capture_default_str();
  member->add_option("--interval", interval_text, "test A_I / B_I (or its normalizer with --set NP) only");
  member->callback([&] {
    BraidWord w = parse_word(word, g.group());
    json out{{"word", word_json(w)}, {"set", set_text}};
    if (!interval_text.empty()) {
      Interval I = parse_interval(interval_text, g.rank);
      bool in = parse_set(set_text) == SetKind::P ? in_parabolic(w, I) : normalizes(w, I);
      std::cout << (in ? "member" : "not a member") << " (" << format_interval(I) << ")\n";
      out["interval"] = interval_json(I);
      out["member"] = in;
    } else {
      auto wit = in_set(parse_set(set_text), w);
      std::cout << (wit ? "member, witness " + wit->to_string() : std::string("not a member")) << '\n';
      out["member"] = wit.has_value();
      out["witness"] = wit ? witness_json(*wit) : json(nullptr);
    }
    emit_json(g, out);
  });

  auto* act_cmd = app.add_subcommand("act", "push the standard curve C_I through a braid");
  act_cmd->add_option("word", word, "braid word (type B acts through eta)")->required();
  act_cmd->add_option("--interval", interval_text, "I, e.g. 4,5,6")->required();
  act_cmd->callback([&] {
    BraidWord w = parse_word(word, g.group());
    Interval I = parse_interval(interval_text, g.rank);
    Curve c = act(type_a_image(w), standard_curve(I));
    std::cout << c.to_string() << '\n';
    emit_json(g, {{"word", word_json(w)}, {"interval", interval_json(I)}, {"curve", c.to_string()},
                  {"stabilizes", c == standard_curve(I)}});
  });

  auto* eta_cmd = app.add_subcommand("eta", "image of a type-B word in type A");
  eta_cmd->add_option("word", word, "type-B word")->required();
  eta_cmd->callback([&] {
    BraidWord y = eta(parse_word(word, type_b(g.rank)));
    std::cout << format_word(y) << '\n';
    emit_json(g, {{"image", word_json(y)}});
  });

  auto* eta_inv = app.add_subcommand("eta-inv", "preimage of a 1-pure type-A word");
  eta_inv->add_option("word", word, "1-pure type-A word")->required();
  eta_inv->callback([&] {
    BraidWord x = eta_inverse(parse_word(word, type_a(g.rank)));
    std::cout << format_word(x) << '\n';
    emit_json(g, {{"preimage", word_json(x)}});
  });

  auto* psi_cmd = app.add_subcommand("psi", "quasi-inverse of eta");
  psi_cmd->add_option("word", word, "type-A word")->required();
  psi_cmd->callback([&] {
    BraidWord y = parse_word(word, type_a(g.rank));
    BraidWord x = psi(y);
    std::cout << format_word(x) << '\n';
    emit_json(g, {{"psi", word_json(x)}, {"coset_index", coset_index(y)}});
  });

  auto* check = app.add_subcommand("check", "run a verification statement");
  check->add_option("--statement", statement, "statement to check")
      ->required()
      ->check(CLI::IsMember(statement_names()));
  check->add_option("--trials", trials, "trial count (0 = statement default)")->capture_default_str();
  check->callback([&] {
    auto start = std::chrono::steady_clock::now();
    WitnessReport report = run_check(statement, g.rank, trials, g.seed);
    if (g.timing)
      report.set_elapsed_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    std::cout << statement << " n=" << g.rank << ": " << report.trials() << " trials, " << report.failure_count()
              << " failures\n";
    for (const auto& [label, count] : report.cases()) std::cout << "  " << label << ": " << count << '\n';
    for (const auto& f : report.failures())
      std::cout << "  FAIL " << f.case_label << " " << f.inputs.dump() << " expected " << f.expected << ", got "
                << f.got << '\n';
    emit_json(g, report.to_json());
    if (!report.passed()) exit_code = 1;
  });

  auto* bfs = app.add_subcommand("bfs", "upper bound on the P or NP norm by truncated BFS");
  bfs->add_option("word", word, "target word")->required();
  bfs->add_option("--set", set_text, "P or NP")->capture_default_str();
  caps_flags.attach(bfs);
  bfs->callback([&] {
    BraidWord w = parse_word(word, g.group());
    ExperimentCaps caps = caps_flags.caps();
    auto result = norm_upper_bound(w, caps.truncation(parse_set(set_text), w.group), caps.radius);
    json out{{"word", word_json(w)}, {"set", set_text}, {"caps", caps.to_json()}};
    if (result) {
      std::cout << "norm <= " << result->bound << '\n' << path_text(result->path);
      out["bound"] = result->bound;
      out["path"] = path_json(result->path);
      out["path_valid"] = path_is_valid(w, result->path, parse_set(set_text));
    } else {
      std::cout << "no path within the caps\n";
      out["bound"] = nullptr;
    }
    emit_json(g, out);
  });

  auto* qi = app.add_subcommand("qi", "compare B-side and A-side norm bounds under eta");
  qi->add_option("--set", set_text, "P or NP")->capture_default_str();
  qi->add_option("--samples", samples, "sample count")->capture_default_str();
  qi->add_option("--max-word-length", max_word_length, "longest sampled word")->capture_default_str();
  qi->add_option("--csv", csv_path, "also write the records as CSV");
  caps_flags.attach(qi);
  qi->callback([&] {
    auto start = std::chrono::steady_clock::now();
    MetricReport r = qi_estimate(g.rank, parse_set(set_text), samples, max_word_length, g.seed, caps_flags.caps());
    if (g.timing)
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << r.to_csv() << "aggregate " << r.aggregate.dump() << '\n';
    if (!csv_path.empty()) std::ofstream(csv_path) << r.to_csv();
    emit_json(g, r.to_json());
  });

  auto* distortion = app.add_subcommand("distortion", "tabulate P and NP norm bounds of powers");
  distortion->add_option("word", word, "type-B base word")->required();
  distortion->add_option("--powers", powers_text, "comma-separated exponents")->capture_default_str();
  distortion->add_option("--csv", csv_path, "also write the records as CSV");
  caps_flags.attach(distortion);
  distortion->callback([&] {
    std::vector<int> powers;
    std::string cleaned = powers_text;
    for (char& c : cleaned)
      if (c == ',') c = ' ';
    std::istringstream in(cleaned);
    for (int p; in >> p;) powers.push_back(p);
    auto start = std::chrono::steady_clock::now();
    MetricReport r = distortion_probe(g.rank, parse_word(word, type_b(g.rank)), powers, caps_flags.caps());
    if (g.timing)
      r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << r.to_csv();
    if (!csv_path.empty()) std::ofstream(csv_path) << r.to_csv();
    emit_json(g, r.to_json());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
