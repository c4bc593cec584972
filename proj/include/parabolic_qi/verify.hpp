#pragma once

// Executable checks of the curve, coset and Lipschitz statements, each
// producing a WitnessReport. Bound statements are checked through explicit
// factor decompositions whose factors carry re-certified membership witnesses.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "parabolic_qi/cosets.hpp"
#include "parabolic_qi/curves.hpp"
#include "parabolic_qi/lab.hpp"
#include "parabolic_qi/membership.hpp"
#include "parabolic_qi/report.hpp"
#include "parabolic_qi/samplers.hpp"

namespace pqi {

namespace detail {

inline std::int64_t min_cases_for(std::int64_t trials, std::size_t labels) {
  std::int64_t share = trials / static_cast<std::int64_t>(2 * labels);
  return std::clamp<std::int64_t>(share, 1, 100);
}

/// True when every letter of w lies in I.
inline bool letters_within(const BraidWord& w, const Interval& I) {
  return std::all_of(w.letters.begin(), w.letters.end(), [&](int l) { return I.contains(std::abs(l)); });
}

inline Interval prefix_interval(int k, int n) { return make_interval(1, k, n); }

/// {2, ..., n}, the parabolic containing every tau_I.
inline Interval upper_interval(int n) { return make_interval(2, n - 1, n); }

/// sigma_m ... sigma_{m+k}: carries the tube around C_I one puncture over.
inline BraidWord tube_slide(const Interval& I) {
  BraidWord out(type_a(I.n));
  for (int j = I.m; j <= I.m + I.k; ++j) out.letters.push_back(j);
  return out;
}

inline std::vector<Factor> invert_path(const std::vector<Factor>& path) {
  std::vector<Factor> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    Witness w = it->witness;
    if (w.kind == Witness::Kind::DeltaSquaredPower) w.power = -w.power;
    out.push_back({inverse(it->word), w});
  }
  return out;
}

inline BraidWord product_of(GroupType g, const std::vector<Factor>& factors) {
  BraidWord out(g);
  for (const auto& f : factors) out *= f.word;
  return out;
}

/// Random y with y * a_i 1-pure: y = eta(x) a_i^-1.
inline BraidWord random_y_in_coset(int n, int i, Rng& rng) {
  BraidWord x = random_word(type_b(n), all_indices(n), 0, 10, rng);
  return eta(x) * inverse(coset_rep(i, n));
}

template <class Pred>
std::vector<Interval> intervals_where(int n, Pred pred) {
  std::vector<Interval> out;
  for (const Interval& I : intervals(n))
    if (pred(I)) out.push_back(I);
  return out;
}

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(v.size()) - 1))];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Presentation soundness

inline WitnessReport check_relators(int n) {
  WitnessReport report("relators", n, 0);
  for (Type t : {Type::A, Type::B}) {
    GroupType g = make_group(t, n);
    for (const auto& [lhs, rhs] : presentation_relators(g)) {
      report.add_trial();
      std::string label = std::string("type_") + type_char(t);
      report.count(label);
      nlohmann::json in{{"lhs", word_json(lhs)}, {"rhs", word_json(rhs)}};
      report.expect(equal(lhs, rhs), label, in, "equal");
      report.expect(permutation_of(type_a_image(lhs)) == permutation_of(type_a_image(rhs)), label + "_permutation", in,
                    "same permutation");
      report.expect(same_artin_action(type_a_image(lhs), type_a_image(rhs)), label + "_artin", in,
                    "same Artin action");
    }
  }
  report.add_trial();
  report.count("delta_B");
  report.expect(equal(eta(delta_B(n)), power(delta(n), 2)), "delta_B", {{"n", n}}, "eta(Delta_B) = Delta_A^2");
  return report;
}

// ---------------------------------------------------------------------------
// Action of the transversal on standard curves

inline std::string lemma1_case(const Interval& I, int i0) {
  if (i0 + 1 < I.m) return "case_i";
  if (i0 + 1 > I.m + I.k) return "case_ii";
  return "case_iii";
}

inline Curve lemma1_expected(const Interval& I, int i0) {
  if (i0 + 1 < I.m) return standard_curve(I);
  if (i0 + 1 > I.m + I.k) return standard_curve(shifted(I));
  return curve_prime(I);
}

namespace detail {

inline void lemma1_nine_strands(WitnessReport& report) {
  const int n = 9;
  const Interval I = make_interval(4, 3, n);
  auto expect_curve = [&](const std::string& label, const Curve& got, const std::string& want) {
    report.add_trial();
    report.count("nine_strand");
    report.expect(got.to_string() == want, label, {{"n", n}, {"I", interval_json(I)}}, want, got.to_string());
  };
  expect_curve("nine_strand_standard", standard_curve(I), "x4 x5 x6 x7");
  expect_curve("nine_strand_i", act(coset_rep(2, n), standard_curve(I)), "x4 x5 x6 x7");
  expect_curve("nine_strand_ii", act(coset_rep(8, n), standard_curve(I)), "x5 x6 x7 x8");
  expect_curve("nine_strand_iii", act(coset_rep(5, n), standard_curve(I)), curve_prime(I).to_string());
  expect_curve("nine_strand_iv", act(tau_of(I), curve_prime(I)), "x1 x2 x3 x4");
  report.add_trial();
  report.count("nine_strand");
  report.expect(format_word(tau_of(I)) == "4 5 6 3 4 5 2 3 4", "nine_strand_tau", {{"I", interval_json(I)}},
                "4 5 6 3 4 5 2 3 4", format_word(tau_of(I)));
}

}  // namespace detail

/// Exhaustive over I and i0, plus tau_I transport and the n = 9 instances.
inline WitnessReport check_lemma1(int n) {
  WitnessReport report("lemma1", n, 0);
  for (const Interval& I : intervals(n)) {
    const Curve c = standard_curve(I);
    for (int i0 = 0; i0 <= n; ++i0) {
      report.add_trial();
      const std::string label = lemma1_case(I, i0);
      report.count(label);
      const BraidWord a = coset_rep(i0, n);
      const Curve got = act(a, c);
      const Curve want = lemma1_expected(I, i0);
      nlohmann::json in{{"I", interval_json(I)}, {"i0", i0}};
      report.expect(got == want, label, in, want.to_string(), got.to_string());
      // enclosed punctures follow the permutation
      std::vector<int> sums = got.exponent_sums(), moved(static_cast<std::size_t>(n + 2), 0);
      Permutation p = permutation_of(a);
      for (int j = I.min(); j <= I.m + I.k; ++j) moved[static_cast<std::size_t>(p[j])] = 1;
      report.expect(sums == moved, "abelian_invariant", in, "indicator transported by permutation");
    }
    report.add_trial();
    report.count("tau_transport");
    const BraidWord tau = tau_of(I);
    nlohmann::json in{{"I", interval_json(I)}};
    report.expect(is_one_pure(tau), "tau_one_pure", in, "1-pure");
    report.expect(act(coset_rep(I.m - 1, n) * tau, c) == standard_curve(detail::prefix_interval(I.k, n)),
                  "tau_transport", in, "C_{1..k}", act(coset_rep(I.m - 1, n) * tau, c).to_string());
  }
  detail::lemma1_nine_strands(report);
  return report;
}

// ---------------------------------------------------------------------------
// Conjugates a_{i0}^-1 g a_{j0} of parabolic elements

inline std::string lemma2_case(const Interval& I, int i0) {
  if (i0 + 1 < I.m) return "case1";
  if (i0 + 1 > I.m + I.k) return "case2";
  return "case3";
}

/// j0 = pi_g(i0 + 1) - 1, the unique index making a_{i0}^-1 g a_{j0} 1-pure.
inline int matching_index(const BraidWord& g, int i0) { return permutation_of(g)[i0 + 1] - 1; }

inline BraidWord transversal_conjugate(const BraidWord& g, int i0, int j0) {
  const int n = g.group.rank;
  return inverse(coset_rep(i0, n)) * g * coset_rep(j0, n);
}

/// Checks the case statement for one triple; returns the case label.
inline std::string check_lemma2_instance(WitnessReport& report, const Interval& I, const BraidWord& g, int i0) {
  const int n = I.n;
  const std::string label = lemma2_case(I, i0);
  const int j0 = matching_index(g, i0);
  const BraidWord z = transversal_conjugate(g, i0, j0);
  nlohmann::json in{{"I", interval_json(I)}, {"g", format_word(g)}, {"i0", i0}, {"j0", j0}};
  report.add_trial();
  report.count(label);
  report.expect(is_one_pure(z), label + "_one_pure", in, "z 1-pure");
  if (label == "case1") {
    report.expect(i0 == j0, label, in, "i0 = j0", std::to_string(j0));
    report.expect(equal(z, g), label, in, "z = g");
  } else if (label == "case2") {
    report.expect(i0 == j0, label, in, "i0 = j0", std::to_string(j0));
    report.expect(equal(z, shift(g)), label, in, "z = sh(g)");
    report.expect(in_standard_parabolic(z, shifted(I)), label, in, "z in A_I'");
  } else {
    report.expect(I.encloses(j0 + 1), label, in, "j0 + 1 in [m, m+k]", std::to_string(j0));
    const BraidWord tau = tau_of(I);
    report.expect(in_standard_parabolic(inverse(tau) * z * tau, detail::prefix_interval(I.k, n)), label, in,
                  "tau^-1 z tau in A_{1..k}");
  }
  return label;
}

inline WitnessReport check_lemma2(int n, std::int64_t trials, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("lemma2 needs n >= 3");
  WitnessReport report("lemma2", n, seed);
  const std::vector<std::string> labels{"case1", "case2", "case3"};
  report.require_cases(labels, detail::min_cases_for(trials, labels.size()));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 2, static_cast<std::uint64_t>(t));
    const int target = static_cast<int>(t % 3);
    auto admissible = detail::intervals_where(n, [&](const Interval& I) {
      if (target == 0) return I.m >= 2;
      if (target == 1) return I.m + I.k <= n;
      return true;
    });
    const Interval I = detail::pick(admissible, rng);
    int i0 = 0;
    if (target == 0) i0 = uniform_int(rng, 0, I.m - 2);
    else if (target == 1) i0 = uniform_int(rng, I.m + I.k, n);
    else i0 = uniform_int(rng, I.m - 1, I.m + I.k - 1);
    const BraidWord g = random_word(type_a(n), interval_indices(I), 0, 8, rng);
    check_lemma2_instance(report, I, g, i0);
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// eta on parabolics and on Delta

inline WitnessReport check_lemma3(int n, std::int64_t trials, std::uint64_t seed) {
  WitnessReport report("lemma3", n, seed);
  const GroupType ga = type_a(n), gb = type_b(n);
  const std::vector<std::string> labels{"a_forward", "a_backward"};
  report.require_cases(labels, std::min<std::int64_t>(trials, 1000));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 3, static_cast<std::uint64_t>(t));
    const Interval I = random_interval(n, rng);
    const BraidWord x = random_word(gb, interval_indices(I), 0, 12, rng);
    const BraidWord ex = eta(x);
    nlohmann::json in{{"I", interval_json(I)}, {"x", format_word(x)}};
    report.add_trial();
    report.count("a_forward");
    report.expect(is_one_pure(ex), "a_forward", in, "eta(x) 1-pure");
    report.expect(in_standard_parabolic(ex, I), "a_forward", in, "eta(x) in A_I");
    report.expect(free_support_membership(ex, I), "a_forward_oracle", in, "free support within I");

    std::optional<BraidWord> y;
    for (int attempt = 0; attempt < 64 && !y; ++attempt) {
      BraidWord cand = random_word(ga, interval_indices(I), 0, 12, rng);
      if (is_one_pure(cand)) y = cand;
    }
    if (!y) continue;
    const BraidWord back = free_reduce(eta_inverse(*y));
    nlohmann::json in_back{{"I", interval_json(I)}, {"y", format_word(*y)}};
    report.count("a_backward");
    report.expect(equal(eta(back), *y), "a_backward", in_back, "eta(eta^-1(y)) = y");
    // the rewriting output is itself a word over the tau_i, i in I
    report.expect(detail::letters_within(back, I), "a_backward", in_back, "eta^-1(y) spelled in B_I",
                  format_word(back));
    report.expect(in_B_parabolic(back, I), "a_backward", in_back, "eta^-1(y) in B_I");
  }
  report.add_trial();
  report.count("b_delta");
  report.expect(equal(eta(delta_B(n)), power(delta(n), 2)), "b_delta", {{"n", n}}, "eta(Delta_B) = Delta_A^2");
  for (int k : {-1, 0, 1}) {
    const BraidWord excluded = power(delta(n), 4 * k + 2);
    const BraidWord preimage = psi(excluded);
    nlohmann::json in{{"k", k}};
    report.add_trial();
    report.count("c_excluded");
    report.expect(is_one_pure(excluded) && in_P_set(excluded).has_value(), "c_excluded", in,
                  "Delta_A^{4k+2} in P(A) and 1-pure");
    report.expect(equal(preimage, power(delta_B(n), 2 * k + 1)), "c_excluded", in, "psi = Delta_B^{2k+1}");
    report.expect(!in_P_set(preimage).has_value(), "c_excluded", in, "Delta_B^{2k+1} not in P(B)", "member");
    if (k == 0) continue;
    const BraidWord included = power(delta(n), 4 * k);
    report.add_trial();
    report.count("c_included");
    report.expect(equal(psi(included), power(delta_B(n), 2 * k)), "c_included", in, "psi = Delta_B^{2k}");
    report.expect(in_P_set(psi(included)).has_value(), "c_included", in, "Delta_B^{2k} in P(B)");
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// eta on normalizers

inline WitnessReport check_lemma4(int n, std::int64_t trials, std::uint64_t seed) {
  WitnessReport report("lemma4", n, seed);
  const std::vector<std::string> labels{"forward", "backward"};
  report.require_cases(labels, std::min<std::int64_t>(trials, 1000));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 4, static_cast<std::uint64_t>(t));
    const Interval I = random_interval(n, rng);

    const BraidWord x = random_normalizer_B(I, 6, rng);
    nlohmann::json in{{"I", interval_json(I)}, {"x", format_word(x)}};
    report.add_trial();
    report.count("forward");
    report.expect(normalizes_by_conjugation(x, I), "forward_sampler", in, "x normalizes B_I by conjugation");
    report.expect(in_NP_set(x).has_value(), "forward", in, "x in NP(B)");
    report.expect(in_NP_set(eta(x)).has_value(), "forward", in, "eta(x) in NP(A)");
    report.expect(normalizes(x, I), "per_interval", in, "eta(x) stabilizes C_I");

    std::optional<BraidWord> y;
    for (int attempt = 0; attempt < 64 && !y; ++attempt) {
      BraidWord cand = random_normalizer_A(I, 8, rng);
      if (is_one_pure(cand)) y = cand;
    }
    if (y) {
      const BraidWord back = eta_inverse(*y);
      nlohmann::json in_back{{"I", interval_json(I)}, {"y", format_word(*y)}};
      report.count("backward");
      report.expect(stabilizes(*y, I), "backward_sampler", in_back, "y stabilizes C_I");
      report.expect(in_NP_set(back).has_value(), "backward", in_back, "eta^-1(y) in NP(B)");
      report.expect(normalizes_by_conjugation(back, I), "per_interval", in_back,
                    "eta^-1(y) normalizes B_I by conjugation");
    }

    // per-interval agreement of the two normalizer tests on mixed samples
    const BraidWord w = coin(rng) ? random_word(type_b(n), all_indices(n), 0, 5, rng) : random_normalizer_B(I, 3, rng);
    for (const Interval& J : intervals(n)) {
      report.count("agreement");
      bool by_curve = normalizes(w, J), by_conj = normalizes_by_conjugation(w, J);
      report.expect(by_curve == by_conj, "agreement", {{"I", interval_json(J)}, {"w", format_word(w)}},
                    by_conj ? "normalizes" : "does not normalize", by_curve ? "stabilizes" : "moves C_I");
    }
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// Norm bounds for the transversal and tau_I

/// a_i as at most two certified factors: a_i itself when i < n, else sigma_n * a_{n-1}.
inline std::vector<Factor> transversal_factors(int i, int n) {
  if (i == 0) return {};
  if (i < n) return {{coset_rep(i, n), Witness::of_interval(detail::prefix_interval(i, n))}};
  return {{BraidWord(type_a(n), {n}), Witness::of_interval(make_interval(n, 1, n))},
          {coset_rep(n - 1, n), Witness::of_interval(detail::prefix_interval(n - 1, n))}};
}

inline WitnessReport check_lemma5(int n) {
  WitnessReport report("lemma5", n, 0);
  for (int i = 0; i <= n; ++i) {
    const auto factors = transversal_factors(i, n);
    const BraidWord a = coset_rep(i, n);
    const std::string label = i < n ? "a_i" : "a_n";
    nlohmann::json in{{"i", i}};
    report.add_trial();
    report.count(label);
    report.record({label, factors});
    report.expect(factors.size() <= (i < n ? 1u : 2u), label, in, "length bound",
                  std::to_string(factors.size()));
    report.expect(equal(detail::product_of(type_a(n), factors), a), label, in, "factors multiply to a_i");
    for (const auto& f : factors) {
      report.expect(certify_P(f.word, f.witness), label, in, "P witness " + f.witness.to_string());
      report.expect(certify_NP(f.word, f.witness), label, in, "NP witness " + f.witness.to_string());
      report.expect(free_support_membership(f.word, f.witness.interval), label + "_oracle", in,
                    "free support within " + f.witness.to_string());
    }
  }
  report.add_trial();
  report.count("lower_bound");
  const BraidWord an = coset_rep(n, n);
  report.expect(!in_NP_set(an).has_value(), "lower_bound", {{"i", n}}, "a_n outside NP", "member");
  report.expect(!in_P_set(an).has_value(), "lower_bound", {{"i", n}}, "a_n outside P", "member");
  for (const Interval& I : intervals(n)) {
    report.add_trial();
    report.count("tau");
    const BraidWord x = free_reduce(eta_inverse(tau_of(I)));
    nlohmann::json in{{"I", interval_json(I)}, {"eta_inv_tau", format_word(x)}};
    report.expect(in_B_parabolic(x, detail::upper_interval(n)), "tau", in, "eta^-1(tau_I) in B_{2..n}");
    report.expect(detail::letters_within(x, detail::upper_interval(n)), "tau", in, "spelled in B_{2..n}");
    report.expect(certify_NP(x, Witness::of_interval(detail::upper_interval(n))), "tau", in, "NP witness");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Lipschitz witnesses for psi

struct StepData {
  BraidWord y, g;
  int i0 = 0, j0 = 0;
  BraidWord z;  // a_{i0}^-1 g a_{j0}, 1-pure
};

inline StepData step_data(const BraidWord& y, const BraidWord& g) {
  if (y.group.type != Type::A || !(y.group == g.group)) throw std::invalid_argument("step expects type-A words");
  StepData s{y, g, coset_index(y), coset_index(y * g), BraidWord(y.group)};
  s.z = transversal_conjugate(g, s.i0, s.j0);
  return s;
}

/// Decomposition of psi(y)^-1 psi(yg) for g in P(A). `delta_path` is a
/// certified P-path for Delta_B; `interval` optionally fixes g's witness.
inline Decomposition decompose_P(const BraidWord& y, const BraidWord& g, const std::vector<Factor>& delta_path,
                                 std::optional<Interval> interval = std::nullopt) {
  const int n = y.group.rank;
  std::optional<Witness> wit;
  if (interval) {
    if (in_standard_parabolic(g, *interval)) wit = Witness::of_interval(*interval);
  } else {
    wit = in_P_set(g);
  }
  if (!wit) throw std::invalid_argument("g is not in the P set");
  const StepData s = step_data(y, g);
  Decomposition d;
  if (wit->kind == Witness::Kind::DeltaSquaredPower) {
    const int k = wit->power;
    const BraidWord db = delta_B(n);
    if (k % 2 == 0) {
      d.case_label = "central_even";
      if (k != 0) d.factors.push_back({power(db, k), Witness::of_power(k / 2)});
    } else {
      d.case_label = "central_odd";
      const int sign = k > 0 ? 1 : -1;
      if (k != sign) d.factors.push_back({power(db, k - sign), Witness::of_power((k - sign) / 2)});
      const auto path = sign > 0 ? delta_path : detail::invert_path(delta_path);
      d.factors.insert(d.factors.end(), path.begin(), path.end());
    }
    return d;
  }
  const Interval I = wit->interval;
  d.case_label = lemma2_case(I, s.i0);
  if (d.case_label == "case1") {
    d.factors.push_back({eta_inverse(s.z), Witness::of_interval(I)});
  } else if (d.case_label == "case2") {
    d.factors.push_back({eta_inverse(s.z), Witness::of_interval(shifted(I))});
  } else {
    const BraidWord tau = tau_of(I);
    const BraidWord mid = inverse(tau) * s.z * tau;
    const Witness upper = Witness::of_interval(detail::upper_interval(n));
    if (I.m > 1) d.factors.push_back({eta_inverse(tau), upper});
    d.factors.push_back({eta_inverse(mid), Witness::of_interval(detail::prefix_interval(I.k, n))});
    if (I.m > 1) d.factors.push_back({eta_inverse(inverse(tau)), upper});
  }
  return d;
}

inline std::string position_case(const Interval& I, int i0, int j0) {
  auto side = [&](int p) { return p < I.m ? 'L' : (p > I.m + I.k ? 'R' : 'I'); };
  const char a = side(i0 + 1), b = side(j0 + 1);
  if (a == 'I' && b == 'I') return "inner";
  if (a == 'L' && b == 'L') return "outer_left";
  if (a == 'R' && b == 'R') return "outer_right";
  if (a == 'L' && b == 'R') return "mixed_left_to_right";
  if (a == 'R' && b == 'L') return "mixed_right_to_left";
  return "inconsistent";
}

/// Decomposition of psi(y)^-1 psi(yg) for g normalizing A_I.
inline Decomposition decompose_NP(const BraidWord& y, const BraidWord& g, const Interval& I) {
  const int n = y.group.rank;
  if (!stabilizes(g, I)) throw std::invalid_argument("g does not normalize A_I");
  const StepData s = step_data(y, g);
  Decomposition d{position_case(I, s.i0, s.j0), {}};
  const auto& label = d.case_label;
  if (label == "inner") {
    const BraidWord tau = tau_of(I);
    const BraidWord mid = inverse(tau) * s.z * tau;
    const Witness upper = Witness::of_interval(detail::upper_interval(n));
    if (I.m > 1) d.factors.push_back({eta_inverse(tau), upper});
    d.factors.push_back({eta_inverse(mid), Witness::of_interval(detail::prefix_interval(I.k, n))});
    if (I.m > 1) d.factors.push_back({eta_inverse(inverse(tau)), upper});
  } else if (label == "outer_left") {
    d.factors.push_back({eta_inverse(s.z), Witness::of_interval(I)});
  } else if (label == "outer_right") {
    d.factors.push_back({eta_inverse(s.z), Witness::of_interval(shifted(I))});
  } else if (label == "mixed_left_to_right" || label == "mixed_right_to_left") {
    const BraidWord slide = detail::tube_slide(I);
    const Witness around = Witness::of_interval(make_interval(I.m, I.k + 1, n));
    if (label == "mixed_left_to_right") {
      d.factors.push_back({eta_inverse(s.z * slide), Witness::of_interval(I)});
      d.factors.push_back({eta_inverse(inverse(slide)), around});
    } else {
      d.factors.push_back({eta_inverse(slide), around});
      d.factors.push_back({eta_inverse(inverse(slide) * s.z), Witness::of_interval(I)});
    }
  } else {
    throw std::logic_error("strand of g crosses C_I although g stabilizes it");
  }
  return d;
}

/// Upper bound on the decomposition length for a case label.
inline std::size_t case_bound(SetKind kind, const std::string& label, int delta_bound) {
  if (kind == SetKind::P) {
    if (label == "central_even") return 1;
    if (label == "central_odd") return static_cast<std::size_t>(1 + std::max(2, delta_bound));
    if (label == "case3") return 3;
    return 1;
  }
  if (label == "inner") return 3;
  if (label.rfind("mixed", 0) == 0) return 2;
  return 1;
}

namespace detail {

/// Re-certifies every factor with two oracles, checks the product against
/// psi(y)^-1 psi(yg) and the length bound. Records the decomposition.
inline void certify_step(WitnessReport& report, SetKind kind, const BraidWord& y, const BraidWord& g,
                         const Decomposition& d, std::size_t global_bound, int delta_bound) {
  const int n = y.group.rank;
  const std::string& label = d.case_label;
  const StepData s = step_data(y, g);
  nlohmann::json in{{"y", format_word(y)}, {"g", format_word(g)}, {"i0", s.i0}, {"j0", s.j0}};
  report.add_trial();
  report.count(label);
  report.record(d);
  report.expect(is_one_pure(s.z), label, in, "a_i0^-1 g a_j0 1-pure");
  const BraidWord target = inverse(psi(y)) * psi(y * g);
  report.expect(equal(product_of(type_b(n), d.factors), target), label, in, "factors multiply to psi(y)^-1 psi(yg)");
  for (const auto& f : d.factors) {
    nlohmann::json fin = in;
    fin["factor"] = format_word(f.word);
    fin["witness"] = f.witness.to_string();
    if (kind == SetKind::P) {
      report.expect(certify_P(f.word, f.witness), label + "_factor", fin, "P(B) witness");
      if (f.witness.kind == Witness::Kind::Interval)
        report.expect(free_support_membership(eta(f.word), f.witness.interval), label + "_factor_oracle", fin,
                      "free support within the witness interval");
    } else {
      report.expect(certify_NP(f.word, f.witness), label + "_factor", fin, "NP(B) witness (curve stabilizer)");
      if (f.witness.kind == Witness::Kind::Interval)
        report.expect(normalizes_by_conjugation(f.word, f.witness.interval), label + "_factor_oracle", fin,
                      "normalizes B_I by conjugation");
    }
  }
  const std::size_t len = d.factors.size();
  report.expect(len <= case_bound(kind, label, delta_bound), label + "_bound", in,
                "<= " + std::to_string(case_bound(kind, label, delta_bound)), std::to_string(len));
  report.expect(len <= global_bound, label + "_global_bound", in, "<= " + std::to_string(global_bound),
                std::to_string(len));
}

}  // namespace detail

/// Certified P-path for Delta_B from the truncated BFS (the constant U).
struct DeltaBound {
  int bound = 0;
  std::vector<Factor> path;
  ExperimentCaps caps;
};

inline ExperimentCaps default_delta_caps() {
  ExperimentCaps caps;
  caps.max_length = 3;
  caps.radius = 4;
  caps.positive_only = true;
  return caps;
}

inline std::optional<DeltaBound> delta_B_norm_bound(int n, const ExperimentCaps& caps) {
  auto r = norm_upper_bound(delta_B(n), caps.truncation(SetKind::P, type_b(n)), caps.radius);
  if (!r || !path_is_valid(delta_B(n), r->path, SetKind::P)) return std::nullopt;
  return DeltaBound{r->bound, r->path, caps};
}

inline WitnessReport lipschitz_witness_P(const BraidWord& y, const BraidWord& g, const DeltaBound& u) {
  WitnessReport report("prop4_step", y.group.rank, 0);
  detail::certify_step(report, SetKind::P, y, g, decompose_P(y, g, u.path),
                       static_cast<std::size_t>(1 + std::max(2, u.bound)), u.bound);
  return report;
}

inline WitnessReport lipschitz_witness_NP(const BraidWord& y, const BraidWord& g, const Interval& I) {
  WitnessReport report("prop6_step", y.group.rank, 0);
  detail::certify_step(report, SetKind::NP, y, g, decompose_NP(y, g, I), 3, 0);
  return report;
}

inline WitnessReport check_prop4(int n, std::int64_t trials, std::uint64_t seed,
                                 const ExperimentCaps& caps = default_delta_caps()) {
  WitnessReport report("prop4", n, seed);
  const std::vector<std::string> labels{"central_even", "central_odd", "case1", "case2", "case3"};
  report.require_cases(labels, detail::min_cases_for(trials, labels.size()));
  auto u = delta_B_norm_bound(n, caps);
  report.caps() = {{"delta_B_search", caps.to_json()}};
  if (!u) {
    report.fail("delta_B_bound", {{"n", n}}, "finite BFS bound for Delta_B", "none within caps");
    return report;
  }
  report.caps()["U"] = u->bound;
  report.caps()["U_is_upper_bound"] = true;
  report.record({"delta_B_path", u->path});
  const std::size_t global = static_cast<std::size_t>(1 + std::max(2, u->bound));
  report.caps()["global_bound"] = global;
  const GroupType ga = type_a(n);
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 40, static_cast<std::uint64_t>(t));
    const int target = static_cast<int>(t % 5);
    BraidWord g(ga);
    std::optional<Interval> witness;
    int i0 = uniform_int(rng, 0, n);
    if (target < 2) {
      int k = uniform_int(rng, 1, 2) * 2 - (target == 1 ? 1 : 0);
      g = power(delta(n), 2 * (coin(rng) ? k : -k));
    } else {
      auto admissible = detail::intervals_where(n, [&](const Interval& I) {
        if (target == 2) return I.m >= 2;
        if (target == 3) return I.m + I.k <= n;
        return true;
      });
      const Interval I = detail::pick(admissible, rng);
      if (target == 2) i0 = uniform_int(rng, 0, I.m - 2);
      else if (target == 3) i0 = uniform_int(rng, I.m + I.k, n);
      else i0 = uniform_int(rng, I.m - 1, I.m + I.k - 1);
      g = random_word(ga, interval_indices(I), 1, 8, rng);
      witness = I;
    }
    const BraidWord y = detail::random_y_in_coset(n, i0, rng);
    detail::certify_step(report, SetKind::P, y, g, decompose_P(y, g, u->path, witness), global, u->bound);
  }
  report.finalize();
  return report;
}

inline WitnessReport check_prop6(int n, std::int64_t trials, std::uint64_t seed) {
  WitnessReport report("prop6", n, seed);
  const std::vector<std::string> labels{"inner", "outer_left", "outer_right", "mixed_left_to_right",
                                        "mixed_right_to_left"};
  report.require_cases(labels, detail::min_cases_for(trials, labels.size()));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 60, static_cast<std::uint64_t>(t));
    const std::string& target = labels[static_cast<std::size_t>(t % 5)];
    auto admissible = detail::intervals_where(n, [&](const Interval& I) {
      bool left = I.m >= 2, right = I.m + I.k <= n;
      if (target == "outer_left") return left;
      if (target == "outer_right") return right;
      if (target.rfind("mixed", 0) == 0) return left && right;
      return true;
    });
    bool done = false;
    for (int attempt = 0; attempt < 400 && !done; ++attempt) {
      const Interval I = detail::pick(admissible, rng);
      const BraidWord g = random_normalizer_A(I, 10, rng);
      std::vector<int> starts;
      for (int i0 = 0; i0 <= n; ++i0)
        if (position_case(I, i0, matching_index(g, i0)) == target) starts.push_back(i0);
      if (starts.empty()) continue;
      const BraidWord y = detail::random_y_in_coset(n, detail::pick(starts, rng), rng);
      detail::certify_step(report, SetKind::NP, y, g, decompose_NP(y, g, I), 3, 0);
      done = true;
    }
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// eta is 1-Lipschitz, psi is a quasi-inverse

inline WitnessReport check_prop3_prop5(int n, std::int64_t trials, std::uint64_t seed) {
  WitnessReport report("prop3_prop5", n, seed);
  const GroupType ga = type_a(n), gb = type_b(n);
  const std::vector<std::string> labels{"eta_P", "eta_NP", "round_trip", "displacement"};
  report.require_cases(labels, std::min<std::int64_t>(trials, 1000));
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 35, static_cast<std::uint64_t>(t));
    report.add_trial();
    const Interval I = random_interval(n, rng);

    BraidWord h = uniform_int(rng, 0, 4) == 0 ? power(delta_B(n), 2 * uniform_int(rng, -2, 2))
                                              : random_word(gb, interval_indices(I), 1, 8, rng);
    report.count("eta_P");
    nlohmann::json in_h{{"h", format_word(h)}};
    auto wb = in_P_set(h);
    auto wa = in_P_set(eta(h));
    report.expect(wb.has_value(), "eta_P_sampler", in_h, "h in P(B)");
    report.expect(wa && certify_P(eta(h), *wa), "eta_P", in_h, "eta(h) in P(A)");

    const BraidWord hn = random_normalizer_B(I, 5, rng);
    report.count("eta_NP");
    auto wn = in_NP_set(eta(hn));
    report.expect(wn && certify_NP(eta(hn), *wn), "eta_NP", {{"h", format_word(hn)}}, "eta(h) in NP(A)");

    const BraidWord x = random_word(gb, all_indices(n), 0, 64, rng);
    report.count("round_trip");
    report.expect(equal(psi(eta(x)), x), "round_trip", {{"x", format_word(x)}}, "psi(eta(x)) = x");

    const BraidWord y = random_word(ga, all_indices(n), 0, 64, rng);
    const int i = coset_index(y);
    const auto factors = transversal_factors(i, n);
    nlohmann::json in_y{{"y", format_word(y)}, {"i", i}};
    report.count("displacement");
    report.record({"displacement", factors});
    const BraidWord diff = inverse(y) * eta(psi(y));
    report.expect(equal(diff, coset_rep(i, n)), "displacement", in_y, "y^-1 eta(psi(y)) = a_i");
    report.expect(equal(detail::product_of(ga, factors), diff), "displacement", in_y, "witness product");
    report.expect(factors.size() <= 2, "displacement", in_y, "<= 2 factors", std::to_string(factors.size()));
    for (const auto& f : factors)
      report.expect(certify_P(f.word, f.witness) && certify_NP(f.word, f.witness), "displacement_factor", in_y,
                    f.witness.to_string());
  }
  report.finalize();
  return report;
}

// ---------------------------------------------------------------------------
// Engine cross-validation

inline WitnessReport check_engine(int n, std::int64_t trials, std::uint64_t seed) {
  WitnessReport report("engine", n, seed);
  const GroupType ga = type_a(n);
  for (std::int64_t t = 0; t < trials; ++t) {
    Rng rng = trial_rng(seed, 10, static_cast<std::uint64_t>(t));
    report.add_trial();

    // word problem vs. faithfulness of the Artin action
    const BraidWord u = random_word(ga, all_indices(n), 0, 10, rng);
    BraidWord v = u;
    if (coin(rng)) {
      v = scramble(u, uniform_int(rng, 1, 3), rng);
    } else if (!v.empty() && coin(rng)) {
      auto& l = v.letters[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(v.size()) - 1))];
      l = coin(rng) ? -l : (l > 0 ? 1 : -1) * uniform_int(rng, 1, n);
    } else {
      v = random_word(ga, all_indices(n), 0, 10, rng);
    }
    const bool eq = equal(u, v), act_eq = same_artin_action(u, v);
    report.count(eq ? "equal_true" : "equal_false");
    report.expect(eq == act_eq, "equal_oracle", {{"u", format_word(u)}, {"v", format_word(v)}},
                  act_eq ? "equal" : "different", eq ? "equal" : "different");

    // parabolic membership: normal-form support vs. free-group support
    const Interval I = random_interval(n, rng);
    BraidWord w(ga);
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        w = scramble(random_word(ga, interval_indices(I), 0, 8, rng), uniform_int(rng, 1, 3), rng);
        break;
      case 1:
        w = random_word(ga, all_indices(n), 0, 8, rng);
        break;
      default: {
        BraidWord a = random_word(ga, all_indices(n), 0, 4, rng);
        w = a * random_word(ga, interval_indices(I), 0, 4, rng) * inverse(a);
      }
    }
    const bool nf_in = in_standard_parabolic(w, I), free_in = free_support_membership(w, I);
    report.count(nf_in ? "parabolic_in" : "parabolic_out");
    report.expect(nf_in == free_in, "parabolic_oracle", {{"w", format_word(w)}, {"I", interval_json(I)}},
                  free_in ? "member" : "non-member", nf_in ? "member" : "non-member");

    // normal form: left-weighted at every intermediate state, idempotent
    const BraidWord x = random_word(ga, all_indices(n), 0, 24, rng);
    NormalForm nf(n + 1);
    bool weighted = true;
    for (int l : x.letters) {
      nf.multiply_letter(l);
      weighted = weighted && nf.is_left_weighted();
    }
    report.count("normal_form");
    nlohmann::json in_x{{"x", format_word(x)}};
    report.expect(weighted, "left_weighted", in_x, "left-weighted throughout");
    report.expect(normal_form(nf.to_word()) == nf, "idempotent", in_x, "NF(NF(x)) = NF(x)");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Dispatch

inline const std::vector<std::string>& statement_names() {
  static const std::vector<std::string> names{"relators", "lemma1", "lemma2", "lemma3", "lemma4", "lemma5",
                                              "prop3",    "prop4",  "prop5",  "prop6",  "engine"};
  return names;
}

inline std::int64_t default_trials(const std::string& statement) {
  if (statement == "lemma2" || statement == "prop3" || statement == "prop5") return 10000;
  if (statement == "engine") return 100000;
  return 1000;
}

/// Runs one statement; trials <= 0 selects the default count.
inline WitnessReport run_check(const std::string& statement, int n, std::int64_t trials, std::uint64_t seed) {
  if (trials <= 0) trials = default_trials(statement);
  if (statement == "relators") return check_relators(n);
  if (statement == "lemma1") return check_lemma1(n);
  if (statement == "lemma2") return check_lemma2(n, trials, seed);
  if (statement == "lemma3") return check_lemma3(n, trials, seed);
  if (statement == "lemma4") return check_lemma4(n, trials, seed);
  if (statement == "lemma5") return check_lemma5(n);
  if (statement == "prop3" || statement == "prop5") return check_prop3_prop5(n, trials, seed);
  if (statement == "prop4") return check_prop4(n, trials, seed);
  if (statement == "prop6") return check_prop6(n, trials, seed);
  if (statement == "engine") return check_engine(n, trials, seed);
  throw std::invalid_argument("unknown statement: " + statement);
}

}  // namespace pqi
