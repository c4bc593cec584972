#include <gtest/gtest.h>

#include "parabolic_qi/verify.hpp"

using namespace pqi;

namespace {

BraidWord A(const char* text, int n) { return parse_word(text, type_a(n)); }

const DeltaBound& delta_bound3() {
  static const DeltaBound u = *delta_B_norm_bound(3, default_delta_caps());
  return u;
}

}  // namespace

TEST(Lemma1, CaseLabels) {
  Interval I = make_interval(4, 3, 9);
  EXPECT_EQ(lemma1_case(I, 2), "case_i");
  EXPECT_EQ(lemma1_case(I, 8), "case_ii");
  EXPECT_EQ(lemma1_case(I, 5), "case_iii");
  EXPECT_EQ(lemma1_expected(I, 8).to_string(), "x5 x6 x7 x8");
}

TEST(Lemma1, NineStrandInstancesPass) {
  WitnessReport r = check_lemma1(9);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(r.case_count("nine_strand"), 6);
}

TEST(Lemma2, Examples) {
  WitnessReport r("lemma2", 4, 0);
  Interval I = make_interval(2, 2, 4);
  EXPECT_EQ(check_lemma2_instance(r, I, A("2 -3 2", 4), 0), "case1");
  EXPECT_EQ(check_lemma2_instance(r, I, A("2 -3 2", 4), 4), "case2");
  EXPECT_EQ(check_lemma2_instance(r, I, A("2 -3 2", 4), 2), "case3");
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(matching_index(A("1", 3), 0), 1);
  EXPECT_EQ(format_word(transversal_conjugate(A("3", 3), 0, 0)), "3");
}

TEST(Lemma2, SmallRunCoversAllCases) {
  WitnessReport r = check_lemma2(3, 300, 1);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  for (const char* c : {"case1", "case2", "case3"}) EXPECT_EQ(r.case_count(c), 100);
}

TEST(Lemma3, DeltaPowersAroundTheExcludedCase) {
  for (int n : {3, 4}) {
    EXPECT_TRUE(equal(psi(power(delta(n), 2)), delta_B(n)));
    EXPECT_FALSE(in_P_set(psi(power(delta(n), 2))).has_value());
    EXPECT_TRUE(in_P_set(psi(power(delta(n), 4))).has_value());
  }
  WitnessReport r = check_lemma3(3, 100, 2);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_EQ(r.case_count("c_excluded"), 3);
  EXPECT_EQ(r.case_count("c_included"), 2);
}

TEST(Lemma4, SmallRun) {
  WitnessReport r = check_lemma4(3, 100, 3);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_GT(r.case_count("backward"), 50);
}

TEST(Lemma5, TransversalFactors) {
  EXPECT_TRUE(transversal_factors(0, 4).empty());
  EXPECT_EQ(transversal_factors(2, 4).size(), 1u);
  auto last = transversal_factors(4, 4);
  ASSERT_EQ(last.size(), 2u);
  EXPECT_TRUE(equal(last[0].word * last[1].word, coset_rep(4, 4)));
  WitnessReport r = check_lemma5(5);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
}

TEST(Prop4, DeltaBoundIsFour) {
  const DeltaBound& u = delta_bound3();
  EXPECT_EQ(u.bound, 4);
  EXPECT_TRUE(path_is_valid(delta_B(3), u.path, SetKind::P));
}

TEST(Prop4, CaseExamples) {
  const int n = 3;
  const DeltaBound& u = delta_bound3();
  BraidWord y = inverse(coset_rep(3, n));  // coset index 3
  ASSERT_EQ(coset_index(y), 3);
  EXPECT_EQ(decompose_P(y, A("1", n), u.path).case_label, "case2");
  EXPECT_EQ(decompose_P(y, A("3", n), u.path).case_label, "case3");
  EXPECT_EQ(decompose_P(A("", n), A("3", n), u.path).case_label, "case1");
  Decomposition odd = decompose_P(y, power(delta(n), 2), u.path);
  EXPECT_EQ(odd.case_label, "central_odd");
  EXPECT_EQ(odd.factors.size(), 4u);
  Decomposition even = decompose_P(y, power(delta(n), -4), u.path);
  EXPECT_EQ(even.case_label, "central_even");
  EXPECT_EQ(even.factors.size(), 1u);
  for (const char* g : {"1", "3", "2 -3 2"}) {
    WitnessReport r = lipschitz_witness_P(y, A(g, n), u);
    EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  }
  WitnessReport r = lipschitz_witness_P(y, power(delta(n), -2), u);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
}

TEST(Prop4, CaseThreeUsesThreeFactorsOffTheFirstPuncture) {
  const int n = 4;
  auto u = delta_B_norm_bound(n, default_delta_caps());
  ASSERT_TRUE(u.has_value());
  BraidWord y = inverse(coset_rep(2, n));
  Decomposition d = decompose_P(y, A("3", n), u->path, make_interval(3, 1, n));
  EXPECT_EQ(d.case_label, "case3");
  EXPECT_EQ(d.factors.size(), 3u);
}

TEST(Prop4, RejectsNonMembers) {
  EXPECT_THROW(decompose_P(A("", 3), A("1 3 2", 3), delta_bound3().path), std::invalid_argument);
  EXPECT_THROW(decompose_P(A("", 3), A("1", 3), delta_bound3().path, make_interval(2, 1, 3)),
               std::invalid_argument);
}

TEST(Prop6, PositionCases) {
  Interval I = make_interval(2, 1, 4);
  EXPECT_EQ(position_case(I, 1, 2), "inner");
  EXPECT_EQ(position_case(I, 0, 0), "outer_left");
  EXPECT_EQ(position_case(I, 4, 3), "outer_right");
  EXPECT_EQ(position_case(I, 0, 4), "mixed_left_to_right");
  EXPECT_EQ(position_case(I, 3, 0), "mixed_right_to_left");
  EXPECT_EQ(position_case(I, 1, 0), "inconsistent");
}

TEST(Prop6, MixedCasesBothDirections) {
  const int n = 3;
  Interval I = make_interval(2, 1, n);
  for (const char* label : {"mixed_left_to_right", "mixed_right_to_left"}) {
    bool found = false;
    for (int t = 0; t < 500 && !found; ++t) {
      Rng rng = trial_rng(61, 0, t);
      BraidWord g = random_normalizer_A(I, 10, rng);
      for (int i0 = 0; i0 <= n && !found; ++i0) {
        if (position_case(I, i0, matching_index(g, i0)) != label) continue;
        found = true;
        BraidWord y = inverse(coset_rep(i0, n));
        Decomposition d = decompose_NP(y, g, I);
        EXPECT_EQ(d.case_label, label);
        EXPECT_EQ(d.factors.size(), 2u);
        WitnessReport r = lipschitz_witness_NP(y, g, I);
        EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
      }
    }
    EXPECT_TRUE(found) << label;
  }
}

TEST(Prop6, SmallRunCoversFiveCases) {
  WitnessReport r = check_prop6(4, 250, 5);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  for (const char* c : {"inner", "outer_left", "outer_right", "mixed_left_to_right", "mixed_right_to_left"})
    EXPECT_GE(r.case_count(c), 25) << c;
  EXPECT_LE(r.max_length("inner"), 3u);
  EXPECT_LE(r.max_length("mixed_right_to_left"), 2u);
}

TEST(Prop6, RejectsNonNormalizer) {
  EXPECT_THROW(decompose_NP(A("", 3), A("2", 3), make_interval(1, 1, 3)), std::invalid_argument);
}

TEST(CertifyStep, TamperedDecompositionsFail) {
  const int n = 3;
  const DeltaBound& u = delta_bound3();
  BraidWord y = inverse(coset_rep(2, n)), g = A("3 -2", n);
  Decomposition good = decompose_P(y, g, u.path);

  Decomposition wrong_witness = good;
  wrong_witness.factors[0].witness = Witness::of_interval(make_interval(1, 1, n));
  WitnessReport r1("t", n, 0);
  detail::certify_step(r1, SetKind::P, y, g, wrong_witness, 5, u.bound);
  EXPECT_FALSE(r1.passed());

  Decomposition wrong_product = good;
  wrong_product.factors.push_back({parse_word("1", type_b(n)), Witness::of_interval(make_interval(1, 1, n))});
  WitnessReport r2("t", n, 0);
  detail::certify_step(r2, SetKind::P, y, g, wrong_product, 5, u.bound);
  EXPECT_FALSE(r2.passed());

  Decomposition too_long = good;
  BraidWord e(type_b(n));
  too_long.factors.insert(too_long.factors.begin(), 4, {e, Witness::of_interval(make_interval(1, 1, n))});
  WitnessReport r3("t", n, 0);
  detail::certify_step(r3, SetKind::P, y, g, too_long, 5, u.bound);
  EXPECT_FALSE(r3.passed());
}

TEST(Report, CoverageFailureOnFinalize) {
  WitnessReport r("x", 3, 0);
  r.require_cases({"a", "b"}, 2);
  r.count("a");
  r.count("a");
  r.count("b");
  r.finalize();
  EXPECT_EQ(r.failure_count(), 1);
  EXPECT_EQ(r.failures()[0].case_label, "coverage");
}

TEST(Report, MinCasesScalesWithTrials) {
  EXPECT_EQ(detail::min_cases_for(10000, 3), 100);
  EXPECT_EQ(detail::min_cases_for(300, 3), 50);
  EXPECT_EQ(detail::min_cases_for(1, 5), 1);
}

TEST(RunCheck, DispatchAndDeterminism) {
  for (const auto& s : statement_names()) {
    std::int64_t trials = s == "relators" || s == "lemma1" || s == "lemma5" ? 0 : 60;
    WitnessReport a = run_check(s, 3, trials, 17), b = run_check(s, 3, trials, 17);
    EXPECT_TRUE(a.passed()) << s << "\n" << a.to_json().dump(2);
    EXPECT_EQ(a.to_json(), b.to_json()) << s;
    EXPECT_TRUE(a.to_json()["elapsed_ms"].is_null());
  }
  EXPECT_THROW(run_check("lemma9", 3, 1, 0), std::invalid_argument);
  EXPECT_EQ(default_trials("engine"), 100000);
  EXPECT_EQ(default_trials("prop4"), 1000);
}

TEST(Prop3Prop5, SmallRun) {
  WitnessReport r = check_prop3_prop5(4, 200, 9);
  EXPECT_TRUE(r.passed()) << r.to_json().dump(2);
  EXPECT_LE(r.max_length("displacement"), 2u);
}
