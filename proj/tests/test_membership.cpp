#include <gtest/gtest.h>

#include "parabolic_qi/membership.hpp"
#include "parabolic_qi/samplers.hpp"

using namespace pqi;

namespace {

BraidWord A(const char* text, int n) { return parse_word(text, type_a(n)); }
BraidWord B(const char* text, int n) { return parse_word(text, type_b(n)); }

}  // namespace

TEST(DeltaPowers, TypeA) {
  EXPECT_EQ(delta_power(delta(3)), 1);
  EXPECT_EQ(delta_power(power(delta(3), -3)), -3);
  EXPECT_EQ(delta_squared_power(power(delta(3), 4)), 2);
  EXPECT_FALSE(delta_squared_power(delta(3)).has_value());
  EXPECT_FALSE(delta_power(A("1", 3)).has_value());
  EXPECT_EQ(delta_power(A("", 3)), 0);
}

TEST(DeltaPowers, TypeBCountsDeltaB) {
  EXPECT_EQ(delta_power(delta_B(3)), 1);
  EXPECT_EQ(delta_squared_power(power(delta_B(3), 2)), 1);
  EXPECT_FALSE(delta_squared_power(delta_B(3)).has_value());
  EXPECT_FALSE(delta_power(B("1 2", 3)).has_value());
}

TEST(PSet, Examples) {
  auto w = in_P_set(A("1 2", 3));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->kind, Witness::Kind::Interval);
  EXPECT_EQ(format_interval(w->interval), "{1,2}");
  auto d = in_P_set(power(delta(3), 2));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->kind, Witness::Kind::DeltaSquaredPower);
  EXPECT_EQ(d->power, 1);
  EXPECT_FALSE(in_P_set(delta(3)).has_value());
  EXPECT_FALSE(in_P_set(A("1 3 2", 3)).has_value());
  EXPECT_FALSE(in_P_set(coset_rep(3, 3)).has_value());
  EXPECT_TRUE(in_P_set(B("1 2 1 2", 3)).has_value());
  EXPECT_FALSE(in_P_set(delta_B(3)).has_value());
  EXPECT_TRUE(in_P_set(power(delta_B(3), 2)).has_value());
}

TEST(PSet, ScrambledParabolicWordsAreFound) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(41, 0, t);
    int n = uniform_int(rng, 2, 5);
    Interval I = random_interval(n, rng);
    BraidWord w = scramble(random_word(type_a(n), interval_indices(I), 1, 6, rng), 2, rng);
    auto wit = in_P_set(w);
    ASSERT_TRUE(wit.has_value()) << format_word(w);
    EXPECT_TRUE(certify_P(w, *wit));
  }
}

TEST(NPSet, Examples) {
  // the enclosed punctures 2,3 are symmetric on four strands
  auto d = in_NP_set(delta(3));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(format_interval(d->interval), "{2}");
  EXPECT_FALSE(in_NP_set(coset_rep(3, 3)).has_value());
  EXPECT_TRUE(in_NP_set(A("3", 3)).has_value());
  EXPECT_TRUE(in_NP_set(power(delta(3), 2)).has_value());
  EXPECT_TRUE(in_NP_set(delta_B(3)).has_value());
}

TEST(NPSet, ContainsP) {
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(42, 0, t);
    int n = uniform_int(rng, 2, 4);
    GroupType g = coin(rng) ? type_a(n) : type_b(n);
    BraidWord w = random_word(g, all_indices(n), 0, 5, rng);
    if (in_P_set(w)) { EXPECT_TRUE(in_NP_set(w).has_value()) << format_word(w); }
  }
}

TEST(NPSet, CurveAndConjugationTestsAgree) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(43, 0, t);
    int n = uniform_int(rng, 2, 4);
    Interval I = random_interval(n, rng);
    BraidWord w = coin(rng) ? random_normalizer_A(I, 6, rng) : random_word(type_a(n), all_indices(n), 0, 5, rng);
    EXPECT_EQ(normalizes(w, I), normalizes_by_conjugation(w, I)) << format_word(w) << " " << format_interval(I);
  }
}

TEST(BParabolic, Examples) {
  EXPECT_TRUE(in_B_parabolic(B("1 2 1", 3), make_interval(1, 2, 3)));
  EXPECT_FALSE(in_B_parabolic(B("3", 3), make_interval(1, 2, 3)));
  EXPECT_TRUE(in_B_parabolic(B("3 2 -3", 3), make_interval(2, 2, 3)));
  EXPECT_THROW(in_B_parabolic(A("1", 3), make_interval(1, 1, 3)), std::invalid_argument);
}

TEST(Witness, Certification) {
  EXPECT_TRUE(certify_P(A("1", 3), Witness::of_interval(make_interval(1, 1, 3))));
  EXPECT_FALSE(certify_P(A("1", 3), Witness::of_interval(make_interval(2, 1, 3))));
  EXPECT_TRUE(certify_P(power(delta(3), -4), Witness::of_power(-2)));
  EXPECT_FALSE(certify_P(power(delta(3), -4), Witness::of_power(2)));
  EXPECT_TRUE(certify_NP(A("3", 3), Witness::of_interval(make_interval(1, 1, 3))));
  EXPECT_FALSE(certify_NP(A("2", 3), Witness::of_interval(make_interval(1, 1, 3))));
  EXPECT_EQ(Witness::of_power(3).to_string(), "Delta^6");
  EXPECT_EQ(Witness::of_interval(make_interval(2, 2, 4)).to_string(), "I={2,3}");
}
