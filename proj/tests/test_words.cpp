#include <gtest/gtest.h>

#include <set>

#include "parabolic_qi/eta.hpp"
#include "parabolic_qi/samplers.hpp"
#include "parabolic_qi/words.hpp"

using namespace pqi;

namespace {

BraidWord A(const char* text, int n) { return parse_word(text, type_a(n)); }

}  // namespace

TEST(Words, ParseSignedLetters) {
  BraidWord w = A("1 -2 3", 3);
  EXPECT_EQ(w.letters, (std::vector<int>{1, -2, 3}));
  EXPECT_EQ(w.group, type_a(3));
  EXPECT_EQ(format_word(w), "1 -2 3");
}

TEST(Words, ParseEmptyIsIdentity) {
  EXPECT_TRUE(A("", 3).empty());
  EXPECT_TRUE(A("   ", 3).empty());
}

TEST(Words, ParseErrors) {
  EXPECT_THROW(A("4", 3), std::out_of_range);
  EXPECT_THROW(A("-4", 3), std::out_of_range);
  EXPECT_THROW(A("0", 3), std::invalid_argument);
  EXPECT_THROW(A("1 x", 3), std::invalid_argument);
  EXPECT_THROW(A("1.5", 3), std::invalid_argument);
  EXPECT_THROW(A("--1", 3), std::invalid_argument);
}

TEST(Words, GroupRankValidated) {
  EXPECT_THROW(type_a(1), std::invalid_argument);
  EXPECT_THROW(type_b(kMaxRank + 1), std::invalid_argument);
  EXPECT_THROW(BraidWord(type_a(3), {5}), std::out_of_range);
}

TEST(Words, Inverse) {
  EXPECT_EQ(inverse(A("1 2", 3)).letters, (std::vector<int>{-2, -1}));
  EXPECT_TRUE(inverse(A("", 3)).empty());
  EXPECT_EQ(inverse(A("-1", 3)).letters, (std::vector<int>{1}));
  EXPECT_TRUE(free_reduce(A("1 -2 3", 3) * inverse(A("1 -2 3", 3))).empty());
}

TEST(Words, PowerAndFreeReduce) {
  EXPECT_EQ(format_word(power(A("1 2", 3), 2)), "1 2 1 2");
  EXPECT_EQ(format_word(power(A("1 2", 3), -1)), "-2 -1");
  EXPECT_TRUE(power(A("1 2", 3), 0).empty());
  EXPECT_EQ(format_word(free_reduce(A("1 2 -2 3 -3 -1 2", 3))), "2");
}

TEST(Permutations, CosetRepTwoIsThreeCycle) {
  // sigma_2 first swaps positions 2,3; then sigma_1 swaps 1,2
  Permutation p = permutation_of(coset_rep(2, 4));
  EXPECT_EQ(p[1], 2);
  EXPECT_EQ(p[2], 3);
  EXPECT_EQ(p[3], 1);
  EXPECT_EQ(p[4], 4);
  EXPECT_EQ(p[5], 5);
}

TEST(Permutations, CosetRepSendsNextPositionToFirst) {
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i <= n; ++i) EXPECT_EQ(permutation_of(coset_rep(i, n))[i + 1], 1) << "n=" << n << " i=" << i;
}

TEST(Permutations, IdentityWord) { EXPECT_TRUE(permutation_of(A("", 4)).is_identity()); }

TEST(Permutations, HomomorphismConvention) {
  for (int t = 0; t < 300; ++t) {
    Rng rng = trial_rng(5, 1, t);
    int n = uniform_int(rng, 2, 6);
    BraidWord u = random_word(type_a(n), all_indices(n), 0, 12, rng);
    BraidWord v = random_word(type_a(n), all_indices(n), 0, 12, rng);
    EXPECT_EQ(permutation_of(u * v), permutation_of(u).then(permutation_of(v)));
    EXPECT_EQ(permutation_of(inverse(u)), permutation_of(u).inverse());
  }
}

TEST(Permutations, RejectsTypeB) { EXPECT_THROW(permutation_of(parse_word("1", type_b(3))), std::invalid_argument); }

TEST(Permutations, OnePure) {
  EXPECT_TRUE(is_one_pure(A("1 1", 3)));
  EXPECT_FALSE(is_one_pure(A("1", 3)));
  EXPECT_TRUE(is_one_pure(A("2", 3)));
}

TEST(CosetReps, Words) {
  EXPECT_TRUE(coset_rep(0, 3).empty());
  EXPECT_EQ(format_word(coset_rep(2, 3)), "2 1");
  EXPECT_EQ(coset_rep(3, 3), BraidWord(type_a(3), {3}) * coset_rep(2, 3));
  EXPECT_THROW(coset_rep(-1, 3), std::out_of_range);
  EXPECT_THROW(coset_rep(4, 3), std::out_of_range);
}

TEST(Tau, NineStrandInstance) {
  EXPECT_EQ(format_word(tau_of(make_interval(4, 3, 9))), "4 5 6 3 4 5 2 3 4");
}

TEST(Tau, TrivialWhenIntervalStartsAtOne) {
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(tau_of(make_interval(1, k, 5)).empty());
}

TEST(Tau, OnePureAndAvoidsFirstGenerator) {
  for (int n = 2; n <= 9; ++n)
    for (const Interval& I : intervals(n)) {
      BraidWord t = tau_of(I);
      EXPECT_TRUE(is_one_pure(t));
      for (int l : t.letters) EXPECT_GE(l, 2);
    }
}

TEST(Tau, InvalidInterval) { EXPECT_THROW(tau_of(Interval{1, 3, 3}), std::invalid_argument); }

TEST(Shift, Examples) {
  EXPECT_EQ(format_word(shift(A("1", 3))), "2");
  EXPECT_TRUE(shift(A("", 3)).empty());
  EXPECT_EQ(format_word(shift(A("-2 3", 4))), "-3 4");
  EXPECT_THROW(shift(A("1 3", 3)), std::invalid_argument);
}

TEST(Relators, TypeABraidRelation) {
  auto rel = presentation_relators(type_a(3));
  ASSERT_EQ(rel.size(), 3u);
  EXPECT_EQ(format_word(rel[0].first), "1 2 1");
  EXPECT_EQ(format_word(rel[0].second), "2 1 2");
  EXPECT_EQ(format_word(rel[1].first), "1 3");
  EXPECT_EQ(format_word(rel[1].second), "3 1");
}

TEST(Relators, TypeBLabelFour) {
  auto rel = presentation_relators(type_b(3));
  EXPECT_EQ(format_word(rel[0].first), "1 2 1 2");
  EXPECT_EQ(format_word(rel[0].second), "2 1 2 1");
  EXPECT_EQ(format_word(rel[2].first), "2 3 2");
  EXPECT_EQ(coxeter_label(Type::B, 2, 1), 4);
  EXPECT_EQ(coxeter_label(Type::A, 1, 2), 3);
  EXPECT_EQ(coxeter_label(Type::B, 1, 3), 2);
}

TEST(Relators, EtaImagesHaveEqualPermutations) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& [l, r] : presentation_relators(type_b(n))) EXPECT_EQ(permutation_of(eta(l)), permutation_of(eta(r)));
}

TEST(Intervals, Enumeration) {
  auto two = intervals(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(format_interval(two[0]), "{1}");
  EXPECT_EQ(format_interval(two[1]), "{2}");
  std::vector<std::string> three;
  for (const auto& I : intervals(3)) three.push_back(format_interval(I));
  EXPECT_EQ(three, (std::vector<std::string>{"{1}", "{1,2}", "{2}", "{2,3}", "{3}"}));
}

TEST(Intervals, Count) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(static_cast<int>(intervals(n).size()), n * (n + 1) / 2 - 1);
}

TEST(Intervals, Validation) {
  EXPECT_THROW(make_interval(1, 3, 3), std::invalid_argument);
  EXPECT_THROW(make_interval(3, 2, 3), std::invalid_argument);
  EXPECT_THROW(make_interval(0, 1, 3), std::invalid_argument);
  EXPECT_THROW(shifted(make_interval(2, 2, 3)), std::invalid_argument);
  Interval I = make_interval(2, 2, 4);
  EXPECT_TRUE(I.contains(3));
  EXPECT_FALSE(I.contains(4));
  EXPECT_TRUE(I.encloses(4));
  EXPECT_EQ(format_interval(shifted(I)), "{3,4}");
}
