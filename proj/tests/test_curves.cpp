#include <gtest/gtest.h>

#include <cstdlib>

#include "parabolic_qi/curves.hpp"
#include "parabolic_qi/garside.hpp"
#include "parabolic_qi/samplers.hpp"

using namespace pqi;

namespace {

BraidWord A(const char* text, int n) { return parse_word(text, type_a(n)); }

}  // namespace

TEST(Curves, StandardCurveWords) {
  EXPECT_EQ(standard_curve(make_interval(1, 1, 3)).to_string(), "x1 x2");
  EXPECT_EQ(standard_curve(make_interval(4, 3, 9)).to_string(), "x4 x5 x6 x7");
  for (const Interval& I : intervals(6)) {
    auto sums = standard_curve(I).exponent_sums();
    for (int j = 1; j <= 7; ++j) EXPECT_EQ(sums[j], I.encloses(j) ? 1 : 0);
  }
  EXPECT_THROW(standard_curve(Interval{1, 3, 3}), std::invalid_argument);
}

TEST(Curves, CanonicalFormIgnoresRotationAndOrientation) {
  Curve c(4, {2, 3, 1});
  EXPECT_EQ(c, Curve(4, {1, 2, 3}));
  EXPECT_EQ(c, Curve(4, {-3, -2, -1}));
  EXPECT_EQ(c, Curve(4, {4, 1, 2, 3, -4}));
  EXPECT_EQ(Curve(4, c.word()), c);
  EXPECT_EQ(Curve(3, {-1}).to_string(), "x1");
  EXPECT_EQ(Curve(3, {1, -2}).to_string(), "x1 x2^-1");
}

TEST(Curves, ActIdentityAndHalfTwist) {
  Curve c = standard_curve(make_interval(1, 1, 3));
  EXPECT_EQ(act(A("", 3), c), c);
  EXPECT_EQ(act(A("1", 3), c), c);
  EXPECT_EQ(act(A("-1", 3), c), c);
  EXPECT_NE(act(A("2", 3), c), c);
  EXPECT_THROW(act(parse_word("1", type_b(3)), c), std::invalid_argument);
  EXPECT_THROW(act(A("1", 4), c), std::invalid_argument);
}

TEST(Curves, RightActionProperty) {
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(21, 0, t);
    int n = uniform_int(rng, 2, 5);
    BraidWord u = random_word(type_a(n), all_indices(n), 0, 6, rng);
    BraidWord v = random_word(type_a(n), all_indices(n), 0, 6, rng);
    Curve c = standard_curve(random_interval(n, rng));
    EXPECT_EQ(act(u * v, c), act(v, act(u, c)));
  }
}

TEST(Curves, EnclosedPuncturesFollowPermutation) {
  for (int t = 0; t < 500; ++t) {
    Rng rng = trial_rng(22, 0, t);
    int n = uniform_int(rng, 2, 6);
    Interval I = random_interval(n, rng);
    BraidWord y = random_word(type_a(n), all_indices(n), 0, 8, rng);
    auto sums = act(y, standard_curve(I)).exponent_sums();
    for (int& v : sums) v = std::abs(v);  // orientation is not part of the canonical form
    Permutation p = permutation_of(y);
    std::vector<int> expected(n + 2, 0);
    for (int j = I.m; j <= I.m + I.k; ++j) expected[p[j]] = 1;
    EXPECT_EQ(sums, expected);
  }
}

TEST(Curves, CurvePrimeAndTau) {
  for (int k = 1; k <= 3; ++k) {
    Interval I = make_interval(1, k, 5);
    EXPECT_EQ(curve_prime(I), standard_curve(I));
  }
  Interval fig = make_interval(4, 3, 9);
  EXPECT_EQ(act(tau_of(fig), curve_prime(fig)).to_string(), "x1 x2 x3 x4");
  for (int n = 2; n <= 7; ++n)
    for (const Interval& I : intervals(n))
      EXPECT_EQ(act(coset_rep(I.m - 1, n) * tau_of(I), standard_curve(I)), standard_curve(make_interval(1, I.k, n)));
}

TEST(Curves, TransversalActionCases) {
  const int n = 9;
  Interval I = make_interval(4, 3, n);
  EXPECT_EQ(act(coset_rep(2, n), standard_curve(I)), standard_curve(I));
  EXPECT_EQ(act(coset_rep(8, n), standard_curve(I)).to_string(), "x5 x6 x7 x8");
  EXPECT_EQ(act(coset_rep(5, n), standard_curve(I)), act(coset_rep(3, n), standard_curve(I)));
}

TEST(Stabilizes, Examples) {
  for (int t = 0; t < 200; ++t) {
    Rng rng = trial_rng(23, 0, t);
    int n = uniform_int(rng, 2, 6);
    Interval I = random_interval(n, rng);
    EXPECT_TRUE(stabilizes(random_word(type_a(n), interval_indices(I), 0, 8, rng), I));
  }
  for (int n : {3, 4})
    for (const Interval& I : intervals(n)) EXPECT_TRUE(stabilizes(power(delta(n), 2), I));
  EXPECT_TRUE(stabilizes(A("3", 3), make_interval(1, 1, 3)));
  EXPECT_FALSE(stabilizes(A("3 2 1", 3), make_interval(1, 1, 3)));
}

TEST(FreeSupport, Examples) {
  EXPECT_TRUE(free_support_membership(A("2", 4), make_interval(2, 2, 4)));
  EXPECT_FALSE(free_support_membership(A("1", 3), make_interval(2, 1, 3)));
  EXPECT_TRUE(free_support_membership(A("1 3 -1", 3), make_interval(3, 1, 3)));
  EXPECT_THROW(free_support_membership(parse_word("1", type_b(3)), make_interval(1, 1, 3)), std::invalid_argument);
}

TEST(ArtinAction, FixesProductOfAllGenerators) {
  // the boundary loop x_1 ... x_{n+1} is fixed by every braid
  for (int t = 0; t < 200; ++t) {
    Rng rng = trial_rng(24, 0, t);
    int n = uniform_int(rng, 2, 5);
    BraidWord w = random_word(type_a(n), all_indices(n), 0, 10, rng);
    FreeWord boundary;
    for (int j = 1; j <= n + 1; ++j) boundary.push_back(j);
    EXPECT_EQ(artin_image(w, boundary), boundary);
  }
}
