#pragma once

// Seeded random generators for words, intervals and normalizer elements.
// Every trial draws from its own stream so runs can be split or reordered
// without changing results.

#include <cstdint>
#include <random>
#include <vector>

#include "parabolic_qi/garside.hpp"
#include "parabolic_qi/words.hpp"

namespace pqi {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(seed ^ splitmix64(stream)) + trial));
}

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

/// Word of uniform length in [min_len, max_len] over the given generator indices.
inline BraidWord random_word(GroupType g, const std::vector<int>& indices, int min_len, int max_len, Rng& rng) {
  BraidWord w(g);
  int len = uniform_int(rng, min_len, max_len);
  for (int t = 0; t < len; ++t) {
    int j = indices[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(indices.size()) - 1))];
    w.letters.push_back(coin(rng) ? j : -j);
  }
  return w;
}

inline std::vector<int> all_indices(int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

inline std::vector<int> interval_indices(const Interval& I) {
  std::vector<int> out;
  for (int i = I.m; i <= I.max(); ++i) out.push_back(i);
  return out;
}

inline Interval random_interval(int n, Rng& rng) {
  auto all = intervals(n);
  return all[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(all.size()) - 1))];
}

/// Inserts trivial subwords (l l^-1 and cyclic rotations of relators r1 r2^-1)
/// at random positions, changing the word but not the element.
inline BraidWord scramble(const BraidWord& w, int insertions, Rng& rng) {
  auto relators = presentation_relators(w.group);
  BraidWord out = w;
  for (int t = 0; t < insertions; ++t) {
    std::vector<int> trivial;
    if (relators.empty() || coin(rng)) {
      int j = uniform_int(rng, 1, w.group.rank);
      int l = coin(rng) ? j : -j;
      trivial = {l, -l};
    } else {
      const auto& [lhs, rhs] = relators[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(relators.size()) - 1))];
      BraidWord r = coin(rng) ? lhs * inverse(rhs) : rhs * inverse(lhs);
      int rot = uniform_int(rng, 0, static_cast<int>(r.size()) - 1);
      trivial.assign(r.letters.begin() + rot, r.letters.end());
      trivial.insert(trivial.end(), r.letters.begin(), r.letters.begin() + rot);
    }
    auto pos = out.letters.begin() + uniform_int(rng, 0, static_cast<int>(out.size()));
    out.letters.insert(pos, trivial.begin(), trivial.end());
  }
  return out;
}

namespace detail {

/// Braid on n+1 strands in which the k+1 strands enclosed by C_I travel as a
/// single fat strand (the tube), starting and ending at outer position m.
/// Crossings at outer positions below `lowest_outer` are never used, which
/// keeps strand 1 untouched when lowest_outer = 2 (type-B native letters).
class TubeWalker {
 public:
  TubeWalker(const Interval& I, int lowest_outer) : I_(I), t_(I.m), lowest_(lowest_outer), out_(type_a(I.n)) {
    outer_ = I.n + 1 - I.k;
  }

  void random_step(Rng& rng) {
    if (uniform_int(rng, 0, 2) == 0) {
      int r = uniform_int(rng, 0, I_.k - 1);
      emit((coin(rng) ? 1 : -1) * (t_ + r));
      return;
    }
    if (outer_ - 1 < lowest_) return;
    int p = uniform_int(rng, lowest_, outer_ - 1);
    cross(p, coin(rng) ? 1 : -1);
  }

  void return_home(Rng& rng) {
    while (t_ != I_.m) cross(t_ < I_.m ? t_ : t_ - 1, coin(rng) ? 1 : -1);
  }

  const BraidWord& word() const { return out_; }

 private:
  void emit(int letter) { out_.letters.push_back(letter); }

  // Outer crossing sigma_p^sign.
  void cross(int p, int sign) {
    const int k = I_.k;
    if (p + 1 < t_) {
      emit(sign * p);
    } else if (p > t_) {
      emit(sign * (p + k));
    } else if (p == t_) {
      for (int q = t_ + k; q >= t_; --q) emit(sign * q);
      ++t_;
    } else {  // p + 1 == t_
      if (t_ - 1 < lowest_) return;
      for (int q = t_ - 1; q <= t_ + k - 1; ++q) emit(sign * q);
      --t_;
    }
  }

  Interval I_;
  int t_;
  int lowest_;
  int outer_;
  BraidWord out_;
};

}  // namespace detail

/// Random element of the normalizer of A_I (stabilizer of C_I).
inline BraidWord random_normalizer_A(const Interval& I, int steps, Rng& rng) {
  detail::TubeWalker walker(I, 1);
  int len = uniform_int(rng, 1, steps);
  for (int t = 0; t < len; ++t) walker.random_step(rng);
  walker.return_home(rng);
  BraidWord out = walker.word();
  const int strands = I.n + 1;
  if (uniform_int(rng, 0, 5) == 0) out *= power(delta(I.n), coin(rng) ? 2 : -2);
  // Delta normalizes A_I when the enclosed punctures are symmetric.
  if (I.m + (I.m + I.k) == strands + 1 && uniform_int(rng, 0, 3) == 0) out *= power(delta(I.n), coin(rng) ? 1 : -1);
  return out;
}

/// Random element of the normalizer of B_I, built natively from type-B
/// letters: B_I words, far-commuting letters, Garside elements of the
/// parabolics B_{1..j} that centralize or contain B_I, and tube braids away
/// from the first strand.
inline BraidWord random_normalizer_B(const Interval& I, int blocks, Rng& rng) {
  const int n = I.n;
  const GroupType gb = type_b(n);
  BraidWord out(gb);
  std::vector<int> far;
  for (int j = 1; j <= n; ++j)
    if (j < I.m - 1 || j > I.max() + 1) far.push_back(j);
  std::vector<int> central_ranks;
  for (int j = 1; j <= n; ++j)
    if (j >= I.max() || j <= I.m - 2) central_ranks.push_back(j);
  int count = uniform_int(rng, 1, blocks);
  for (int b = 0; b < count; ++b) {
    switch (uniform_int(rng, 0, 3)) {
      case 0:
        out *= random_word(gb, interval_indices(I), 1, 4, rng);
        break;
      case 1:
        if (!far.empty()) out *= random_word(gb, far, 1, 3, rng);
        break;
      case 2: {
        int j = central_ranks[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(central_ranks.size()) - 1))];
        BraidWord coxeter(gb);
        for (int i = 1; i <= j; ++i) coxeter.letters.push_back(i);
        out *= power(coxeter, coin(rng) ? j : -j);
        break;
      }
      default:
        if (I.m >= 2) {
          detail::TubeWalker walker(I, 2);
          int len = uniform_int(rng, 1, 4);
          for (int t = 0; t < len; ++t) walker.random_step(rng);
          walker.return_home(rng);
          // letters are all >= 2, where eta is the identity on indices
          out *= BraidWord(gb, walker.word().letters);
        } else {
          out *= random_word(gb, interval_indices(I), 1, 3, rng);
        }
    }
  }
  return out;
}

}  // namespace pqi
