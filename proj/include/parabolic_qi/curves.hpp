#pragma once

// Curves in the (n+1)-punctured disk as free-group conjugacy classes up to
// inversion, with the right action of braids through Artin automorphisms.

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "parabolic_qi/words.hpp"

namespace pqi {

/// Word over x_1..x_N; letter +j is x_j, -j its inverse.
using FreeWord = std::vector<int>;

inline void append_reduced(FreeWord& out, int letter) {
  if (!out.empty() && out.back() == -letter)
    out.pop_back();
  else
    out.push_back(letter);
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

inline FreeWord cyclically_reduce(FreeWord w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Artin automorphism for sigma_i (fixed convention):
//   x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
// and for sigma_i^-1:
//   x_i -> x_{i+1},  x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
// Both fix x_1 x_2 ... x_N (the boundary loop).
inline void append_generator_image(FreeWord& out, int braid_letter, int x) {
  const int i = std::abs(braid_letter);
  const int j = std::abs(x);
  auto push = [&](std::initializer_list<int> image) {
    if (x > 0) {
      for (int l : image) append_reduced(out, l);
    } else {
      for (auto it = std::rbegin(image); it != std::rend(image); ++it) append_reduced(out, -*it);
    }
  };
  if (j != i && j != i + 1) {
    append_reduced(out, x);
  } else if (braid_letter > 0) {
    if (j == i)
      push({i, i + 1, -i});
    else
      push({i});
  } else {
    if (j == i)
      push({i + 1});
    else
      push({-(i + 1), i, i + 1});
  }
}

inline FreeWord apply_letter(int braid_letter, const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size() + 4);
  for (int x : w) append_generator_image(out, braid_letter, x);
  return out;
}

/// Image of a free word under the braid, letters applied left to right
/// ("pushing from top to bottom"), freely reduced.
inline FreeWord artin_image(const BraidWord& w, FreeWord word) {
  if (w.group.type != Type::A) throw std::invalid_argument("artin_image expects a type-A word");
  for (int l : w.letters) word = apply_letter(l, word);
  return word;
}

inline int letter_order_key(int l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

inline bool letter_less(int a, int b) { return letter_order_key(a) < letter_order_key(b); }

/// Least rotation of w and of w^-1 under x_1 < x_1^-1 < x_2 < ...
inline FreeWord canonical_cyclic_word(const FreeWord& word) {
  FreeWord w = cyclically_reduce(word);
  if (w.empty()) return w;
  FreeWord best;
  auto consider = [&](const FreeWord& base) {
    const std::size_t n = base.size();
    for (std::size_t r = 0; r < n; ++r) {
      if (!best.empty()) {
        // compare rotation r against best without materialising it
        int cmp = 0;
        for (std::size_t t = 0; t < n && cmp == 0; ++t) {
          int a = base[(r + t) % n], b = best[t];
          if (a != b) cmp = letter_less(a, b) ? -1 : 1;
        }
        if (cmp >= 0) continue;
      }
      best.assign(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      best.insert(best.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
    }
  };
  consider(w);
  consider(free_inverse(w));
  return best;
}

/// Isotopy class of a simple closed curve, held as its canonical cyclic word.
class Curve {
 public:
  Curve() = default;
  Curve(int strands, const FreeWord& word) : strands_(strands), word_(canonical_cyclic_word(word)) {}

  int strands() const { return strands_; }
  const FreeWord& word() const { return word_; }

  /// Exponent sum of each x_j, j = 1..N (index 0 unused).
  std::vector<int> exponent_sums() const {
    std::vector<int> out(strands_ + 1, 0);
    for (int l : word_) out[std::abs(l)] += l > 0 ? 1 : -1;
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < word_.size(); ++i) {
      if (i) out += ' ';
      out += 'x' + std::to_string(std::abs(word_[i]));
      if (word_[i] < 0) out += "^-1";
    }
    return out;
  }

  friend bool operator==(const Curve&, const Curve&) = default;

 private:
  int strands_ = 0;
  FreeWord word_;
};

/// Round curve around punctures m .. m+k.
inline Curve standard_curve(const Interval& I) {
  make_interval(I.m, I.k, I.n);
  FreeWord w;
  for (int j = I.m; j <= I.m + I.k; ++j) w.push_back(j);
  return Curve(I.n + 1, w);
}

/// Right action c^w.
inline Curve act(const BraidWord& w, const Curve& c) {
  if (w.group.type != Type::A) throw std::invalid_argument("act expects a type-A word");
  if (w.group.strands() != c.strands()) throw std::invalid_argument("act: strand count mismatch");
  FreeWord word = c.word();
  for (int l : w.letters) word = cyclically_reduce(apply_letter(l, word));
  return Curve(c.strands(), word);
}

/// C'_I = C_I^{a_{m-1}}.
inline Curve curve_prime(const Interval& I) { return act(coset_rep(I.m - 1, I.n), standard_curve(I)); }

/// w stabilizes C_I, i.e. w normalizes A_I.
inline bool stabilizes(const BraidWord& w, const Interval& I) {
  Curve c = standard_curve(I);
  return act(w, c) == c;
}

/// Cross-check oracle for A_I membership: the Artin automorphism of w fixes
/// every x_j outside [m, m+k] and keeps the others inside <x_m, ..., x_{m+k}>.
inline bool free_support_membership(const BraidWord& w, const Interval& I) {
  if (w.group.type != Type::A) throw std::invalid_argument("free_support_membership expects a type-A word");
  for (int j = 1; j <= w.group.strands(); ++j) {
    FreeWord image = artin_image(w, {j});
    if (!I.encloses(j)) {
      if (image != FreeWord{j}) return false;
    } else {
      for (int l : image)
        if (!I.encloses(std::abs(l))) return false;
    }
  }
  return true;
}

/// Faithfulness oracle: identical Artin automorphisms.
inline bool same_artin_action(const BraidWord& u, const BraidWord& v) {
  if (!(u.group == v.group)) throw std::invalid_argument("same_artin_action: group mismatch");
  for (int j = 1; j <= u.group.strands(); ++j)
    if (artin_image(u, {j}) != artin_image(v, {j})) return false;
  return true;
}

}  // namespace pqi
