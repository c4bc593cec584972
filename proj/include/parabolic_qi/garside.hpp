#pragma once

// Left-greedy Garside normal form for the braid group A(A_n), word problem
// for both types (type B through eta), and membership in standard parabolic
// subgroups.

#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabolic_qi/eta.hpp"
#include "parabolic_qi/words.hpp"

namespace pqi {

// Simples are permutation braids, stored as their strand permutation.

inline Permutation delta_permutation(int strands) {
  std::vector<int> images(strands);
  for (int i = 0; i < strands; ++i) images[i] = strands - i;
  return Permutation::from_images(images);
}

/// Bit i-1 set iff sigma_i left-divides the simple.
inline std::uint32_t starting_set(const Permutation& s) {
  std::uint32_t mask = 0;
  for (int i = 1; i < s.size(); ++i)
    if (s[i] > s[i + 1]) mask |= 1u << (i - 1);
  return mask;
}

/// Bit i-1 set iff sigma_i right-divides the simple.
inline std::uint32_t finishing_set(const Permutation& s) {
  std::uint32_t mask = 0;
  for (int i = 1; i < s.size(); ++i)
    if (s.preimage(i) > s.preimage(i + 1)) mask |= 1u << (i - 1);
  return mask;
}

/// Conjugation by Delta: sigma_i -> sigma_{N-i}.
inline Permutation flip(const Permutation& s) {
  const int n = s.size();
  std::vector<int> images(n);
  for (int p = 1; p <= n; ++p) images[p - 1] = n + 1 - s[n + 1 - p];
  return Permutation::from_images(images);
}

/// Right complement x^-1 Delta.
inline Permutation right_complement(const Permutation& s) {
  return s.inverse().then(delta_permutation(s.size()));
}

/// A positive word for the permutation braid (each pair of strands crosses once).
inline std::vector<int> simple_letters(Permutation s) {
  std::vector<int> out;
  for (;;) {
    std::uint32_t mask = starting_set(s);
    if (!mask) break;
    int i = std::countr_zero(mask) + 1;
    out.push_back(i);
    s.swap_first(i);
  }
  return out;
}

/// Makes (a, b) left-weighted without changing the product a*b.
/// Returns whether anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  bool changed = false;
  for (;;) {
    std::uint32_t mask = starting_set(b) & ~finishing_set(a);
    if (!mask) return changed;
    int i = std::countr_zero(mask) + 1;
    a.then_swap(i);
    b.swap_first(i);
    changed = true;
  }
}

/// Delta^inf * factors[0] * ... with left-weighted, proper (non-trivial,
/// non-Delta) factors. Unique per element of A(A_n).
class NormalForm {
 public:
  explicit NormalForm(int strands) : strands_(strands), delta_(delta_permutation(strands)) {}

  int strands() const { return strands_; }
  int inf() const { return inf_; }
  const std::vector<Permutation>& factors() const { return factors_; }
  bool is_delta_power() const { return factors_.empty(); }

  void multiply_simple(const Permutation& s) {
    if (s.is_identity()) return;
    if (s == delta_) {
      ++inf_;
      for (auto& f : factors_) f = flip(f);
      return;
    }
    factors_.push_back(s);
    for (std::size_t j = factors_.size() - 1; j > 0; --j)
      if (!left_weight(factors_[j - 1], factors_[j])) break;
    std::size_t lead = 0;
    while (lead < factors_.size() && factors_[lead] == delta_) ++lead;
    if (lead) {
      inf_ += static_cast<int>(lead);
      factors_.erase(factors_.begin(), factors_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
  }

  void multiply_letter(int letter) {
    const int i = std::abs(letter);
    if (letter > 0) {
      Permutation s = Permutation::identity(strands_);
      s.then_swap(i);
      multiply_simple(s);
      return;
    }
    // x sigma_i^-1 = x (sigma_i^-1 Delta) Delta^-1
    Permutation y = delta_;
    y.swap_first(i);
    multiply_simple(y);
    --inf_;
    for (auto& f : factors_) f = flip(f);
  }

  void multiply(const BraidWord& w) {
    if (w.group.type != Type::A) throw std::invalid_argument("NormalForm::multiply expects a type-A word");
    for (int l : w.letters) multiply_letter(l);
  }

  bool is_left_weighted() const {
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      if (factors_[j].is_identity() || factors_[j] == delta_) return false;
      if (j + 1 < factors_.size() &&
          (starting_set(factors_[j + 1]) & ~finishing_set(factors_[j])) != 0)
        return false;
    }
    return true;
  }

  BraidWord to_word() const {
    BraidWord out(type_a(strands_ - 1));
    std::vector<int> d = simple_letters(delta_);
    for (int p = 0; p < std::abs(inf_); ++p)
      for (std::size_t t = 0; t < d.size(); ++t)
        out.letters.push_back(inf_ > 0 ? d[t] : -d[d.size() - 1 - t]);
    for (const auto& f : factors_)
      for (int l : simple_letters(f)) out.letters.push_back(l);
    return out;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(inf_) ^ (static_cast<std::size_t>(strands_) << 40);
    for (const auto& f : factors_) h = h * 1000003u ^ std::hash<std::uint64_t>{}(f.pack());
    return h;
  }

  friend bool operator==(const NormalForm& a, const NormalForm& b) {
    return a.strands_ == b.strands_ && a.inf_ == b.inf_ && a.factors_ == b.factors_;
  }

 private:
  int strands_;
  int inf_ = 0;
  std::vector<Permutation> factors_;
  Permutation delta_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const { return nf.hash(); }
};

inline NormalForm normal_form(const BraidWord& w) {
  if (w.group.type != Type::A) throw std::invalid_argument("normal_form expects a type-A word");
  NormalForm nf(w.group.strands());
  nf.multiply(w);
  return nf;
}

/// Normal form of w (type A) or of eta(w) (type B).
inline NormalForm group_normal_form(const BraidWord& w) {
  return w.group.type == Type::A ? normal_form(w) : normal_form(eta(w));
}

inline bool equal(const BraidWord& u, const BraidWord& v) {
  if (!(u.group == v.group)) throw std::invalid_argument("equal: words from different groups");
  return group_normal_form(u) == group_normal_form(v);
}

inline bool is_identity(const BraidWord& w) {
  NormalForm nf = group_normal_form(w);
  return nf.inf() == 0 && nf.factors().empty();
}

/// Half twist Delta_{A_n} = a_1 a_2 ... a_n.
inline BraidWord delta(int n) {
  BraidWord out(type_a(n));
  for (int i = 1; i <= n; ++i) out *= coset_rep(i, n);
  return out;
}

/// Delta_{B_n} = (tau_1 ... tau_n)^n; certified once per rank against
/// eta(Delta_B) = Delta_A^2.
inline BraidWord delta_B(int n) {
  BraidWord coxeter(type_b(n));
  for (int i = 1; i <= n; ++i) coxeter.letters.push_back(i);
  BraidWord out = power(coxeter, n);
  static std::array<std::atomic<bool>, kMaxRank + 1> certified{};
  if (!certified[n].load(std::memory_order_acquire)) {
    NormalForm nf = normal_form(eta(out));
    if (!(nf.inf() == 2 && nf.factors().empty()))
      throw std::logic_error("delta_B: eta((tau_1..tau_n)^n) is not Delta_A^2 for n=" + std::to_string(n));
    certified[n].store(true, std::memory_order_release);
  }
  return out;
}

/// Type-appropriate Garside element.
inline BraidWord garside_element(GroupType g) { return g.type == Type::A ? delta(g.rank) : delta_B(g.rank); }

/// The simple moves only punctures in [m, m+k].
inline bool supported_on(const Permutation& s, const Interval& I) {
  for (int p = 1; p <= s.size(); ++p)
    if (!I.encloses(p) && s[p] != p) return false;
  return true;
}

/// Membership in A_I from a normal form. Writes Delta^-s x_1..x_r as
/// a^-1 b (a, b positive with trivial left gcd) and tests that every simple
/// in a and b is supported on I.
inline bool in_standard_parabolic(const NormalForm& nf, const Interval& I) {
  const int p = nf.inf();
  const auto& x = nf.factors();
  if (p > 0) return false;
  const int s = -p;
  if (static_cast<int>(x.size()) < s) return false;
  for (int j = 0; j < s; ++j) {
    Permutation c = right_complement(x[j]);
    if ((s - 1 - j) % 2 == 1) c = flip(c);
    if (!supported_on(c, I)) return false;
  }
  for (std::size_t j = s; j < x.size(); ++j)
    if (!supported_on(x[j], I)) return false;
  return true;
}

inline bool in_standard_parabolic(const BraidWord& w, const Interval& I) {
  if (w.group.type != Type::A) throw std::invalid_argument("in_standard_parabolic expects a type-A word");
  if (I.n != w.group.rank) throw std::invalid_argument("interval rank does not match word rank");
  return in_standard_parabolic(normal_form(w), I);
}

}  // namespace pqi
