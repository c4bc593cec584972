#pragma once

// eta^-1 on 1-pure braids and the quasi-inverse psi, by coset rewriting over
// the transversal {a_0, ..., a_n} of the 1-pure subgroup.

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "parabolic_qi/eta.hpp"
#include "parabolic_qi/garside.hpp"
#include "parabolic_qi/words.hpp"

namespace pqi {

/// Unique i with y * a_i 1-pure: i = perm(y)(1) - 1.
inline int coset_index(const BraidWord& y) { return permutation_of(y)[1] - 1; }

struct RewritingEntry {
  BraidWord subword;  // type B
  int next = 0;
};

/// Entry (i, l) holds t and i' with eta(t) = a_i^-1 * l * a_{i'}.
/// Scanning y left to right from coset 0 yields y * a_final = eta(t_1 t_2 ...).
class RewritingTable {
 public:
  explicit RewritingTable(int n) : n_(n), entries_((n + 1) * 2 * n) {}

  int rank() const { return n_; }

  const RewritingEntry& at(int coset, int letter) const { return entries_[slot(coset, letter)]; }
  RewritingEntry& at(int coset, int letter) { return entries_[slot(coset, letter)]; }

 private:
  std::size_t slot(int coset, int letter) const {
    int j = std::abs(letter);
    return static_cast<std::size_t>(coset) * 2 * n_ + static_cast<std::size_t>(2 * (j - 1) + (letter < 0));
  }
  int n_;
  std::vector<RewritingEntry> entries_;
};

/// eta^-1(a_i^-1 sigma_{i+1}^2 a_i) = tau_{i+1} ... tau_2 tau_1 tau_2^-1 ... tau_{i+1}^-1.
inline BraidWord pure_generator_preimage(int i, int n) {
  BraidWord out(type_b(n));
  for (int j = i + 1; j >= 2; --j) out.letters.push_back(j);
  out.letters.push_back(1);
  for (int j = 2; j <= i + 1; ++j) out.letters.push_back(-j);
  return out;
}

/// Builds the table from closed forms and certifies every entry with the
/// normal-form word problem. Throws std::logic_error if one fails.
inline RewritingTable build_rewriting_table(int n) {
  const GroupType gb = type_b(n);
  RewritingTable table(n);
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int sign : {+1, -1}) {
        const int letter = sign * j;
        RewritingEntry e;
        e.subword = BraidWord(gb);
        if (j < i) {
          e.next = i;
          e.subword.letters.push_back(sign * (j + 1));
        } else if (j > i + 1) {
          e.next = i;
          e.subword.letters.push_back(letter);
        } else if (j == i) {
          e.next = i - 1;
          if (sign < 0) e.subword = inverse(pure_generator_preimage(i - 1, n));
        } else {  // j == i + 1
          e.next = i + 1;
          if (sign > 0) e.subword = pure_generator_preimage(i, n);
        }
        BraidWord target = inverse(coset_rep(i, n)) * BraidWord(type_a(n), {letter}) * coset_rep(e.next, n);
        if (!is_one_pure(target) || !equal(eta(e.subword), target))
          throw std::logic_error("rewriting table entry (" + std::to_string(i) + ", " + std::to_string(letter) +
                                 ") failed certification");
        table.at(i, letter) = std::move(e);
      }
    }
  }
  return table;
}

/// Per-rank table, built once and immutable afterwards.
inline const RewritingTable& rewriting_table(int n) {
  static std::array<std::once_flag, kMaxRank + 1> flags;
  static std::array<std::unique_ptr<RewritingTable>, kMaxRank + 1> tables;
  make_group(Type::A, n);
  std::call_once(flags[n], [n] { tables[n] = std::make_unique<RewritingTable>(build_rewriting_table(n)); });
  return *tables[n];
}

namespace detail {

/// Returns eta^-1(y * a_c) and sets final_coset = c = coset_index(y).
inline BraidWord rewrite(const BraidWord& y, int& final_coset) {
  const RewritingTable& table = rewriting_table(y.group.rank);
  BraidWord out(type_b(y.group.rank));
  int coset = 0;
  for (int l : y.letters) {
    const RewritingEntry& e = table.at(coset, l);
    for (int t : e.subword.letters) {
      if (!out.letters.empty() && out.letters.back() == -t)
        out.letters.pop_back();
      else
        out.letters.push_back(t);
    }
    coset = e.next;
  }
  final_coset = coset;
  return out;
}

}  // namespace detail

inline BraidWord eta_inverse(const BraidWord& y) {
  if (y.group.type != Type::A) throw std::invalid_argument("eta_inverse expects a type-A word");
  if (!is_one_pure(y)) throw std::invalid_argument("eta_inverse: word is not 1-pure");
  int final_coset = 0;
  BraidWord out = detail::rewrite(y, final_coset);
  if (final_coset != 0) throw std::logic_error("eta_inverse: rewriting ended outside the trivial coset");
  return out;
}

/// psi(y) = eta^-1(y * a_i) for the unique i making y * a_i 1-pure.
inline BraidWord psi(const BraidWord& y) {
  if (y.group.type != Type::A) throw std::invalid_argument("psi expects a type-A word");
  return eta_inverse(y * coset_rep(coset_index(y), y.group.rank));
}

}  // namespace pqi
