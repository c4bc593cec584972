#pragma once

// Membership in the generating sets P (proper irreducible standard
// parabolics plus <Delta^2>) and NP (normalizers of proper irreducible
// standard parabolics), for both types, with machine-checkable witnesses.

#include <optional>
#include <string>

#include "parabolic_qi/cosets.hpp"
#include "parabolic_qi/curves.hpp"
#include "parabolic_qi/eta.hpp"
#include "parabolic_qi/garside.hpp"
#include "parabolic_qi/words.hpp"

namespace pqi {

struct Witness {
  enum class Kind { Interval, DeltaSquaredPower };
  Kind kind = Kind::Interval;
  Interval interval{};
  int power = 0;  // w = Delta^{2 * power}

  static Witness of_interval(const Interval& I) { return Witness{Kind::Interval, I, 0}; }
  static Witness of_power(int k) { return Witness{Kind::DeltaSquaredPower, Interval{}, k}; }

  std::string to_string() const {
    return kind == Kind::Interval ? "I=" + format_interval(interval) : "Delta^" + std::to_string(2 * power);
  }
};

/// x in B_I, decided on eta(x) (eta(B_I) = A_I meet the 1-pure subgroup).
inline bool in_B_parabolic(const BraidWord& x, const Interval& I) {
  if (x.group.type != Type::B) throw std::invalid_argument("in_B_parabolic expects a type-B word");
  return in_standard_parabolic(eta(x), I);
}

/// Membership in the standard parabolic of the word's own type.
inline bool in_parabolic(const BraidWord& w, const Interval& I) {
  return w.group.type == Type::A ? in_standard_parabolic(w, I) : in_B_parabolic(w, I);
}

/// p with w = Delta^p (type-appropriate Delta), if w is a Delta power.
inline std::optional<int> delta_power(const BraidWord& w) {
  NormalForm nf = group_normal_form(w);
  if (!nf.is_delta_power()) return std::nullopt;
  if (w.group.type == Type::A) return nf.inf();
  // eta(Delta_B) = Delta_A^2
  if (nf.inf() % 2 != 0) return std::nullopt;
  return nf.inf() / 2;
}

/// k with w = Delta^{2k}, if any.
inline std::optional<int> delta_squared_power(const BraidWord& w) {
  auto p = delta_power(w);
  if (!p || *p % 2 != 0) return std::nullopt;
  return *p / 2;
}

inline std::optional<Witness> in_P_set(const BraidWord& w) {
  NormalForm nf = group_normal_form(w);
  for (const Interval& I : intervals(w.group.rank))
    if (in_standard_parabolic(nf, I)) return Witness::of_interval(I);
  if (auto k = delta_squared_power(w)) return Witness::of_power(*k);
  return std::nullopt;
}

/// Type-A image used for curve computations.
inline BraidWord type_a_image(const BraidWord& w) { return w.group.type == Type::A ? w : eta(w); }

/// w normalizes the standard parabolic of its type indexed by I, via the
/// curve stabilizer of C_I (type B through eta).
inline bool normalizes(const BraidWord& w, const Interval& I) { return stabilizes(type_a_image(w), I); }

inline std::optional<Witness> in_NP_set(const BraidWord& w) {
  const BraidWord a = type_a_image(w);
  for (const Interval& I : intervals(w.group.rank))
    if (stabilizes(a, I)) return Witness::of_interval(I);
  return std::nullopt;
}

/// Independent normalizer test by conjugating generators:
/// w^-1 g w and w g w^-1 lie in the parabolic for every generator g of it.
inline bool normalizes_by_conjugation(const BraidWord& w, const Interval& I) {
  for (int i = I.m; i <= I.max(); ++i) {
    BraidWord g(w.group, {i});
    if (!in_parabolic(inverse(w) * g * w, I)) return false;
    if (!in_parabolic(w * g * inverse(w), I)) return false;
  }
  return true;
}

/// Re-checks a claimed witness for w in P.
inline bool certify_P(const BraidWord& w, const Witness& wit) {
  if (wit.kind == Witness::Kind::Interval) return in_parabolic(w, wit.interval);
  auto k = delta_squared_power(w);
  return k && *k == wit.power;
}

/// Re-checks a claimed witness for w in NP (interval witnesses only).
inline bool certify_NP(const BraidWord& w, const Witness& wit) {
  if (wit.kind == Witness::Kind::DeltaSquaredPower) return delta_squared_power(w).has_value();
  return normalizes(w, wit.interval);
}

}  // namespace pqi
