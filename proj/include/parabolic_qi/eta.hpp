#pragma once

#include "parabolic_qi/words.hpp"

namespace pqi {

/// The monomorphism A(B_n) -> A(A_n): tau_1 -> sigma_1^2, tau_i -> sigma_i (i >= 2).
inline BraidWord eta(const BraidWord& x) {
  if (x.group.type != Type::B) throw std::invalid_argument("eta expects a type-B word");
  BraidWord out(type_a(x.group.rank));
  out.letters.reserve(x.size() + x.size() / 2);
  for (int l : x.letters) {
    out.letters.push_back(l);
    if (std::abs(l) == 1) out.letters.push_back(l);
  }
  return out;
}

}  // namespace pqi
