// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace ovc::ocl {

// Three-valued logic with left-biased short-circuiting:
//
//   false and X     = false
//   true  or  X     = true
//   false implies X = true      for X in {true, false, undefined}
//
// Every other combination with an undefined operand is undefined. Note the
// left bias: `undefined or true` is undefined, the rules fire on the left
// operand only. `a implies b` coincides with `(not a) or b` on the full
// 3x3 table.
enum class Tri : std::uint8_t { False = 0, True = 1, Undef = 2 };

constexpr Tri tri_not(Tri v) {
  if (v == Tri::Undef) return Tri::Undef;
  return v == Tri::True ? Tri::False : Tri::True;
}

constexpr Tri tri_and(Tri l, Tri r) {
  if (l == Tri::False) return Tri::False;
  if (l == Tri::Undef || r == Tri::Undef) return Tri::Undef;
  return r;
}

constexpr Tri tri_or(Tri l, Tri r) {
  if (l == Tri::True) return Tri::True;
  if (l == Tri::Undef || r == Tri::Undef) return Tri::Undef;
  return r;
}

constexpr Tri tri_implies(Tri l, Tri r) {
  if (l == Tri::False) return Tri::True;
  if (l == Tri::Undef || r == Tri::Undef) return Tri::Undef;
  return r;
}

constexpr Tri tri_xor(Tri l, Tri r) {
  if (l == Tri::Undef || r == Tri::Undef) return Tri::Undef;
  return l != r ? Tri::True : Tri::False;
}

}  // namespace ovc::ocl
