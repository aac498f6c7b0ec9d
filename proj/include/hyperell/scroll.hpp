// Copyright 2026 The hyperell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERELL_SCROLL_HPP_
#define HYPERELL_SCROLL_HPP_

#include "hyperell/integer.hpp"

namespace hyperell {

/// The line bundle O(n) on the projective line.
struct P1Twist {
  Int n;
};

/// h^0(P^1, O(n)).
inline Count h0_p1(P1Twist t) { return t.n + 1 > 0 ? Count(t.n + 1) : Count(0); }

/// h^1(P^1, O(n)).
inline Count h1_p1(P1Twist t) { return -t.n - 1 > 0 ? Count(-t.n - 1) : Count(0); }

/// Divisor class a*C0 + c*f on a Hirzebruch surface, C0 the minimal
/// section and f a fiber.
struct DivisorClass {
  Int a = 0;
  Int c = 0;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Intersection pairing on F_e: C0^2 = -e, C0.f = 1, f^2 = 0.
inline Int intersect(Int e, DivisorClass x, DivisorClass y) {
  return -e * x.a * y.a + x.a * y.c + x.c * y.a;
}

struct CohomologyPair {
  Count h0;
  Count h1;

  friend bool operator==(const CohomologyPair&, const CohomologyPair&) = default;
};

/// The Hirzebruch surface F_e = P(O + O(b-g-1)) carrying a hyperelliptic
/// curve of genus g together with the bundle of factorization type (m,b).
struct ScrollModel {
  Int e;
  DivisorClass curve_class;
  DivisorClass hyperplane_class;
  Int g;
  Int b;

  friend bool operator==(const ScrollModel&, const ScrollModel&) = default;
};

inline ScrollModel scroll_model(Int g, Int m, Int b) {
  require(g >= 2, "scroll_model: genus must be at least 2");
  require(b >= 0 && b <= g + 1, "scroll_model: normalized degree b must lie in [0, g+1]");
  return ScrollModel{
      .e = g + 1 - b,
      .curve_class = {2, 2 * g + 2 - b},
      .hyperplane_class = {1, m},
      .g = g,
      .b = b,
  };
}

/// (h^0, h^1) of O(aC0 + cf) on F_e via the pushforward
/// pi_* O(aC0 + cf) = sum_{k=0}^{a} O(c - ke). Only a >= -1 is supported.
inline CohomologyPair cohomology_scroll(Int e, DivisorClass d) {
  require(e >= 0, "cohomology_scroll: e must be nonnegative");
  require(d.a >= -1, "cohomology_scroll: C0-coefficient below -1 is not supported");
  CohomologyPair out{0, 0};
  for (Int k = 0; k <= d.a; ++k) {
    const P1Twist t{d.c - k * e};
    out.h0 += h0_p1(t);
    out.h1 += h1_p1(t);
  }
  return out;
}

}  // namespace hyperell

#endif  // HYPERELL_SCROLL_HPP_
