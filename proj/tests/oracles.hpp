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

#ifndef HYPERELL_TESTS_ORACLES_HPP_
#define HYPERELL_TESTS_ORACLES_HPP_

// Test-only reference computations. None of these call into the library's
// closed forms; they reach the same quantities by other routes.

#include <functional>
#include <utility>
#include <vector>

#include "hyperell/integer.hpp"

namespace hyperell::oracle {

/// Lattice points of the polygon {0 <= y <= a, 0 <= x <= c - e y}: the toric
/// count of h^0(F_e, O(aC0 + cf)) for a >= 0.
inline Count toric_h0(Int e, Int a, Int c) {
  Count n = 0;
  for (Int y = 0; y <= a; ++y)
    for (Int x = 0; x <= c - e * y; ++x) ++n;
  return n;
}

/// Holomorphic Euler characteristic on F_e by surface Riemann-Roch,
/// chi(D) = 1 + (D.D - D.K)/2 with K = -2C0 - (2+e)f.
inline Int surface_chi(Int e, Int a, Int c) {
  auto dot = [e](Int a1, Int c1, Int a2, Int c2) { return -e * a1 * a2 + a1 * c2 + c1 * a2; };
  const Int dd = dot(a, c, a, c);
  const Int dk = dot(a, c, -2, -(2 + e));
  return 1 + (dd - dk) / 2;
}

/// h^1 = h^0 - chi for a >= 0 (h^2 vanishes there).
inline Count surface_h1(Int e, Int a, Int c) { return toric_h0(e, a, c) - surface_chi(e, a, c); }

/// gamma_j = h^1(P^r, I_C(j)) through the scroll surface, j >= 2.
inline Count gamma_via_surface(Int g, Int m, Int b, Int j) {
  if (j < 2) return 0;
  return surface_h1(g + 1 - b, j - 2, j * m + b - 2 * g - 2);
}

/// gamma_j = h^0(O_C(j)) - h^0(O_S(j)) for 1 <= j <= tau, where no form of
/// degree j vanishes on C without vanishing on the projectively normal scroll.
inline Count gamma_via_sections(Int g, Int m, Int b, Int j) {
  const Int d = 2 * m + b;
  return Count(j * d - g + 1) - toric_h0(g + 1 - b, j, j * m);
}

/// Coefficients 0..len-1 of (sum_n HF(n) t^n) (1-t)^{r+1} by repeated
/// differencing of the Hilbert function.
inline std::vector<Count> k_polynomial(const std::function<Count(Int)>& hilbert_function, Int r, Int len) {
  std::vector<Count> s;
  for (Int n = 0; n < len; ++n) s.push_back(hilbert_function(n));
  for (Int pass = 0; pass <= r; ++pass)
    for (Int n = len - 1; n >= 1; --n) s[n] -= s[n - 1];
  return s;
}

/// Hilbert function of R/I_C for a nonspecial linearly normal curve:
/// 1 at n = 0, nd - g + 1 - gamma_n for n >= 1.
inline std::function<Count(Int)> curve_hilbert_function(Int g, Int d, std::function<Count(Int)> gamma) {
  return [=](Int n) -> Count { return n == 0 ? Count(1) : Count(n * d - g + 1) - gamma(n); };
}

/// Factorization types for g+3 <= d <= 2g listed by index range:
/// d = 2k: (k-i, 2i), g+2-k <= i <= floor((g+1)/2);
/// d = 2k+1: (k-i, 2i+1), g+1-k <= i <= floor(g/2).
inline std::vector<std::pair<Int, Int>> parameterized_types(Int g, Int d) {
  std::vector<std::pair<Int, Int>> out;
  const Int k = d / 2;
  if (d % 2 == 0) {
    for (Int i = g + 2 - k; i <= (g + 1) / 2; ++i) out.emplace_back(k - i, 2 * i);
  } else {
    for (Int i = g + 1 - k; i <= g / 2; ++i) out.emplace_back(k - i, 2 * i + 1);
  }
  return out;
}

}  // namespace hyperell::oracle

#endif  // HYPERELL_TESTS_ORACLES_HPP_
