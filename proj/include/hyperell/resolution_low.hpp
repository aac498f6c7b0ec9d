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

#ifndef HYPERELL_RESOLUTION_LOW_HPP_
#define HYPERELL_RESOLUTION_LOW_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hyperell/betti.hpp"
#include "hyperell/integer.hpp"
#include "hyperell/linear_series.hpp"
#include "hyperell/scroll.hpp"

namespace hyperell {

namespace detail {

inline void require_low_degree(const FactorizationType& ft, const char* op) {
  require(is_very_ample(ft), std::string(op) + ": bundle is not very ample");
  require(ft.degree() <= 2 * ft.g(), std::string(op) + ": requires d <= 2g");
}

}  // namespace detail

struct LowDegreeInvariants {
  Int nu;
  Int tau;
  Int p;

  friend bool operator==(const LowDegreeInvariants&, const LowDegreeInvariants&) = default;
};

/// For very ample L with d <= 2g (so 2 <= b, m+b >= g+2, m >= 1):
///   nu  = ceil((b-1) / (m+b-g-1))
///   tau = floor((2g+1-b) / m)
///   p   = (m+b-g-1) nu - b + 1
inline LowDegreeInvariants low_invariants(const FactorizationType& ft) {
  detail::require_low_degree(ft, "low_invariants");
  const Int g = ft.g(), m = ft.m(), b = ft.b();
  const Int slope = m + b - g - 1;
  const Int nu = ceil_div(b - 1, slope);
  const Int tau = floor_div(2 * g + 1 - b, m);
  return {nu, tau, slope * nu - b + 1};
}

/// gamma_j = h^1(P^r, I_C(j)), the j-th graded piece of the Hartshorne-Rao
/// module. Zero for j in {0, 1} (nondegenerate and linearly normal).
inline Count rao_dimension(const FactorizationType& ft, Int j) {
  detail::require_low_degree(ft, "rao_dimension");
  require(j >= 0, "rao_dimension: j must be nonnegative");
  const Int g = ft.g(), m = ft.m(), b = ft.b();
  Count total = 0;
  for (Int k = 0; k <= j - 2; ++k) total += h0_p1(P1Twist{k * (g + 1 - b) + 2 * g - b - j * m});
  return total;
}

/// gamma_j computed on the scroll: h^1(S, O_S((j-2)C0 + (jm+b-2g-2)f)).
inline Count oracle_rao(const FactorizationType& ft, Int j) {
  detail::require_low_degree(ft, "oracle_rao");
  require(j >= 2, "oracle_rao: j must be at least 2");
  const Int g = ft.g(), m = ft.m(), b = ft.b();
  return cohomology_scroll(g + 1 - b, DivisorClass{j - 2, j * m + b - 2 * g - 2}).h1;
}

struct RaoValue {
  Int j;
  Count value;

  friend bool operator==(const RaoValue&, const RaoValue&) = default;
};

struct RaoProfile {
  std::vector<RaoValue> gamma;
};

inline RaoProfile rao_profile(const FactorizationType& ft, Int j_max) {
  require(j_max >= 1, "rao_profile: j_max must be at least 1");
  RaoProfile out;
  for (Int j = 1; j <= j_max; ++j) out.gamma.push_back({j, rao_dimension(ft, j)});
  return out;
}

/// Castelnuovo-Mumford regularity nu + 1.
inline Int regularity(const FactorizationType& ft) { return low_invariants(ft).nu + 1; }

/// Betti diagram of I_C in P^r, r = d-g, as far as it is determined.
///
///   row 1            i C(r-1, i+1), the linear strand of the scroll S
///   rows 2..tau-1    zero
///   rows tau..nu-1   Unknown
///   row nu           zero for i <= p, Positive at p+1, Unknown after,
///                    gamma_{nu-1} at i = r
///   rows > nu        zero ((nu+1)-regularity)
inline BettiDiagram betti_low(const FactorizationType& ft) {
  const LowDegreeInvariants inv = low_invariants(ft);
  const Int r = ft.r();
  BettiDiagram diagram(r);

  for (Int i = 1; i <= r; ++i) diagram.set(i, 1, BettiEntry::known(i * binomial(r - 1, i + 1)));

  for (Int j = std::max<Int>(inv.tau, 2); j <= inv.nu - 1; ++j)
    for (Int i = 1; i <= r; ++i) diagram.set(i, j, BettiEntry::unknown());

  for (Int i = inv.p + 1; i <= r - 1; ++i)
    diagram.set(i, inv.nu, i == inv.p + 1 ? BettiEntry::positive() : BettiEntry::unknown());
  diagram.set(r, inv.nu, BettiEntry::known(rao_dimension(ft, inv.nu - 1)));
  return diagram;
}

struct NnuPReport {
  Int nu;
  /// Largest p with N_{nu,p}; empty when even N_{nu,1} fails.
  std::optional<Int> p_holds;
  Int p_fails;
};

inline NnuPReport n_nu_p_report(const FactorizationType& ft) {
  const LowDegreeInvariants inv = low_invariants(ft);
  if (inv.p == 0) return {inv.nu, std::nullopt, 1};
  return {inv.nu, inv.p, inv.p + 1};
}

/// Recovers (m,b) from d, the regularity index nu and the N_{nu,p} index:
///   m = d-g-1 - (2g+1+p-d)/(nu-2),  b = 2g+2-d + 2(2g+1+p-d)/(nu-2).
inline FactorizationType invert_from_resolution(Int g, Int d, Int nu, Int p) {
  const std::string bad = "inconsistent resolution data";
  require(g >= 2, "invert_from_resolution: genus must be at least 2");
  require(d >= g + 3 && d <= 2 * g, bad + ": requires g+3 <= d <= 2g");
  require(nu >= 3, bad + ": nu must be at least 3");
  require(p >= 0, bad + ": p must be nonnegative");
  const Int excess = 2 * g + 1 + p - d;
  require(excess % (nu - 2) == 0, bad + ": (2g+1+p-d) is not divisible by nu-2");
  const Int q = excess / (nu - 2);
  const Int m = d - g - 1 - q;
  const Int b = 2 * g + 2 - d + 2 * q;
  require(b >= 0 && b <= g + 1, bad + ": normalized degree out of range");
  FactorizationType ft(g, m, b);
  require(is_very_ample(ft), bad + ": recovered type is not very ample");
  const LowDegreeInvariants inv = low_invariants(ft);
  require(inv.nu == nu && inv.p == p, bad + ": forward invariants disagree");
  return ft;
}

/// All very ample factorization types of degree d, by decreasing m.
inline std::vector<FactorizationType> enumerate_types(Int g, Int d) {
  require(g >= 2, "enumerate_types: genus must be at least 2");
  std::vector<FactorizationType> out;
  for (Int b = 0; b <= g + 1; ++b) {
    if ((d - b) % 2 != 0) continue;
    FactorizationType ft(g, (d - b) / 2, b);
    if (is_very_ample(ft)) out.push_back(ft);
  }
  return out;
}

/// Number of distinct Betti diagrams in degree g+3 <= d <= 2g, one per type.
inline Int count_distinct_betti(Int g, Int d) {
  require(g >= 2, "count_distinct_betti: genus must be at least 2");
  require(d >= g + 3 && d <= 2 * g, "count_distinct_betti: requires g+3 <= d <= 2g");
  const Int k = d / 2;
  return d % 2 == 0 ? k - ceil_div(g + 1, 2) : k - ceil_div(g, 2);
}

}  // namespace hyperell

#endif  // HYPERELL_RESOLUTION_LOW_HPP_
