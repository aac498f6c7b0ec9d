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

#ifndef HYPERELL_RESOLUTION_HIGH_HPP_
#define HYPERELL_RESOLUTION_HIGH_HPP_

#include <optional>
#include <stdexcept>
#include <string>

#include "hyperell/betti.hpp"
#include "hyperell/integer.hpp"
#include "hyperell/linear_series.hpp"
#include "hyperell/polynomial.hpp"
#include "hyperell/scroll.hpp"

namespace hyperell {

/// Betti diagram of a linearly normal hyperelliptic curve of genus g and
/// degree d = 2g+1+p in P^r, r = d-g. The curve is projectively normal and
/// 3-regular, so only rows 1 and 2 occur; the diagram depends on (g,d) only.
///
/// Row 2 is (i-p) C(r-1,i) for p < i < r. Row 1 past the first column is
/// forced by the Hilbert series g t^2 + (g+p) t + 1 over (1-t)^2. The
/// number of quadrics is C(r+2,2) - h^0(L^2) = C(r-1,2) + p.
inline BettiDiagram betti_high(Int g, Int d) {
  require(g >= 2, "betti_high: genus must be at least 2");
  require(d >= 2 * g + 1, "betti_high: requires d >= 2g+1");
  const Int p = d - 2 * g - 1;
  const Int r = d - g;

  BettiDiagram diagram(r);
  diagram.set(1, 1, BettiEntry::known(binomial(r - 1, 2) + p));

  auto row2 = [&](Int i) -> Count { return i > p && i <= r - 1 ? (i - p) * binomial(r - 1, i) : Count(0); };
  for (Int i = p + 1; i <= r - 1; ++i) diagram.set(i, 2, BettiEntry::known(row2(i)));

  for (Int i = 1; i <= r - 2; ++i) {
    Count v = row2(i) - g * binomial(r - 1, i) + (r - 1) * binomial(r - 1, i + 1) -
              binomial(r - 1, i + 2);
    if (v < 0) throw std::logic_error("betti_high: negative linear syzygy count");
    diagram.set(i + 1, 1, BettiEntry::known(std::move(v)));
  }
  return diagram;
}

/// Numerator of the Hilbert series of R/I over (1-t)^{r+1}, read off a fully
/// known diagram: 1 + sum (-1)^i beta_{i,j} t^{i+j}.
inline IntPolynomial hilbert_numerator(const BettiDiagram& diagram) {
  require(diagram.fully_known(), "hilbert_numerator: diagram has Positive/Unknown entries");
  IntPolynomial n({1});
  for (const auto& [idx, e] : diagram.entries()) {
    Count c = (idx.i % 2 == 0) ? e.value() : Count(-e.value());
    n += IntPolynomial::monomial(std::move(c), static_cast<std::size_t>(idx.i + idx.j));
  }
  return n;
}

/// Whether the diagram reproduces the Hilbert series
/// (g t^2 + (g+p) t + 1) / (1-t)^2 of a degree 2g+1+p curve.
inline bool hilbert_numerator_check(const BettiDiagram& diagram, Int g, Int p) {
  require(diagram.fully_known(), "hilbert_numerator_check: diagram has Positive/Unknown entries");
  require(diagram.r() == g + p + 1, "hilbert_numerator_check: expected r = g+p+1");
  const IntPolynomial expected =
      IntPolynomial({1, g + p, g}) *
      IntPolynomial::one_minus_lambda_pow(static_cast<std::size_t>(diagram.r() - 1));
  return hilbert_numerator(diagram) == expected;
}

struct NpReport {
  Int p_holds;
  Int p_fails;
};

/// N_p holds and N_{p+1} fails for d = 2g+1+p.
inline NpReport np_report_high(Int g, Int d) {
  require(g >= 2, "np_report_high: genus must be at least 2");
  require(d >= 2 * g + 1, "np_report_high: requires d >= 2g+1");
  const Int p = d - 2 * g - 1;
  return {p, p + 1};
}

/// dim H^1(P^1, wedge^i M_Y (x) O(nj - ell)) for a length-ell subscheme of a
/// rational normal curve Y of degree n, M_Y = O(-1)^n.
inline Count rnc_obstruction_h1(Int n, Int ell, Int i, Int j) {
  require(n >= 1, "rnc_obstruction_h1: n must be positive");
  require(j >= 2, "rnc_obstruction_h1: j must be at least 2");
  require(i >= 0 && i <= n, "rnc_obstruction_h1: i must lie in [0, n]");
  require(ell >= 0, "rnc_obstruction_h1: ell must be nonnegative");
  return binomial(n, i) * h1_p1(P1Twist{-i + n * j - ell});
}

struct SecantObstruction {
  enum class Kind { SecantPlaneFromDual, GammaOnMinimalSection };

  Kind kind;
  Int secancy;
  Int plane_dim;
  std::optional<Int> gamma_length;
  std::string note;
};

inline std::string_view to_string(SecantObstruction::Kind k) {
  return k == SecantObstruction::Kind::SecantPlaneFromDual ? "SecantPlaneFromDual"
                                                           : "GammaOnMinimalSection";
}

/// Finite subscheme explaining the failure of N_{p+1}, d = 2g+1+p.
///
/// m >= g-1: any divisor of |L - K| spans a (p+3)-secant (p+1)-plane.
/// m <= g-2: Gamma = C cap C0 has length b and spans <C0>, a
/// (p+g-m)-plane; Gamma lies on the rational normal curve C0.
inline SecantObstruction secant_obstruction(const FactorizationType& ft) {
  require(is_very_ample(ft), "secant_obstruction: bundle is not very ample");
  require(ft.degree() >= 2 * ft.g() + 1, "secant_obstruction: requires d >= 2g+1");
  const Int g = ft.g(), m = ft.m();
  const Int p = ft.degree() - 2 * g - 1;
  if (m >= g - 1) {
    return {SecantObstruction::Kind::SecantPlaneFromDual, p + 3, p + 1, std::nullopt,
            "divisors in |L - K| span (p+3)-secant (p+1)-planes, which obstruct N_{p+1}"};
  }
  const Int plane = p + g - m;
  const Int secancy = plane + (g + 1 - m);
  if (secancy != ft.b()) throw std::logic_error("secant_obstruction: length of Gamma differs from b");
  return {SecantObstruction::Kind::GammaOnMinimalSection, secancy, plane, ft.b(),
          "Gamma = C cap C0 lies on the rational normal curve C0 and obstructs N_{p+1}"};
}

/// Non-vanishing count certifying the Gamma obstruction:
/// rnc_obstruction_h1(plane_dim, b, p+1, 2). Empty for the dual-secant case.
inline std::optional<Count> obstruction_certificate(const FactorizationType& ft) {
  const SecantObstruction ob = secant_obstruction(ft);
  if (ob.kind != SecantObstruction::Kind::GammaOnMinimalSection) return std::nullopt;
  const Int p = ft.degree() - 2 * ft.g() - 1;
  return rnc_obstruction_h1(ob.plane_dim, *ob.gamma_length, p + 1, 2);
}

}  // namespace hyperell

#endif  // HYPERELL_RESOLUTION_HIGH_HPP_
