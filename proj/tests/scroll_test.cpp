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

#include <gtest/gtest.h>

#include "hyperell/scroll.hpp"
#include "oracles.hpp"

namespace hyperell {
namespace {

TEST(P1CohomologyTest, Examples) {
  EXPECT_EQ(h0_p1({3}), 4);
  EXPECT_EQ(h0_p1({0}), 1);
  EXPECT_EQ(h0_p1({-2}), 0);
  EXPECT_EQ(h1_p1({-2}), 1);
  EXPECT_EQ(h1_p1({0}), 0);
  for (Int g = 2; g <= 12; ++g) EXPECT_EQ(h1_p1({-g - 1}), g);
}

TEST(P1CohomologyTest, EulerCharacteristic) {
  for (Int n = -50; n <= 50; ++n) EXPECT_EQ(h0_p1({n}) - h1_p1({n}), n + 1) << n;
}

TEST(ScrollModelTest, Examples) {
  const ScrollModel s = scroll_model(10, 3, 9);
  EXPECT_EQ(s.e, 2);
  EXPECT_EQ(s.curve_class, (DivisorClass{2, 13}));
  EXPECT_EQ(s.hyperplane_class, (DivisorClass{1, 3}));

  const ScrollModel t = scroll_model(2, 3, 1);
  EXPECT_EQ(t.e, 2);
  EXPECT_EQ(t.curve_class, (DivisorClass{2, 5}));
  EXPECT_EQ(t.hyperplane_class, (DivisorClass{1, 3}));

  const ScrollModel u = scroll_model(10, 0, 11);
  EXPECT_EQ(u.e, 0);
  EXPECT_EQ(u.curve_class, (DivisorClass{2, 11}));
  EXPECT_EQ(u.hyperplane_class, (DivisorClass{1, 0}));
}

TEST(ScrollModelTest, RejectsOutOfRange) {
  EXPECT_THROW(scroll_model(10, 3, 12), DomainError);
  EXPECT_THROW(scroll_model(10, 3, -1), DomainError);
  EXPECT_THROW(scroll_model(1, 0, 0), DomainError);
}

TEST(ScrollModelTest, InvariantsAndDegreeCheck) {
  for (Int g = 2; g <= 25; ++g) {
    for (Int b = 0; b <= g + 1; ++b) {
      for (Int m = -3; m <= 2 * g + 4; ++m) {
        const ScrollModel s = scroll_model(g, m, b);
        EXPECT_EQ(s.e + s.b, g + 1);
        EXPECT_EQ(intersect(s.e, s.hyperplane_class, s.curve_class), 2 * m + b);
      }
    }
  }
}

TEST(ScrollCohomologyTest, Examples) {
  EXPECT_EQ(cohomology_scroll(2, {1, 3}), (CohomologyPair{6, 0}));
  EXPECT_EQ(cohomology_scroll(5, {0, 0}), (CohomologyPair{1, 0}));
  EXPECT_EQ(cohomology_scroll(3, {-1, 7}), (CohomologyPair{0, 0}));
  EXPECT_EQ(cohomology_scroll(1, {0, -2}), (CohomologyPair{0, 1}));
}

TEST(ScrollCohomologyTest, RejectsVeryNegativeSectionCoefficient) {
  EXPECT_THROW(cohomology_scroll(1, {-2, 0}), DomainError);
  EXPECT_THROW(cohomology_scroll(-1, {0, 0}), DomainError);
}

TEST(ScrollCohomologyTest, AdditiveOverPushforwardForSectionDegreeOne) {
  for (Int e = 0; e <= 8; ++e) {
    for (Int c = -20; c <= 20; ++c) {
      const CohomologyPair h = cohomology_scroll(e, {1, c});
      EXPECT_EQ(h.h0, h0_p1({c}) + h0_p1({c - e}));
      EXPECT_EQ(h.h1, h1_p1({c}) + h1_p1({c - e}));
    }
  }
}

// Toric section count plus surface Riemann-Roch reach h^0 and h^1 on F_e
// without the pushforward splitting.
TEST(ScrollCohomologyTest, AgreesWithToricCountAndSurfaceRiemannRoch) {
  for (Int e = 0; e <= 6; ++e) {
    for (Int a = 0; a <= 6; ++a) {
      for (Int c = -15; c <= 15; ++c) {
        const CohomologyPair h = cohomology_scroll(e, {a, c});
        EXPECT_EQ(h.h0, oracle::toric_h0(e, a, c)) << e << " " << a << " " << c;
        EXPECT_EQ(h.h1, oracle::surface_h1(e, a, c)) << e << " " << a << " " << c;
      }
    }
  }
}

}  // namespace
}  // namespace hyperell
