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

#ifndef HYPERELL_LINEAR_SERIES_HPP_
#define HYPERELL_LINEAR_SERIES_HPP_

#include <cassert>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "hyperell/integer.hpp"
#include "hyperell/scroll.hpp"

namespace hyperell {

/// Factorization type (m,b) of a line bundle L = A^m (x) B on a
/// hyperelliptic curve of arithmetic genus g, where A is the g^1_2 and B is
/// normalized of degree b. The degree d = 2m + b is always derived.
class FactorizationType {
 public:
  FactorizationType(Int g, Int m, Int b) : g_(g), m_(m), b_(b) {
    require(g >= 2, "factorization type: genus must be at least 2");
    require(b >= 0 && b <= g + 1, "factorization type: b must lie in [0, g+1]");
  }

  Int g() const { return g_; }
  Int m() const { return m_; }
  Int b() const { return b_; }
  Int degree() const { return 2 * m_ + b_; }
  /// Dimension of the target projective space for a nonspecial bundle.
  Int r() const { return degree() - g_; }

  friend bool operator==(const FactorizationType&, const FactorizationType&) = default;

 private:
  Int g_;
  Int m_;
  Int b_;
};

inline CohomologyPair riemann_roch(const FactorizationType& ft) {
  const P1Twist first{ft.m()};
  const P1Twist second{ft.m() + ft.b() - ft.g() - 1};
  return {h0_p1(first) + h0_p1(second), h1_p1(first) + h1_p1(second)};
}

inline bool is_nonspecial(const FactorizationType& ft) { return ft.m() + ft.b() >= ft.g(); }

inline bool is_base_point_free(const FactorizationType& ft) {
  if (ft.b() == 0) return ft.m() >= 0;
  return ft.m() + ft.b() >= ft.g() + 1;
}

inline bool is_very_ample(const FactorizationType& ft) {
  const Int g = ft.g(), m = ft.m(), b = ft.b();
  if (b == 0) return m >= g + 1;
  if (b == 1) return m >= g;
  return m + b >= g + 2;
}

/// h^0 of a normalized bundle of degree b.
inline Int normalized_h0(Int g, Int b) {
  require(b >= 0 && b <= g + 1, "normalized_h0: b must lie in [0, g+1]");
  return b == g + 1 ? 2 : 1;
}

/// The three ways a base point free bundle can fail to be very ample.
enum class FailureCase { Alpha, Beta, Gamma };

inline std::string_view to_string(FailureCase c) {
  switch (c) {
    case FailureCase::Alpha: return "Alpha";
    case FailureCase::Beta: return "Beta";
    case FailureCase::Gamma: return "Gamma";
  }
  return "";
}

class AmplenessClass {
 public:
  enum class Tag { NotBasePointFree, BasePointFreeOnly, VeryAmple };

  static AmplenessClass not_base_point_free() { return AmplenessClass(Tag::NotBasePointFree, {}); }
  static AmplenessClass very_ample() { return AmplenessClass(Tag::VeryAmple, {}); }
  static AmplenessClass base_point_free_only(FailureCase c) {
    return AmplenessClass(Tag::BasePointFreeOnly, c);
  }

  Tag tag() const { return tag_; }
  /// Present exactly when tag() is BasePointFreeOnly.
  std::optional<FailureCase> failure_case() const { return case_; }

  friend bool operator==(const AmplenessClass&, const AmplenessClass&) = default;

 private:
  AmplenessClass(Tag tag, std::optional<FailureCase> c) : tag_(tag), case_(c) {}

  Tag tag_;
  std::optional<FailureCase> case_;
};

inline std::string_view to_string(AmplenessClass::Tag t) {
  switch (t) {
    case AmplenessClass::Tag::NotBasePointFree: return "NotBasePointFree";
    case AmplenessClass::Tag::BasePointFreeOnly: return "BasePointFreeOnly";
    case AmplenessClass::Tag::VeryAmple: return "VeryAmple";
  }
  return "";
}

/// The case is decided by (m,b) alone. The structure sheaf (0,0) is base
/// point free but not ample; it is filed under Alpha with the other powers
/// of A that factor through the double cover.
inline AmplenessClass ampleness_class(const FactorizationType& ft) {
  if (!is_base_point_free(ft)) return AmplenessClass::not_base_point_free();
  if (is_very_ample(ft)) return AmplenessClass::very_ample();

  const Int g = ft.g(), m = ft.m(), b = ft.b();
  const bool alpha = b == 0 && m >= 0 && m <= g;
  const bool beta = b >= 2 && b <= g && m + b == g + 1;
  const bool gamma = m == 0 && b == g + 1;
  // b = 1, m = g is very ample, so no fourth case can reach here.
  assert(int(alpha) + int(beta) + int(gamma) == 1);
  if (alpha) return AmplenessClass::base_point_free_only(FailureCase::Alpha);
  if (beta) return AmplenessClass::base_point_free_only(FailureCase::Beta);
  if (!gamma) throw std::logic_error("ampleness_class: unclassified base point free bundle");
  return AmplenessClass::base_point_free_only(FailureCase::Gamma);
}

/// Morphism defined by a complete base point free series.
struct Embedding {
  friend bool operator==(const Embedding&, const Embedding&) = default;
};
/// Double cover of P^1 followed by the degree-m Veronese map.
struct DoubleCoverOfRNC {
  Int degree;
  friend bool operator==(const DoubleCoverOfRNC&, const DoubleCoverOfRNC&) = default;
};
/// Birational onto the image; the b points of |B| collapse to one point of P^{d-g}.
struct BirationalCollapsingB {
  Int points_collapsed;
  Int target_dim;
  friend bool operator==(const BirationalCollapsingB&, const BirationalCollapsingB&) = default;
};
struct MultiCover {
  Int fold;
  friend bool operator==(const MultiCover&, const MultiCover&) = default;
};

using MorphismProfile = std::variant<Embedding, DoubleCoverOfRNC, BirationalCollapsingB, MultiCover>;

inline bool is_birational(const MorphismProfile& profile) {
  return std::holds_alternative<Embedding>(profile) ||
         std::holds_alternative<BirationalCollapsingB>(profile);
}

inline std::string_view morphism_name(const MorphismProfile& profile) {
  return std::visit(
      [](const auto& v) -> std::string_view {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Embedding>) return "Embedding";
        else if constexpr (std::is_same_v<T, DoubleCoverOfRNC>) return "DoubleCoverOfRNC";
        else if constexpr (std::is_same_v<T, BirationalCollapsingB>) return "BirationalCollapsingB";
        else return "MultiCover";
      },
      profile);
}

inline MorphismProfile morphism_profile(const FactorizationType& ft) {
  require(is_base_point_free(ft), "morphism_profile: bundle is not base point free");
  require(ft.degree() > 0, "morphism_profile: degree 0 bundle defines a constant map");
  const AmplenessClass cls = ampleness_class(ft);
  if (cls.tag() == AmplenessClass::Tag::VeryAmple) return Embedding{};
  switch (*cls.failure_case()) {
    case FailureCase::Alpha: return DoubleCoverOfRNC{ft.m()};
    case FailureCase::Beta: return BirationalCollapsingB{ft.b(), ft.degree() - ft.g()};
    case FailureCase::Gamma: return MultiCover{ft.g() + 1};
  }
  throw std::logic_error("morphism_profile: unreachable");
}

/// omega_C = A^{g-1}.
inline FactorizationType canonical_type(Int g) {
  require(g >= 2, "canonical_type: genus must be at least 2");
  return FactorizationType(g, g - 1, 0);
}

}  // namespace hyperell

#endif  // HYPERELL_LINEAR_SERIES_HPP_
