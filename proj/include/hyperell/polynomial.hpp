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

#ifndef HYPERELL_POLYNOMIAL_HPP_
#define HYPERELL_POLYNOMIAL_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperell/integer.hpp"

namespace hyperell {

/// Dense univariate polynomial with exact integer coefficients,
/// coefficient k multiplying lambda^k. Trailing zeros are trimmed so that
/// equality is structural.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Count> coefficients)
      : coeffs_(std::move(coefficients)) {
    trim();
  }

  static IntPolynomial monomial(Count c, std::size_t degree) {
    std::vector<Count> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  /// (1 - lambda)^n
  static IntPolynomial one_minus_lambda_pow(std::size_t n) {
    IntPolynomial result({1});
    const IntPolynomial factor({1, -1});
    for (std::size_t i = 0; i < n; ++i) result = result * factor;
    return result;
  }

  const std::vector<Count>& coefficients() const { return coeffs_; }

  Count coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Count(0);
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of the zero polynomial is reported as -1.
  Int degree() const { return static_cast<Int>(coeffs_.size()) - 1; }

  IntPolynomial& operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
  }

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Count> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return IntPolynomial(std::move(out));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Count> coeffs_;
};

}  // namespace hyperell

#endif  // HYPERELL_POLYNOMIAL_HPP_
