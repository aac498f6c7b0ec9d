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

#ifndef HYPERELL_INTEGER_HPP_
#define HYPERELL_INTEGER_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperell {

/// Small signed integers: genus, degrees, twists, indices.
using Int = std::int64_t;

/// Exact arbitrary-precision count (dimensions, Betti numbers).
using Count = boost::multiprecision::cpp_int;

/// Raised whenever an argument falls outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

/// Binomial coefficient with C(n,k) = 0 for k < 0, k > n or n < 0.
inline Count binomial(Int n, Int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count result = 1;
  for (Int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) here
  }
  return result;
}

/// Floor and ceiling of a/b for b > 0 and any sign of a.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

inline Int ceil_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a > 0)) ++q;
  return q;
}

}  // namespace hyperell

#endif  // HYPERELL_INTEGER_HPP_
