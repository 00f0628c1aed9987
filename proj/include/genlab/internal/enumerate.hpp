// Copyright 2026 The genlab Authors
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

#ifndef GENLAB_INTERNAL_ENUMERATE_HPP_
#define GENLAB_INTERNAL_ENUMERATE_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

namespace genlab::internal {

// Visits every base-d digit string of length n (the ordered tuples).
template <typename Fn>
void for_each_tuple(std::size_t n, std::size_t d, const Fn& fn) {
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    fn(digits);
    std::size_t pos = 0;
    while (pos < n && ++digits[pos] == d) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
}

// Visits every way of writing n as an ordered sum of d nonnegative
// counts (the multisets of size n over d values).
template <typename Fn>
void for_each_composition(std::size_t n, std::size_t d, const Fn& fn) {
  std::vector<std::size_t> counts(d, 0);
  auto recurse = [&](auto&& self, std::size_t remaining,
                     std::size_t slot) -> void {
    if (slot + 1 == d) {
      counts[slot] = remaining;
      fn(counts);
      return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
      counts[slot] = k;
      self(self, remaining - k, slot + 1);
    }
  };
  recurse(recurse, n, 0);
}

// C(n + d - 1, d - 1), as a double so callers can compare against caps
// without overflow.
inline double composition_count(std::size_t n, std::size_t d) {
  double c = 1.0;
  for (std::size_t i = 1; i < d; ++i) {
    c *= static_cast<double>(n + i) / static_cast<double>(i);
  }
  return c;
}

inline double tuple_count(std::size_t n, std::size_t d) {
  return std::pow(static_cast<double>(d), static_cast<double>(n));
}

// log of the multinomial probability of the count vector under the
// given per-value log-weights.
inline double multinomial_log_mass(const std::vector<std::size_t>& counts,
                                   const std::vector<double>& log_weights,
                                   std::size_t n) {
  double log_mass = std::lgamma(static_cast<double>(n) + 1.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    log_mass -= std::lgamma(static_cast<double>(counts[i]) + 1.0);
    if (counts[i] > 0) {
      log_mass += static_cast<double>(counts[i]) * log_weights[i];
    }
  }
  return log_mass;
}

}  // namespace genlab::internal

#endif  // GENLAB_INTERNAL_ENUMERATE_HPP_
