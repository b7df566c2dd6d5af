/*
 * Copyright 2026 The gtcent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GTCENT_ERRORS_HPP_
#define GTCENT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gtcent {

// Malformed input: bad node ids, bad weights, parse failures, violated
// preconditions on game or graph arguments.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact routine was asked to work on more players than its bound allows.
class SizeLimitExceeded : public std::runtime_error {
 public:
  SizeLimitExceeded(const std::string& what, std::size_t requested,
                    std::size_t bound)
      : std::runtime_error(what + " (requested " + std::to_string(requested) +
                           ", bound " + std::to_string(bound) + ")"),
        requested_(requested),
        bound_(bound) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

// Iterative solver did not converge, or a counter overflowed.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInput(msg);
}

inline void require_size(std::size_t n, std::size_t bound,
                         const std::string& what) {
  if (n > bound) throw SizeLimitExceeded(what, n, bound);
}

}  // namespace gtcent

#endif  // GTCENT_ERRORS_HPP_
