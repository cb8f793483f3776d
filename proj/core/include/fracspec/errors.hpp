// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracspec {

/// A parameter set or argument violates a stated invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Refinement would produce more pieces than the configured cap.
class SizeCapExceeded : public std::length_error {
 public:
  SizeCapExceeded(std::size_t requested, std::size_t cap)
      : std::length_error("refinement needs " + std::to_string(requested) +
                          " pieces, cap is " + std::to_string(cap)),
        requested_(requested),
        cap_(cap) {}

  [[nodiscard]] std::size_t requested() const { return requested_; }
  [[nodiscard]] std::size_t cap() const { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

}  // namespace fracspec
