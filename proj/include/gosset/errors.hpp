// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace gosset {

/// Argument or precondition violation.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical procedure failed to converge.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File or parse failure while reading input data.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gosset
