//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_ERROR_HPP_
#define TEPC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tepc {

enum class ErrorKind {
  kInvalidParameter,
  kUnsupportedSize,
  kBindingMismatch,
  kNotLabelable,
  kWitnessFound,
  kMalformedInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) { }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace tepc

#endif // TEPC_ERROR_HPP_
