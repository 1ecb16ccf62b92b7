// Copyright 2026 The Sista Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include <fmt/format.h>

namespace sista {

/// Caller broke an operation's precondition (shape mismatch, bad range, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

/// Inconsistent or impossible configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two handles or tensors that must share an architecture do not.
class AlignmentError : public std::runtime_error {
 public:
  explicit AlignmentError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Checkpoint file in a format no registered adapter understands.
class UnsupportedFormatError : public std::runtime_error {
 public:
  explicit UnsupportedFormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// File system failure (missing file, failed write, ...).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Optimization produced a non-finite value.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

template <typename... Args>
[[noreturn]] void fail_contract(fmt::format_string<Args...> f, Args&&... args) {
  throw ContractViolation(fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_config(fmt::format_string<Args...> f, Args&&... args) {
  throw ConfigError(fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_alignment(fmt::format_string<Args...> f, Args&&... args) {
  throw AlignmentError(fmt::format(f, std::forward<Args>(args)...));
}

template <typename... Args>
[[noreturn]] void fail_io(fmt::format_string<Args...> f, Args&&... args) {
  throw IoError(fmt::format(f, std::forward<Args>(args)...));
}

#define SISTA_CHECK(cond, ...)            \
  do {                                    \
    if (!(cond)) {                        \
      ::sista::fail_contract(__VA_ARGS__); \
    }                                     \
  } while (0)

}  // namespace sista
