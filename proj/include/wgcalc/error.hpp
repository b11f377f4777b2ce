// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace wgcalc {

/// Process exit codes used by the command-line driver.
enum class ExitCode : int {
  success = 0,
  failure = 1,
  usage = 2,
  capacity = 3,
  domain = 4,
  verification = 5,
};

/// Base of every error thrown by the library. Each error carries the exit
/// code the CLI maps it to.
class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

/// Malformed input: bad partition, wrong sequence length, unparsable value.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ExitCode::usage, what) {}
};

/// A size guard (max_k) would be exceeded.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ExitCode::capacity, what) {}
};

/// A formula was requested outside the parameter range where it holds, or a
/// matrix precondition (positive definite, invertible) fails.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ExitCode::domain, what) {}
};

/// Numerical failure in the floating-point path (ill-conditioned solve,
/// non-convergent eigensolver).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what)
      : Error(ExitCode::failure, what) {}
};

}  // namespace wgcalc
