// Copyright (c) 2026 The treecensus authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TREECENSUS_ERRORS_HPP
#define TREECENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace treecensus {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Binary operation on series with different truncation orders.
class OrderMismatchError : public Error {
 public:
  OrderMismatchError(int lhs, int rhs)
      : Error("truncation order mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// Argument outside the operation's domain (r = 0, nonzero constant term, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Iterative solver exhausted its iteration budget; carries the final residual.
class IterationLimitError : public Error {
 public:
  IterationLimitError(const std::string& what, std::string residual)
      : Error(what + " (residual " + residual + ")"), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

/// Requested tolerance is not reachable at the configured precision / step size.
class PrecisionInsufficientError : public Error {
 public:
  explicit PrecisionInsufficientError(const std::string& what) : Error(what) {}
};

/// Input exceeds an implementation bound (enumeration order, series order).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

/// Distribution requested for an order with no trees.
class EmptyFamilyError : public Error {
 public:
  explicit EmptyFamilyError(const std::string& what) : Error(what) {}
};

/// I - F_y has rank deficiency != 1: the system is not strongly connected.
class RankDeficiencyError : public Error {
 public:
  explicit RankDeficiencyError(const std::string& what) : Error(what) {}
};

/// A solver produced a value violating a structural bound (e.g. x0 outside (0, 1/2]).
class SanityViolationError : public Error {
 public:
  explicit SanityViolationError(const std::string& what) : Error(what) {}
};

}  // namespace treecensus

#endif  // TREECENSUS_ERRORS_HPP
