// Copyright (c) 2026 trishape contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trishape {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two vertices coincide within tolerance where a nondegenerate triangle is required.
class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

// All three vertices coincide; the configuration has no shape.
class TotalCollision : public Error {
 public:
  using Error::Error;
};

// Malformed user input (CLI flags, JSON payloads, out-of-range parameters).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Conditioning event has probability below 1e-12.
class DivisionByZeroMeasure : public Error {
 public:
  using Error::Error;
};

// Conditional Monte Carlo estimate with fewer than 100 condition hits.
class InsufficientConditionSamples : public Error {
 public:
  using Error::Error;
};

// Quadrature ran out of patch budget before reaching the requested tolerance.
// Carries the partial estimate and the error bound actually achieved.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& msg, double partial_area, double achieved_err,
                 std::size_t patches_used)
      : Error(msg),
        partial_area_(partial_area),
        achieved_err_(achieved_err),
        patches_used_(patches_used) {}

  double partial_area() const { return partial_area_; }
  double achieved_err() const { return achieved_err_; }
  std::size_t patches_used() const { return patches_used_; }

 private:
  double partial_area_;
  double achieved_err_;
  std::size_t patches_used_;
};

}  // namespace trishape
