/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_ERRORS_HPP
#define CHPDE_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ch {

// Precondition / domain violations (CLI exit code 2).
class ContractViolation : public std::invalid_argument {
public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Numeric failures (CLI exit code 3).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

class NonInvertible : public NumericError {
public:
  explicit NonInvertible(const std::string& what) : NumericError(what) {}
};

class NonfiniteValue : public NumericError {
public:
  explicit NonfiniteValue(const std::string& what) : NumericError(what) {}
};

class NotConverged : public NumericError {
public:
  explicit NotConverged(const std::string& what) : NumericError(what) {}
};

class TrivialLimit : public NumericError {
public:
  explicit TrivialLimit(const std::string& what) : NumericError(what) {}
};

class NoProfileFound : public NumericError {
public:
  explicit NoProfileFound(const std::string& what) : NumericError(what) {}
};

class NotEnoughData : public NumericError {
public:
  explicit NotEnoughData(const std::string& what) : NumericError(what) {}
};

class IntegrationStalled : public NumericError {
public:
  explicit IntegrationStalled(const std::string& what) : NumericError(what) {}
};

class NoTurningPoint : public NumericError {
public:
  explicit NoTurningPoint(const std::string& what) : NumericError(what) {}
};

class ContinuationLost : public NumericError {
public:
  ContinuationLost(const std::string& what, double last_good)
      : NumericError(what), last_good_mu(last_good) {}
  double last_good_mu;
};

}  // namespace ch

#endif
