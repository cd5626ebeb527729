#pragma once

#include <stdexcept>
#include <string>

namespace hardylab {

// Base class so callers can catch everything the library throws in one net.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A point fed to a map or test function lies outside its domain.
struct DomainError : Error {
  using Error::Error;
};

// Invalid parameter for a constructor or operation (bad exponent, empty grid,
// non-self-map dilation factor, ...).
struct ParamError : Error {
  using Error::Error;
};

struct UnknownCatalogEntry : ParamError {
  using ParamError::ParamError;
};

struct UnknownFamily : ParamError {
  using ParamError::ParamError;
};

// A limit or iteration failed to settle within its budget.
struct ConvergenceError : Error {
  using Error::Error;
};

// Adaptive panel refinement stalled or an integrand produced non-finite data.
struct QuadratureError : Error {
  using Error::Error;
};

// A line integral was classified as divergent (tail exponent at or below 1,
// or modelled tail mass swamping the bulk).
struct DivergentIntegral : Error {
  using Error::Error;
};

struct NotMember : Error {
  using Error::Error;
};

// Denjoy-Wolff iteration neither converged nor showed a monotone escape.
struct NoConvergence : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

struct RayDisagreement : ConvergenceError {
  using ConvergenceError::ConvergenceError;
};

struct InfimumMismatch : Error {
  using Error::Error;
};

struct DivergenceDetected : Error {
  using Error::Error;
};

// Model-function path integral passed through a zero of the generator.
struct PathThroughZero : Error {
  using Error::Error;
};

struct DegenerateMultiplier : Error {
  using Error::Error;
};

struct UnboundedOperator : Error {
  using Error::Error;
};

struct ModelUnavailable : Error {
  using Error::Error;
};

struct NotApplicable : Error {
  using Error::Error;
};

// CLI-level taxonomy: bad invocation vs. failed computation.
struct ConfigError : Error {
  using Error::Error;
};

struct ComputeError : Error {
  using Error::Error;
};

}  // namespace hardylab
