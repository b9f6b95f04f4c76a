#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsnn {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched or malformed dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violated a documented precondition (e.g. a non-Hermitian
/// matrix passed to a Hermitian-only routine).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// An evolved state failed the density-matrix invariants. Indicates a bug
/// in the integrator, never repaired silently.
class IntegratorFault : public Error {
 public:
  using Error::Error;
};

/// Invalid or incomplete experiment configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsnn
