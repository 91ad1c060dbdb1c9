#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qmix {

using cxd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Single structural knob: relative singular-value / eigenvalue threshold
// used for every rank and nullspace decision.
inline constexpr double kDefaultTol = 1e-9;

// Dense decompositions stay well conditioned up to this size; larger
// ensembles are rejected rather than silently degrading.
inline constexpr Index kMaxDim = 64;

// Thrown when an input file cannot be read as the documented schema.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a value violates a documented invariant or precondition.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a requested computation exceeds a resource cap.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal postcondition fails; never silent.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qmix
