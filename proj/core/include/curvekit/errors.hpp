#pragma once

#include <stdexcept>
#include <string>

namespace curvekit {

/// Base class of all curvekit exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A curve-family spec violates one of its construction invariants.
class SpecValidationError : public Error {
 public:
  using Error::Error;
};

/// A derivative order beyond what the curve's derivative source supports.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values encountered while evaluating a curve.
class NumericDomainError : public Error {
 public:
  using Error::Error;
};

/// Grid-doubling residual of a quadrature exceeded the configured tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double coarse, double fine)
      : Error(what), coarse_value(coarse), fine_value(fine) {}
  double coarse_value;
  double fine_value;
};

/// |x' ^ x''| fell below the floor: the osculating plane is undefined.
class DegeneratePlaneError : public Error {
 public:
  using Error::Error;
};

/// A curvature floor required by a transform is violated.
class NotTransformableError : public Error {
 public:
  using Error::Error;
};

/// Speed fell below the regularity floor.
class IrregularCurveError : public Error {
 public:
  using Error::Error;
};

}  // namespace curvekit
