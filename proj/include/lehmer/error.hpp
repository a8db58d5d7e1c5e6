#pragma once

#include <stdexcept>
#include <string>

namespace lehmer {

enum class ErrorKind {
  // finite fields
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  ContextMismatch,
  LogOfZero,
  NotPrimitive,
  NoEmbedding,
  // polynomials and linear algebra
  ParseError,
  ArityMismatch,
  ZeroPolynomial,
  VariableAbsent,
  DimensionMismatch,
  DivisionNotExact,
  ExtensionBoundExceeded,
  PositiveDimensional,
  // integer lattice
  NotSquarefree,
  SpectralRadiusNotRealCertified,
  NotReciprocal,
  OddDegree,
  NotSalem,
  NotIsometry,
  WrongDimension,
  // cuspidal cubic
  NotOnCurve,
  CuspPoint,
  DegenerateCoefficient,
  NotLehmerRoot,
  CollisionDetected,
  NotCuspidal,
  NotPreserved,
  NotAffine,
  // surface model
  InvariantViolation,
  NoSolution,
  NonUniqueSolution,
  // cli
  UnknownSuite,
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lehmer
