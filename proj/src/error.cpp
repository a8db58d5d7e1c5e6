#include "lehmer/error.hpp"

namespace lehmer {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::LogOfZero: return "LogOfZero";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::VariableAbsent: return "VariableAbsent";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::ExtensionBoundExceeded: return "ExtensionBoundExceeded";
    case ErrorKind::PositiveDimensional: return "PositiveDimensional";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::SpectralRadiusNotRealCertified: return "SpectralRadiusNotRealCertified";
    case ErrorKind::NotReciprocal: return "NotReciprocal";
    case ErrorKind::OddDegree: return "OddDegree";
    case ErrorKind::NotSalem: return "NotSalem";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::NotOnCurve: return "NotOnCurve";
    case ErrorKind::CuspPoint: return "CuspPoint";
    case ErrorKind::DegenerateCoefficient: return "DegenerateCoefficient";
    case ErrorKind::NotLehmerRoot: return "NotLehmerRoot";
    case ErrorKind::CollisionDetected: return "CollisionDetected";
    case ErrorKind::NotCuspidal: return "NotCuspidal";
    case ErrorKind::NotPreserved: return "NotPreserved";
    case ErrorKind::NotAffine: return "NotAffine";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace lehmer
