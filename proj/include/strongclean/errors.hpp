#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strongclean {

// Every domain error carries an exit code so the CLI can map failure classes
// to distinct process statuses. Code 0 is success, 1 is reserved for crashes,
// 3 means "the property does not hold" (an expected outcome, not an error).
enum class ErrorCode : int {
  Usage = 2,
  PropertyFails = 3,
  SizeCap = 4,
  NotIdempotent = 5,
  NonCentral = 6,
  NotSurjective = 7,
  InvalidConstruction = 8,
  AxiomFailure = 9,
  UnknownTheorem = 10,
  ZeroPolynomial = 11,
  InvalidWitness = 12,
  NotAUnit = 13,
  Precondition = 14,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : Error(ErrorCode::Usage, msg + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct SizeCapExceeded : Error {
  explicit SizeCapExceeded(const std::string& msg) : Error(ErrorCode::SizeCap, msg) {}
};

struct NotIdempotent : Error {
  explicit NotIdempotent(const std::string& msg) : Error(ErrorCode::NotIdempotent, msg) {}
};

struct NonCentralCoefficient : Error {
  int index;
  NonCentralCoefficient(int i, const std::string& msg)
      : Error(ErrorCode::NonCentral, msg), index(i) {}
};

struct NonCentralParameter : Error {
  explicit NonCentralParameter(const std::string& msg) : Error(ErrorCode::NonCentral, msg) {}
};

struct NotSurjective : Error {
  explicit NotSurjective(const std::string& msg) : Error(ErrorCode::NotSurjective, msg) {}
};

struct InvalidConstruction : Error {
  explicit InvalidConstruction(const std::string& msg)
      : Error(ErrorCode::InvalidConstruction, msg) {}
};

struct AxiomFailureError : Error {
  explicit AxiomFailureError(const std::string& msg) : Error(ErrorCode::AxiomFailure, msg) {}
};

struct UnknownTheorem : Error {
  explicit UnknownTheorem(const std::string& msg) : Error(ErrorCode::UnknownTheorem, msg) {}
};

struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg) : Error(ErrorCode::ZeroPolynomial, msg) {}
};

struct InvalidInputWitness : Error {
  explicit InvalidInputWitness(const std::string& msg) : Error(ErrorCode::InvalidWitness, msg) {}
};

struct NotAUnit : Error {
  explicit NotAUnit(const std::string& msg) : Error(ErrorCode::NotAUnit, msg) {}
};

struct PreconditionFailed : Error {
  explicit PreconditionFailed(const std::string& msg) : Error(ErrorCode::Precondition, msg) {}
};

}  // namespace strongclean
