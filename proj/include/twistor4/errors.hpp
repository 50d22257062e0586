#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistor4 {

// Three families of failure, matching the CLI exit codes:
//   ParseError       -> 2
//   HypothesisError  -> 3  (the surface does not satisfy a standing assumption)
//   NumericError     -> 4  (breakdown of a computation on valid input)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : ParseError(what + " at offset " + std::to_string(position)), position_(position) {}
  /// 1-based character offset into the input text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

class UnknownIdentifier : public ParseError {
 public:
  explicit UnknownIdentifier(const std::string& name)
      : ParseError("unknown identifier '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NotImmersed : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NotIsothermal : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NotMinimal : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class DomainError : public NumericError {
 public:
  DomainError(const std::string& what, std::string subexpression)
      : NumericError(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}
  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

#define TWISTOR4_NUMERIC_ERROR(Name)      \
  class Name : public NumericError {      \
   public:                                \
    using NumericError::NumericError;     \
  };

TWISTOR4_NUMERIC_ERROR(InvalidArgument)
TWISTOR4_NUMERIC_ERROR(NotAComplexStructure)
TWISTOR4_NUMERIC_ERROR(NonUnitCoords)
TWISTOR4_NUMERIC_ERROR(DegeneratePair)
TWISTOR4_NUMERIC_ERROR(NoCommonPlane)
TWISTOR4_NUMERIC_ERROR(NotSO4)
TWISTOR4_NUMERIC_ERROR(FactorizationFailed)
TWISTOR4_NUMERIC_ERROR(NonUnitQuaternion)
TWISTOR4_NUMERIC_ERROR(FrameConditionViolated)
TWISTOR4_NUMERIC_ERROR(DegenerateSeed)
TWISTOR4_NUMERIC_ERROR(SeedBranchFlip)
TWISTOR4_NUMERIC_ERROR(PoleOfChart)
TWISTOR4_NUMERIC_ERROR(GridTooSmall)

#undef TWISTOR4_NUMERIC_ERROR

}  // namespace twistor4
