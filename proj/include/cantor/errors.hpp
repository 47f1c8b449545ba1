#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CANTOR_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

CANTOR_DEFINE_ERROR(ParseError);
CANTOR_DEFINE_ERROR(OutOfRange);
CANTOR_DEFINE_ERROR(InvalidInterval);
CANTOR_DEFINE_ERROR(NotInjective);
CANTOR_DEFINE_ERROR(NotAMember);
CANTOR_DEFINE_ERROR(NoDifferenceWithinPrefix);
CANTOR_DEFINE_ERROR(InvalidRule);
CANTOR_DEFINE_ERROR(InvalidTag);
CANTOR_DEFINE_ERROR(NoTranscendentalCoordinate);
CANTOR_DEFINE_ERROR(NoAlgebraicCoordinate);
CANTOR_DEFINE_ERROR(NotOnGrid);
CANTOR_DEFINE_ERROR(DegenerateInput);
CANTOR_DEFINE_ERROR(DeviationUnattainable);

#undef CANTOR_DEFINE_ERROR

}  // namespace cantor
