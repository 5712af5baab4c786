#pragma once

#include <stdexcept>
#include <string>

namespace bbq {

// Base of every error raised by the library. The CLI maps these onto exit
// codes (CapacityExceeded -> 3, everything else -> 2).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define BBQ_DEFINE_ERROR(Name)                                                 \
  class Name : public Error {                                                  \
  public:                                                                      \
    using Error::Error;                                                        \
  }

BBQ_DEFINE_ERROR(NotInvertible);
BBQ_DEFINE_ERROR(DimensionMismatch);
BBQ_DEFINE_ERROR(CapacityExceeded);
BBQ_DEFINE_ERROR(ShapeError);
BBQ_DEFINE_ERROR(IndexOutOfRange);
BBQ_DEFINE_ERROR(NotAntisymmetric);
BBQ_DEFINE_ERROR(InvariantViolation);
BBQ_DEFINE_ERROR(ParseError);
BBQ_DEFINE_ERROR(UnmatchedCrossing);
BBQ_DEFINE_ERROR(SignMismatch);
BBQ_DEFINE_ERROR(UnknownLink);

#undef BBQ_DEFINE_ERROR

} // namespace bbq
