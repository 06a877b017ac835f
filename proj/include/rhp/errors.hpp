#pragma once

#include <stdexcept>
#include <string>

namespace rhp {

// Base for every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RHP_DECLARE_ERROR(Name)                 \
  class Name : public Error {                   \
   public:                                      \
    explicit Name(const std::string& what)      \
        : Error(#Name ": " + what) {}           \
  }

RHP_DECLARE_ERROR(NoOutEdge);
RHP_DECLARE_ERROR(ShapeMismatch);
RHP_DECLARE_ERROR(PrecondViolation);
RHP_DECLARE_ERROR(MalformedState);
RHP_DECLARE_ERROR(NonTermination);
RHP_DECLARE_ERROR(InstanceTooLarge);
RHP_DECLARE_ERROR(InvalidSpec);
RHP_DECLARE_ERROR(LabelMismatch);
RHP_DECLARE_ERROR(SizeMismatch);
RHP_DECLARE_ERROR(DimTooLarge);
RHP_DECLARE_ERROR(ParseError);

#undef RHP_DECLARE_ERROR

}  // namespace rhp
