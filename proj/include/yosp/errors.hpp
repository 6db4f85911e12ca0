#pragma once

#include <stdexcept>
#include <string>

namespace yosp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define YOSP_DEFINE_ERROR(Name)      \
  class Name : public Error {        \
   public:                           \
    using Error::Error;              \
  }

YOSP_DEFINE_ERROR(ParseError);
YOSP_DEFINE_ERROR(PoleError);
YOSP_DEFINE_ERROR(DegreeError);
YOSP_DEFINE_ERROR(InconsistentSamples);
YOSP_DEFINE_ERROR(SingularMatrix);
YOSP_DEFINE_ERROR(MissingDepth);
YOSP_DEFINE_ERROR(ReconstructionInconsistent);
YOSP_DEFINE_ERROR(DepthMismatch);
YOSP_DEFINE_ERROR(NoHighestVector);
YOSP_DEFINE_ERROR(InfiniteDual);
YOSP_DEFINE_ERROR(NotInvariant);
YOSP_DEFINE_ERROR(TruncatedInput);
YOSP_DEFINE_ERROR(NotDominant);
YOSP_DEFINE_ERROR(WeightMismatch);
YOSP_DEFINE_ERROR(RelationViolation);

#undef YOSP_DEFINE_ERROR

}  // namespace yosp
