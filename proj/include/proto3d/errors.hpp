#pragma once

#include <stdexcept>
#include <string>

namespace proto3d {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PROTO3D_DEFINE_ERROR(Name)                 \
  class Name : public Error {                      \
   public:                                         \
    explicit Name(const std::string& what_arg)     \
        : Error(std::string(#Name ": ") + what_arg) {} \
  }

PROTO3D_DEFINE_ERROR(SingularTransform);
PROTO3D_DEFINE_ERROR(ShapeMismatch);
PROTO3D_DEFINE_ERROR(InvalidConfig);
PROTO3D_DEFINE_ERROR(IoError);
PROTO3D_DEFINE_ERROR(FormatError);
PROTO3D_DEFINE_ERROR(UnknownInstitution);
PROTO3D_DEFINE_ERROR(BadFold);
PROTO3D_DEFINE_ERROR(InsufficientSubjects);
PROTO3D_DEFINE_ERROR(EmptyMask);
PROTO3D_DEFINE_ERROR(NoValidPrototype);
PROTO3D_DEFINE_ERROR(HeadDisabled);
PROTO3D_DEFINE_ERROR(ShapeError);
PROTO3D_DEFINE_ERROR(ConfigMismatch);
PROTO3D_DEFINE_ERROR(DivergenceError);
PROTO3D_DEFINE_ERROR(EmptyResults);
PROTO3D_DEFINE_ERROR(KeyMismatch);

#undef PROTO3D_DEFINE_ERROR

}  // namespace proto3d
