#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaingeo {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NotAntiHermitian,
  SingularCayley,
  Singular,
  Inconsistent,
  NotShilovPoint,
  NotChain,
  NotTransverse,
  NotCoplanar,
  DegeneratePairing,
  NotTransverseToVinf,
  VerticalChain,
  NotOnCircle,
  NoRationalFrame,
  NotInDomain,
  NoPreimageFound,
  NoCommonPoint,
  PreconditionViolation,
  InvalidRegime,
  UnknownCheck,
  Schema,
};

std::string_view to_string(ErrorKind kind);

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace chaingeo
