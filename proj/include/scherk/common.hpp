#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scherk {

using cplx = std::complex<double>;
using Vec3 = std::array<double, 3>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

enum class ErrorCode {
  InvalidInput,
  NotPitot,
  DegenerateVertices,
  SelfIntersecting,
  ZeroArea,
  OffHyperbola,
  WrongBranch,
  DegenerateRightAngle,
  EqualRapidities,
  DivisionDegenerate,
  PoleProximity,
  ToleranceNotMet,
  NewtonDiverged,
  StencilOutOfDomain,
  NoRootFound,
  IoError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline double norm2(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

}  // namespace scherk
