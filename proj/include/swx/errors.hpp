#pragma once

#include <stdexcept>
#include <string>

namespace swx {

enum class ErrorCode {
  Validation,
  UnsupportedSignature,
  CupValidation,
  Integrality,
  NotCharacteristic,
  InternalConsistency,
  NotInPositiveCone,
  PathLeavesCone,
  OnWall,
  NotApplicable,
  Io,
};

const char* error_name(ErrorCode code);

/// Base of every error raised by the library. what() carries a human
/// readable message; code() identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

#define SWX_DEFINE_ERROR(Name)                                       \
  class Name##Error : public Error {                                 \
   public:                                                           \
    explicit Name##Error(const std::string& message)                 \
        : Error(ErrorCode::Name, message) {}                         \
  };

SWX_DEFINE_ERROR(Validation)
SWX_DEFINE_ERROR(CupValidation)
SWX_DEFINE_ERROR(Integrality)
SWX_DEFINE_ERROR(InternalConsistency)
SWX_DEFINE_ERROR(OnWall)
SWX_DEFINE_ERROR(NotApplicable)
SWX_DEFINE_ERROR(Io)

#undef SWX_DEFINE_ERROR

class UnsupportedSignature : public Error {
 public:
  explicit UnsupportedSignature(const std::string& message)
      : Error(ErrorCode::UnsupportedSignature, message) {}
};

class NotCharacteristic : public Error {
 public:
  NotCharacteristic(const std::string& message, std::size_t violated_index)
      : Error(ErrorCode::NotCharacteristic, message),
        violated_index_(violated_index) {}

  /// Basis index i for which c·e_i ≢ e_i·e_i (mod 2).
  std::size_t violated_index() const noexcept { return violated_index_; }

 private:
  std::size_t violated_index_;
};

class PathLeavesCone : public Error {
 public:
  explicit PathLeavesCone(const std::string& message)
      : Error(ErrorCode::PathLeavesCone, message) {}
};

class NotInPositiveCone : public Error {
 public:
  explicit NotInPositiveCone(const std::string& message)
      : Error(ErrorCode::NotInPositiveCone, message) {}
};

}  // namespace swx
