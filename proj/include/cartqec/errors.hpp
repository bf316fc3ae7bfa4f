#pragma once

#include <stdexcept>
#include <string>

namespace cartqec {

/// Failure categories surfaced by the library. Every throwing operation
/// documents which of these it can raise.
enum class Errc {
  CompositeP,
  TooLarge,
  NotADivisor,
  LengthMismatch,
  OutOfRange,
  BadDelta,
  BoundUndefined,
  RenderCap,
  IncompatibleAmbient,
  InvalidSpec,
  NotDualContaining,
  EnlargementTooSmall,
  EmptyCode,
  KTooSmall,
  ParityViolation,
  BadRange,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::CompositeP: return "CompositeP";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::BadDelta: return "BadDelta";
    case Errc::BoundUndefined: return "BoundUndefined";
    case Errc::RenderCap: return "RenderCap";
    case Errc::IncompatibleAmbient: return "IncompatibleAmbient";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::NotDualContaining: return "NotDualContaining";
    case Errc::EnlargementTooSmall: return "EnlargementTooSmall";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::BadRange: return "BadRange";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cartqec
