#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqfree {

enum class Errc {
  GroundTooLarge,
  EmptyGround,
  InvalidTerm,
  MixedGroundSets,
  NotProper,
  UnsupportedShape,
  OutOfRange,
  NotAFace,
  VoidComplex,
  GroundTooLargeForOracle,
  NotCM,
  InvalidField,
  Overflow,
  SyntaxError,
  DegreeOutOfRange,
  RepeatedBlock,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::EmptyGround: return "EmptyGround";
    case Errc::InvalidTerm: return "InvalidTerm";
    case Errc::MixedGroundSets: return "MixedGroundSets";
    case Errc::NotProper: return "NotProper";
    case Errc::UnsupportedShape: return "UnsupportedShape";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NotAFace: return "NotAFace";
    case Errc::VoidComplex: return "VoidComplex";
    case Errc::GroundTooLargeForOracle: return "GroundTooLargeForOracle";
    case Errc::NotCM: return "NotCM";
    case Errc::InvalidField: return "InvalidField";
    case Errc::Overflow: return "Overflow";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::RepeatedBlock: return "RepeatedBlock";
  }
  return "Unknown";
}

/// Every domain failure in the library is reported through this type; the
/// code is stable, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure; offset is the byte position in the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(Errc::SyntaxError, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace sqfree
