#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcx {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  InvalidParameter,
  NotAMatching,
  TooLarge,
  FaceNotInComplex,
  VoidComplex,
  BadSubset,
  BadDimension,
  NotPrime,
  CrossCheckMismatch,
  GuardExceeded,
  ParseError,
  UnknownName,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::NotAMatching: return "NotAMatching";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FaceNotInComplex: return "FaceNotInComplex";
    case Errc::VoidComplex: return "VoidComplex";
    case Errc::BadSubset: return "BadSubset";
    case Errc::BadDimension: return "BadDimension";
    case Errc::NotPrime: return "NotPrime";
    case Errc::CrossCheckMismatch: return "CrossCheckMismatch";
    case Errc::GuardExceeded: return "GuardExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownName: return "UnknownName";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mcx
