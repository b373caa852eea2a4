#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagsub {

enum class Errc {
  UnknownVertex,
  DuplicateLabel,
  InvalidLabel,
  GroundSetTooLarge,
  GroundSetOverlap,
  NotAFace,
  NotDownwardClosed,
  InteriorNotSubset,
  InvalidCarrier,
  BaseNotSimplex,
  BaseMismatch,
  NotHomologySubdivision,
  VertexCollision,
  CarrierMismatch,
  NotFlag,
  NotASphere,
  NotAFacet,
  UnknownFixture,
  MalformedInstance,
  InvalidArgument,
  TooLarge,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::InvalidLabel: return "InvalidLabel";
    case Errc::GroundSetTooLarge: return "GroundSetTooLarge";
    case Errc::GroundSetOverlap: return "GroundSetOverlap";
    case Errc::NotAFace: return "NotAFace";
    case Errc::NotDownwardClosed: return "NotDownwardClosed";
    case Errc::InteriorNotSubset: return "InteriorNotSubset";
    case Errc::InvalidCarrier: return "InvalidCarrier";
    case Errc::BaseNotSimplex: return "BaseNotSimplex";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotHomologySubdivision: return "NotHomologySubdivision";
    case Errc::VertexCollision: return "VertexCollision";
    case Errc::CarrierMismatch: return "CarrierMismatch";
    case Errc::NotFlag: return "NotFlag";
    case Errc::NotASphere: return "NotASphere";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::MalformedInstance: return "MalformedInstance";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace flagsub
