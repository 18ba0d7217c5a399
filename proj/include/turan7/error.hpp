#pragma once

#include <stdexcept>
#include <string>

namespace turan7 {

enum class Errc {
  malformed_rotation,
  non_simple,
  not_planar,
  disconnected,
  not_two_connected,
  too_large,
  guard_exceeded,
  acyclic,
  host_invalid,
  identification_conflict,
  exceptional_overlap,
  parse,
  bad_argument,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_rotation: return "MalformedRotation";
    case Errc::non_simple: return "NonSimple";
    case Errc::not_planar: return "NotPlanar";
    case Errc::disconnected: return "Disconnected";
    case Errc::not_two_connected: return "NotTwoConnected";
    case Errc::too_large: return "TooLarge";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::acyclic: return "Acyclic";
    case Errc::host_invalid: return "HostInvalid";
    case Errc::identification_conflict: return "IdentificationConflict";
    case Errc::exceptional_overlap: return "ExceptionalOverlap";
    case Errc::parse: return "Parse";
    case Errc::bad_argument: return "BadArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace turan7
