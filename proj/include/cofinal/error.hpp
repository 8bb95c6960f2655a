#pragma once

#include <stdexcept>
#include <string>

namespace cofinal {

// Every failure mode the library reports. The CLI maps these onto its
// exit-code contract: input problems -> 2, resource caps -> 3; verified
// negative outcomes (not good, stuck, empty witness list) are results,
// not errors, except ConstructionStuck which carries a partial log.
enum class Errc {
  InvalidInput,
  NotProperSubset,
  OutOfDomain,
  UnknownRule,
  MalformedJson,
  CapExceeded,
  SizeLimit,
  WindowExhausted,
  ConstructionStuck,
  WitnessDisagreement,
  ConflictingConstraint,
  VerificationFailure,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidInput: return "invalid-input";
    case Errc::NotProperSubset: return "not-a-proper-subset";
    case Errc::OutOfDomain: return "out-of-domain";
    case Errc::UnknownRule: return "unknown-rule";
    case Errc::MalformedJson: return "malformed-json";
    case Errc::CapExceeded: return "cap-exceeded";
    case Errc::SizeLimit: return "size-limit";
    case Errc::WindowExhausted: return "window-exhausted";
    case Errc::ConstructionStuck: return "construction-stuck";
    case Errc::WitnessDisagreement: return "witness-disagreement";
    case Errc::ConflictingConstraint: return "conflicting-constraint";
    case Errc::VerificationFailure: return "verification-failure";
  }
  return "unknown";
}

}  // namespace cofinal
