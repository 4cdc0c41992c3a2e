#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdecat {

enum class Errc {
  MalformedMatching,
  DisconnectedSurgery,
  AmbientMismatch,
  EndpointClash,
  SizeLimit,
  NotMiddleSummand,
  NotInGZ,
  NotHomogeneous,
  StructureEquationFails,
  GradingIncompatible,
  Unbounded,
  AInfRelationFails,
  BothUnbounded,
  PmcMismatch,
  MissingGrading,
  GenusMismatch,
  ZeroPolynomial,
  BigradingViolation,
  CFKInvariantViolation,
  CalibrationConflict,
  Mismatch,
  A2NonZero,
  FormulaMismatch,
  TheoremViolation,
  BadIndex,
  ParseError,
};

std::string_view errc_name(Errc c);

// Verification failures map to exit code 1 in the CLI, everything else to 2.
bool is_verification_failure(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

// Outcome of a checker that reports instead of throwing.
struct Report {
  bool ok = true;
  Errc code = Errc::Mismatch;
  std::string detail;

  static Report pass() { return {}; }
  static Report fail(Errc c, std::string d) { return {false, c, std::move(d)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace bdecat
