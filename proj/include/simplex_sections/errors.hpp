#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simplex_sections {

enum class ErrorCode {
  RankDeficient,
  Singular,
  EmptySection,
  PointSection,
  DegenerateInput,
  DegeneratePolytope,
  OutOfRange,
  TolUnreachable,
  NotSupported,
  ZeroHits,
  NoSolution,
  CounterexampleFound,
  NotFound,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every numeric or contract failure in the library.
class SectionError : public std::runtime_error {
 public:
  SectionError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the verification searches when a trial violates the claimed
/// inequality. Carries the offending input so it can be serialized.
class Counterexample : public SectionError {
 public:
  Counterexample(const std::string& what, std::vector<double> witness, double value,
                 double bound)
      : SectionError(ErrorCode::CounterexampleFound, what),
        witness_(std::move(witness)),
        value_(value),
        bound_(bound) {}

  const std::vector<double>& witness() const noexcept { return witness_; }
  double value() const noexcept { return value_; }
  double bound() const noexcept { return bound_; }

 private:
  std::vector<double> witness_;
  double value_;
  double bound_;
};

}  // namespace simplex_sections
