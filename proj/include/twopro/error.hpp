#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace twopro {

enum class ErrorCode {
  DuplicateId,
  DanglingBoundary,
  MissingCompositeEntry,
  AxiomViolation,
  UnknownObject,
  NotComposable,
  PreservationViolation,
  CoherenceViolation,
  EnumerationBudgetExceeded,
  NotTwoFiltered,
  InvalidDiagram,
  SearchExhausted,
  SyntaxError,
  UnknownCell,
  BoundaryMismatch,
  IoError,
  ParseError,
  ValidationFailure,
};

const char* error_code_name(ErrorCode c);

// A failed law together with the cells that exhibit the failure.
struct Violation {
  ErrorCode code = ErrorCode::AxiomViolation;
  std::string law;
  std::vector<std::string> witness;

  std::string describe() const;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string law, std::vector<std::string> witness = {});
  explicit Error(Violation v);

  ErrorCode code() const { return v_.code; }
  const Violation& violation() const { return v_; }

 private:
  Violation v_;
};

// Counts candidate families visited by an enumeration. Exceeding the limit
// throws instead of truncating.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 1000000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) overflow();
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  [[noreturn]] void overflow() const;

  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace twopro
