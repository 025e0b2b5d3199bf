#include "twopro/error.hpp"

namespace twopro {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingBoundary: return "DanglingBoundary";
    case ErrorCode::MissingCompositeEntry: return "MissingCompositeEntry";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::PreservationViolation: return "PreservationViolation";
    case ErrorCode::CoherenceViolation: return "CoherenceViolation";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::NotTwoFiltered: return "NotTwoFiltered";
    case ErrorCode::InvalidDiagram: return "InvalidDiagram";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailure: return "ValidationFailure";
  }
  return "Unknown";
}

std::string Violation::describe() const {
  std::string s = error_code_name(code);
  s += "(" + law;
  for (const auto& w : witness) s += ", " + w;
  s += ")";
  return s;
}

Error::Error(ErrorCode code, std::string law, std::vector<std::string> witness)
    : Error(Violation{code, std::move(law), std::move(witness)}) {}

Error::Error(Violation v) : std::runtime_error(v.describe()), v_(std::move(v)) {}

void Budget::overflow() const {
  throw Error(ErrorCode::EnumerationBudgetExceeded, "limit", {std::to_string(limit_)});
}

}  // namespace twopro
