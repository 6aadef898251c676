#include "flipsig/rational.hpp"

namespace flipsig {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NotZeroOne: return "NotZeroOne";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::NotNonnegative: return "NotNonnegative";
    case ErrorCode::BadBlock: return "BadBlock";
    case ErrorCode::BadWitness: return "BadWitness";
    case ErrorCode::NoImage: return "NoImage";
    case ErrorCode::NotAConjugacy: return "NotAConjugacy";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw Error(ErrorCode::ParseError, "bad rational literal: " + s);
  if (q.get_den() == 0)
    throw Error(ErrorCode::DivisionByZero, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace flipsig
