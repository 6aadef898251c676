#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace flipsig {

using Int = mpz_class;
using Rat = mpq_class;

/// Error codes shared across the library. Each failure mode the API
/// contracts name maps to exactly one code.
enum class ErrorCode {
  NotSquare,
  SizeMismatch,
  NotZeroOne,
  NotInvolution,
  NotCompatible,
  NotNonnegative,
  BadBlock,
  BadWitness,
  NoImage,
  NotAConjugacy,
  WindowTooSmall,
  BudgetExceeded,
  AlphabetTooLarge,
  InvalidFactor,
  DegreeMismatch,
  DivisionByZero,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

/// Rational in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Rat& q) { return sgn(q); }

/// Canonical "p" / "p/q" rendering (lowest terms, q > 0).
inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s);

using RatVec = std::vector<Rat>;

}  // namespace flipsig
