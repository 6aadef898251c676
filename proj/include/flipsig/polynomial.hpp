#pragma once

#include <string>
#include <vector>

#include "flipsig/matrix.hpp"
#include "flipsig/rational.hpp"

namespace flipsig {

/// Integer polynomial, coefficients ascending by degree (c[0] + c[1] t + ...).
/// Kept normalized: no trailing zero coefficients (zero polynomial has empty c).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  static IntPolynomial from_longs(std::initializer_list<long> coeffs);
  /// Monomial c * t^k.
  static IntPolynomial monomial(const Int& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
  Int leading() const { return c_.empty() ? Int(0) : c_.back(); }

  IntPolynomial derivative() const;
  Rat evaluate(const Rat& t) const;
  /// Horner evaluation at a square matrix.
  IntMatrix evaluate(const IntMatrix& m) const;

  friend IntPolynomial operator+(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator-(const IntPolynomial& x, const IntPolynomial& y);
  friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);
  friend bool operator==(const IntPolynomial& x, const IntPolynomial& y) { return x.c_ == y.c_; }
  friend bool operator!=(const IntPolynomial& x, const IntPolynomial& y) { return !(x == y); }

  /// Renders like "t^7 - 7*t^6 + 19*t^5 - ...". Zero renders "0".
  std::string to_string() const;

 private:
  std::vector<Int> c_;
};

/// Exact division; throws DivisionByZero if y is zero, InvalidFactor if the
/// remainder is nonzero.
IntPolynomial divide_exact(const IntPolynomial& x, const IntPolynomial& y);

/// Primitive gcd (positive leading coefficient) over the integers.
IntPolynomial poly_gcd(const IntPolynomial& x, const IntPolynomial& y);

/// Factors found by the shipped helper: rational roots of the square-free
/// part as monic-in-content linear factors plus an irreducible quadratic
/// leftover when the leftover has degree 2. Anything deeper stays in
/// `remainder` (constant 1 when fully split). Factors are sorted by degree,
/// then by coefficients from the leading one down.
struct FactorList {
  std::vector<IntPolynomial> factors;
  IntPolynomial remainder;
};

FactorList candidate_factors(const IntPolynomial& p);

/// Parses "t", "t-1", "t^2-3t+1", "2t^3 + t - 4"; integer coefficients only.
IntPolynomial parse_polynomial(const std::string& text);

}  // namespace flipsig
