#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "flipsig/matrix.hpp"
#include "flipsig/polynomial.hpp"

namespace flipsig {

/// In-place reduced row echelon form. Pivot choice: first row with a nonzero
/// entry in the leftmost unresolved column (exact arithmetic needs no
/// magnitude pivoting), so the result is deterministic.
/// Returns the pivot column indices in ascending order.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Kernel basis from the RREF: one vector per free column, free columns in
/// ascending order, with a 1 in the free coordinate.
std::vector<RatVec> kernel_basis(const RatMatrix& m);
std::vector<RatVec> kernel_basis(const IntMatrix& m);

/// One solution of m x = b if consistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);

/// Monic characteristic polynomial det(tI - m) by the Faddeev-LeVerrier
/// recurrence; every division is exact over the integers.
IntPolynomial char_poly(const IntMatrix& m);

/// Jordan block sizes attached to one irreducible factor of the
/// characteristic polynomial.
struct JordanProfile {
  IntPolynomial factor;
  /// Block sizes, descending, one entry per block (over the splitting field
  /// of the factor).
  std::vector<std::size_t> blocks;
  /// rank(f(m)^k) for k = 0, 1, ... through stabilization.
  std::vector<std::size_t> rank_sequence;
};

/// Profile from the rank sequence of powers of f(m):
/// #blocks of size >= k equals (r_{k-1} - r_k) / deg f.
/// Throws InvalidFactor when that division is not exact (f is not a power of
/// an irreducible factor pattern compatible with m).
JordanProfile jordan_profile(const IntMatrix& m, const IntPolynomial& f);

}  // namespace flipsig
