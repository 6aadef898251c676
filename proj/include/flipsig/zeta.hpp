#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flipsig/flip_pair.hpp"
#include "flipsig/matrix.hpp"

namespace flipsig {

/// Truncated formal power series over the rationals: c[k] is the t^k
/// coefficient, c.size() = degree + 1.
struct QSeries {
  std::size_t degree = 0;
  std::vector<Rat> c;

  static QSeries zero(std::size_t degree);
  static QSeries one(std::size_t degree);
  Rat coeff(std::size_t k) const { return k < c.size() ? c[k] : Rat(0); }

  friend bool operator==(const QSeries& x, const QSeries& y) {
    return x.degree == y.degree && x.c == y.c;
  }
};

QSeries series_add(const QSeries& x, const QSeries& y);
QSeries series_mul(const QSeries& x, const QSeries& y);
/// exp of a series with zero constant term.
QSeries series_exp(const QSeries& x);
/// sqrt of a series with constant term 1.
QSeries series_sqrt(const QSeries& x);
/// Reciprocal of a series with nonzero constant term.
QSeries series_inverse(const QSeries& x);
/// Substitute t -> t^2, truncated to the same degree.
QSeries series_sub_t2(const QSeries& x);
QSeries series_truncate(const QSeries& x, std::size_t degree);

struct SeriesComparison {
  bool equal;
  /// First differing power when !equal (within the common degree range).
  std::size_t first_diff = 0;
};

/// Compares through min(x.degree, y.degree, through_degree).
SeriesComparison series_equal(const QSeries& x, const QSeries& y,
                              std::size_t through_degree);

/// Diagonal of a square matrix.
std::vector<Int> delta_vector(const IntMatrix& m);

/// Exact counts of points fixed by sigma^m (p[m]) and by sigma^n o phi
/// (odd0[m] = p_{2m-1,0}, even0[m] = p_{2m,0}, even1[m] = p_{2m,1}),
/// from the trace/diagonal formulas:
///   p_m        = trace(A^m)
///   p_{2m-1,0} = Delta_J^T A^{m-1} Delta_{AJ}
///   p_{2m,0}   = Delta_J^T A^m     Delta_J
///   p_{2m,1}   = Delta_{JA}^T A^{m-1} Delta_{AJ}
/// Index 0 of each vector is unused padding so that index m holds the value
/// for m.
struct FixedPointTable {
  std::size_t max_m = 0;
  std::vector<Int> p;      // p[m], m = 1..2*max_m
  std::vector<Int> odd0;   // odd0[m] = p_{2m-1,0}, m = 1..max_m
  std::vector<Int> even0;  // even0[m] = p_{2m,0}, m = 1..max_m
  std::vector<Int> even1;  // even1[m] = p_{2m,1}, m = 1..max_m

  /// p_{m,n} after the parity reductions: p_{m,n} = p_{m,0} for odd m and
  /// for even m with even n, p_{m,1} for even m with odd n.
  Int p_mn(std::size_t m, std::size_t n) const;
};

FixedPointTable fixed_point_counts(const FlipPair& p, std::size_t max_m);

/// Artin-Mazur zeta of the shift: exp(sum trace(A^m)/m t^m), truncated.
QSeries artin_mazur(const ZeroOneMatrix& a, std::size_t degree);

/// Lind zeta of the flip system:
///   zeta(t) = zeta_sigma(t^2)^{1/2} * exp(G(t)),
///   G(t) = sum_m [ p_{2m-1,0} t^{2m-1} + (p_{2m,0} + p_{2m,1})/2 t^{2m} ].
QSeries lind_zeta(const FlipPair& p, std::size_t degree = 16);

}  // namespace flipsig
