// Independent reference implementations used only by the tests. They share no
// code with the library paths they check: rank by fraction-free elimination,
// characteristic polynomials by cofactor expansion, series exp/sqrt by the
// factorial and binomial summation formulas, and witness search by plain
// exhaustive enumeration.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flipsig/flip_pair.hpp"
#include "flipsig/matrix.hpp"
#include "flipsig/polynomial.hpp"
#include "flipsig/rational.hpp"

namespace oracle {

using flipsig::FlipPair;
using flipsig::Int;
using flipsig::IntMatrix;
using flipsig::IntPolynomial;
using flipsig::Rat;

/// Rank by Bareiss fraction-free elimination.
inline std::size_t bareiss_rank(IntMatrix m) {
  std::size_t rows = m.rows(), cols = m.cols(), r = 0;
  Int prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m.at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int num = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

/// Determinant of a matrix of polynomials by first-row cofactor expansion.
inline IntPolynomial poly_det(const std::vector<std::vector<IntPolynomial>>& m) {
  std::size_t n = m.size();
  if (n == 0) return IntPolynomial::from_longs({1});
  if (n == 1) return m[0][0];
  IntPolynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<IntPolynomial>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    IntPolynomial term = m[0][c] * poly_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// det(tI - m) by cofactor expansion.
inline IntPolynomial cofactor_char_poly(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::vector<IntPolynomial>> p(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = IntPolynomial::monomial(-m.at(i, j), 0);
      if (i == j) p[i][j] = p[i][j] + IntPolynomial::monomial(Int(1), 1);
    }
  return poly_det(p);
}

/// det(I - t m) by cofactor expansion.
inline IntPolynomial resolvent_det(const IntMatrix& m) {
  std::size_t n = m.rows();
  std::vector<std::vector<IntPolynomial>> p(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p[i][j] = IntPolynomial::monomial(-m.at(i, j), 1);
      if (i == j) p[i][j] = p[i][j] + IntPolynomial::monomial(Int(1), 0);
    }
  return poly_det(p);
}

// --- truncated series over the rationals, vector<Rat> with c[k] = t^k ---

using Series = std::vector<Rat>;

inline Series series(std::size_t degree) { return Series(degree + 1, Rat(0)); }

inline Series omul(const Series& a, const Series& b) {
  Series c(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.size() && i + j < c.size(); ++j)
      c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Series oadd(const Series& a, const Series& b) {
  Series c(a);
  for (std::size_t i = 0; i < c.size() && i < b.size(); ++i) c[i] += b[i];
  return c;
}

/// exp(g) = sum_k g^k / k!, needs g[0] = 0.
inline Series oexp(const Series& g) {
  std::size_t deg = g.size() - 1;
  Series out = series(deg), term = series(deg);
  out[0] = 1;
  term[0] = 1;
  for (std::size_t k = 1; k <= deg; ++k) {
    term = omul(term, g);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    for (std::size_t d = 0; d <= deg; ++d) out[d] += term[d] / Rat(fact);
  }
  return out;
}

/// 1/(1-u) = sum_k u^k, needs u[0] = 0.
inline Series ogeom(const Series& u) {
  std::size_t deg = u.size() - 1;
  Series out = series(deg), term = series(deg);
  out[0] = 1;
  term[0] = 1;
  for (std::size_t k = 1; k <= deg; ++k) {
    term = omul(term, u);
    for (std::size_t d = 0; d <= deg; ++d) out[d] += term[d];
  }
  return out;
}

/// (1+v)^(-1/2) = sum_k (-1)^k C(2k,k)/4^k v^k, needs v[0] = 0.
inline Series oinv_sqrt(const Series& v) {
  std::size_t deg = v.size() - 1;
  Series out = series(deg), term = series(deg);
  term[0] = 1;
  for (std::size_t k = 0; k <= deg; ++k) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * k),
                 static_cast<unsigned long>(k));
    Int four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    Rat coef = Rat(binom) / Rat(four_k);
    if (k % 2 == 1) coef = -coef;
    for (std::size_t d = 0; d <= deg; ++d) out[d] += coef * term[d];
    if (k < deg) term = omul(term, v);
  }
  return out;
}

/// Reciprocal of a polynomial as a series: b_0 = 1/p_0,
/// b_n = -(sum_{k>=1} p_k b_{n-k}) / p_0.
inline Series oinverse_poly(const IntPolynomial& p, std::size_t degree) {
  Series b = series(degree);
  Rat p0(p.coeff(0));
  b[0] = Rat(1) / p0;
  for (std::size_t n = 1; n <= degree; ++n) {
    Rat acc(0);
    for (std::size_t k = 1; k <= n && k <= p.degree(); ++k)
      acc += Rat(p.coeff(k)) * b[n - k];
    b[n] = -acc / p0;
  }
  return b;
}

/// Closed-form Lind zeta expansions of the three standard pairs.
/// extra12 adds 8 t^12 inside the exp (the eight-by-eight case); linear
/// switches the numerator from t^2 to 2t + 3t^2 (the identity-flip case).
inline Series closed_form_zeta(std::size_t degree, bool extra12, bool linear) {
  Series two_t2 = series(degree);
  two_t2[2] = 2;
  Series geom = ogeom(two_t2);  // 1/(1-2t^2)
  Series neg = series(degree);
  neg[2] = -2;
  Series inv_sqrt = oinv_sqrt(neg);  // (1-2t^2)^(-1/2)
  Series num = series(degree);
  if (linear) {
    num[1] = 2;
    num[2] = 3;
  } else {
    num[2] = 1;
  }
  Series g = omul(num, geom);
  if (extra12 && degree >= 12) g[12] += 8;
  return omul(inv_sqrt, oexp(g));
}

/// Exhaustive half-elementary-equivalence search over every zero-one D in
/// lexicographic column-major cell order (cell t = D(t % m, t / m), 0 before
/// 1, cell 0 most significant); E is forced entrywise as
/// E(b, a) = D(tau_J(a), tau_K(b)). Plain machine arithmetic; alphabet sizes
/// are tiny by contract.
inline std::optional<IntMatrix> naive_search_hee(const FlipPair& p, const FlipPair& q) {
  std::size_t m = p.alphabet_size(), n = q.alphabet_size();
  std::size_t bits = m * n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
    std::vector<std::vector<int>> d(m, std::vector<int>(n, 0));
    for (std::size_t t = 0; t < bits; ++t)
      if (mask >> (bits - 1 - t) & 1) d[t % m][t / m] = 1;
    std::vector<std::vector<int>> e(n, std::vector<int>(m, 0));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < m; ++a) e[b][a] = d[p.tau[a]][q.tau[b]];
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j) {
        int s = 0;
        for (std::size_t b = 0; b < n; ++b) s += d[i][b] * e[b][j];
        ok = s == (p.a.get(i, j) ? 1 : 0);
      }
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        int s = 0;
        for (std::size_t a = 0; a < m; ++a) s += e[i][a] * d[a][j];
        ok = s == (q.a.get(i, j) ? 1 : 0);
      }
    if (ok) {
      IntMatrix out(m, n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = d[i][j];
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace oracle
