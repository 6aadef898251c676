#include "flipsig/zeta.hpp"

namespace flipsig {

QSeries QSeries::zero(std::size_t degree) {
  QSeries s;
  s.degree = degree;
  s.c.assign(degree + 1, Rat(0));
  return s;
}

QSeries QSeries::one(std::size_t degree) {
  QSeries s = zero(degree);
  s.c[0] = 1;
  return s;
}

QSeries series_add(const QSeries& x, const QSeries& y) {
  if (x.degree != y.degree) throw Error(ErrorCode::DegreeMismatch, "series degree mismatch");
  QSeries r = QSeries::zero(x.degree);
  for (std::size_t k = 0; k <= r.degree; ++k) r.c[k] = x.coeff(k) + y.coeff(k);
  return r;
}

QSeries series_mul(const QSeries& x, const QSeries& y) {
  if (x.degree != y.degree) throw Error(ErrorCode::DegreeMismatch, "series degree mismatch");
  QSeries r = QSeries::zero(x.degree);
  for (std::size_t i = 0; i <= x.degree; ++i) {
    if (x.c[i] == 0) continue;
    for (std::size_t j = 0; i + j <= y.degree; ++j) r.c[i + j] += x.c[i] * y.c[j];
  }
  return r;
}

QSeries series_exp(const QSeries& x) {
  if (x.coeff(0) != 0)
    throw Error(ErrorCode::DegreeMismatch, "series exp needs zero constant term");
  QSeries f = QSeries::zero(x.degree);
  f.c[0] = 1;
  // f' = x' f: n f_n = sum_{k=1..n} k x_k f_{n-k}.
  for (std::size_t n = 1; n <= x.degree; ++n) {
    Rat s = 0;
    for (std::size_t k = 1; k <= n; ++k)
      if (x.c[k] != 0) s += Rat(static_cast<long>(k)) * x.c[k] * f.c[n - k];
    f.c[n] = s / Rat(static_cast<long>(n));
  }
  return f;
}

QSeries series_sqrt(const QSeries& x) {
  if (x.coeff(0) != 1)
    throw Error(ErrorCode::DegreeMismatch, "series sqrt needs constant term 1");
  QSeries s = QSeries::zero(x.degree);
  s.c[0] = 1;
  // s^2 = x: 2 s_n = x_n - sum_{i=1..n-1} s_i s_{n-i}.
  for (std::size_t n = 1; n <= x.degree; ++n) {
    Rat acc = x.c[n];
    for (std::size_t i = 1; i < n; ++i) acc -= s.c[i] * s.c[n - i];
    s.c[n] = acc / 2;
  }
  return s;
}

QSeries series_inverse(const QSeries& x) {
  if (x.coeff(0) == 0)
    throw Error(ErrorCode::DivisionByZero, "series inverse needs nonzero constant term");
  QSeries r = QSeries::zero(x.degree);
  r.c[0] = 1 / x.c[0];
  for (std::size_t n = 1; n <= x.degree; ++n) {
    Rat s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += x.c[k] * r.c[n - k];
    r.c[n] = -s / x.c[0];
  }
  return r;
}

QSeries series_sub_t2(const QSeries& x) {
  QSeries r = QSeries::zero(x.degree);
  for (std::size_t k = 0; 2 * k <= x.degree; ++k) r.c[2 * k] = x.c[k];
  return r;
}

QSeries series_truncate(const QSeries& x, std::size_t degree) {
  QSeries r = QSeries::zero(degree);
  for (std::size_t k = 0; k <= degree; ++k) r.c[k] = x.coeff(k);
  return r;
}

SeriesComparison series_equal(const QSeries& x, const QSeries& y,
                              std::size_t through_degree) {
  std::size_t lim = std::min({x.degree, y.degree, through_degree});
  for (std::size_t k = 0; k <= lim; ++k)
    if (x.coeff(k) != y.coeff(k)) return SeriesComparison{false, k};
  return SeriesComparison{true, 0};
}

std::vector<Int> delta_vector(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "delta vector of non-square matrix");
  std::vector<Int> d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m.at(i, i);
  return d;
}

Int FixedPointTable::p_mn(std::size_t m, std::size_t n) const {
  if (m == 0 || m > 2 * max_m)
    throw Error(ErrorCode::SizeMismatch, "period outside the table range");
  if (m % 2 == 1) {
    if ((m + 1) / 2 > max_m) throw Error(ErrorCode::SizeMismatch, "period outside the table range");
    return odd0[(m + 1) / 2];
  }
  return n % 2 == 0 ? even0[m / 2] : even1[m / 2];
}

FixedPointTable fixed_point_counts(const FlipPair& p, std::size_t max_m) {
  FixedPointTable t;
  t.max_m = max_m;
  IntMatrix a = p.a.to_int();
  IntMatrix j = p.j.to_int();
  std::vector<Int> dj = delta_vector(j);
  std::vector<Int> daj = delta_vector(a * j);
  std::vector<Int> dja = delta_vector(j * a);
  auto dot_int = [](const std::vector<Int>& u, const std::vector<Int>& v) {
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
  };
  t.p.assign(2 * max_m + 1, Int(0));
  t.odd0.assign(max_m + 1, Int(0));
  t.even0.assign(max_m + 1, Int(0));
  t.even1.assign(max_m + 1, Int(0));
  IntMatrix pw = IntMatrix::identity(a.rows());  // A^{m-1} throughout the loop
  for (std::size_t m = 1; m <= max_m; ++m) {
    t.odd0[m] = dot_int(dj, pw.apply(daj));
    t.even1[m] = dot_int(dja, pw.apply(daj));
    pw = pw * a;
    t.even0[m] = dot_int(dj, pw.apply(dj));
  }
  IntMatrix am = IntMatrix::identity(a.rows());
  for (std::size_t m = 1; m <= 2 * max_m; ++m) {
    am = am * a;
    t.p[m] = am.trace();
  }
  return t;
}

QSeries artin_mazur(const ZeroOneMatrix& a, std::size_t degree) {
  QSeries g = QSeries::zero(degree);
  IntMatrix ai = a.to_int();
  IntMatrix pw = IntMatrix::identity(a.size());
  for (std::size_t m = 1; m <= degree; ++m) {
    pw = pw * ai;
    g.c[m] = make_rat(pw.trace(), Int(static_cast<long>(m)));
  }
  return series_exp(g);
}

QSeries lind_zeta(const FlipPair& p, std::size_t degree) {
  // zeta_sigma(t^2)^{1/2}
  QSeries am = artin_mazur(p.a, degree / 2);
  QSeries am2 = QSeries::zero(degree);
  for (std::size_t k = 0; k <= am.degree; ++k)
    if (2 * k <= degree) am2.c[2 * k] = am.c[k];
  QSeries half = series_sqrt(am2);
  // exp(G)
  FixedPointTable t = fixed_point_counts(p, degree / 2 + 1);
  QSeries g = QSeries::zero(degree);
  for (std::size_t m = 1; 2 * m - 1 <= degree; ++m) g.c[2 * m - 1] = Rat(t.odd0[m]);
  for (std::size_t m = 1; 2 * m <= degree; ++m)
    g.c[2 * m] = Rat(t.even0[m] + t.even1[m]) / 2;
  return series_mul(half, series_exp(g));
}

}  // namespace flipsig
