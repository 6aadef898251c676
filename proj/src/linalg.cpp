#include "flipsig/linalg.hpp"

#include <algorithm>

namespace flipsig {

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    Rat inv = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix c = m;
  return rref(c).size();
}

std::size_t rank(const IntMatrix& m) { return rank(RatMatrix(m)); }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> kernel_basis(const IntMatrix& m) {
  return kernel_basis(RatMatrix(m));
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "solve shape mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
  return x;
}

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "char_poly of non-square matrix");
  std::size_t n = m.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -trace(A M_k ... )/k with
  // M_{k+1} = A (M_k + c_{n-k} I). All divisions are exact.
  IntMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Int t = mk.trace();
    if (t % static_cast<long>(k) != 0)
      throw Error(ErrorCode::Internal, "Faddeev-LeVerrier division not exact");
    c[n - k] = -t / static_cast<long>(k);
    if (k < n) {
      IntMatrix next = mk;
      for (std::size_t i = 0; i < n; ++i) next.at(i, i) += c[n - k];
      mk = m * next;
    }
  }
  return IntPolynomial(std::move(c));
}

JordanProfile jordan_profile(const IntMatrix& m, const IntPolynomial& f) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "jordan_profile of non-square matrix");
  if (f.is_zero() || f.degree() == 0)
    throw Error(ErrorCode::InvalidFactor, "factor must have positive degree");
  JordanProfile out;
  out.factor = f;
  IntMatrix fm = f.evaluate(m);
  std::size_t n = m.rows();
  out.rank_sequence.push_back(n);
  IntMatrix p = IntMatrix::identity(n);
  while (true) {
    p = p * fm;
    std::size_t r = rank(p);
    out.rank_sequence.push_back(r);
    if (r == out.rank_sequence[out.rank_sequence.size() - 2]) break;
  }
  std::size_t deg = f.degree();
  std::vector<std::size_t> at_least;  // at_least[k-1] = #blocks of size >= k
  for (std::size_t k = 1; k + 1 <= out.rank_sequence.size(); ++k) {
    std::size_t drop = out.rank_sequence[k - 1] - out.rank_sequence[k];
    if (drop % deg != 0)
      throw Error(ErrorCode::InvalidFactor,
                  "rank drop not divisible by factor degree: " + f.to_string());
    at_least.push_back(drop / deg);
  }
  for (std::size_t k = 1; k <= at_least.size(); ++k) {
    std::size_t exactly = at_least[k - 1] - (k < at_least.size() ? at_least[k] : 0);
    for (std::size_t c = 0; c < exactly; ++c) out.blocks.push_back(k);
  }
  std::sort(out.blocks.rbegin(), out.blocks.rend());
  return out;
}

}  // namespace flipsig
