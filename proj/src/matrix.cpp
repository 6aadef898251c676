#include "flipsig/matrix.hpp"

namespace flipsig {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::SizeMismatch, "ragged matrix initializer");
    for (long v : r) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::constant(std::size_t rows, std::size_t cols, const Int& v) {
  IntMatrix m(rows, cols);
  for (auto& x : m.a_) x = v;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::pow(std::size_t k) const {
  if (!square()) throw Error(ErrorCode::NotSquare, "pow of non-square matrix");
  IntMatrix r = identity(rows_);
  IntMatrix base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

Int IntMatrix::trace() const {
  if (!square()) throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  Int t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_zero_one() const {
  for (const auto& x : a_)
    if (x != 0 && x != 1) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& x : a_)
    if (x < 0) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols_ != y.rows_)
    throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  IntMatrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Int& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error(ErrorCode::SizeMismatch, "matrix sum shape mismatch");
  IntMatrix r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
  return r;
}

IntMatrix operator-(const IntMatrix& x, const IntMatrix& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw Error(ErrorCode::SizeMismatch, "matrix difference shape mismatch");
  IntMatrix r(x.rows_, x.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
  return r;
}

bool operator==(const IntMatrix& x, const IntMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::SizeMismatch, "matrix-vector shape mismatch");
  std::vector<Int> r(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

RatMatrix::RatMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
  a_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) a_.emplace_back(m.at(i, j));
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols_ != y.rows_)
    throw Error(ErrorCode::SizeMismatch, "matrix product shape mismatch");
  RatMatrix r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

bool operator==(const RatMatrix& x, const RatMatrix& y) {
  return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_)
    throw Error(ErrorCode::SizeMismatch, "matrix-vector shape mismatch");
  RatVec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

ZeroOneMatrix::ZeroOneMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorCode::NotSquare, "zero-one matrix must be square");
    for (int v : r) {
      if (v != 0 && v != 1) throw Error(ErrorCode::NotZeroOne, "entry outside {0,1}");
      a_.push_back(static_cast<std::uint8_t>(v));
    }
  }
}

ZeroOneMatrix ZeroOneMatrix::identity(std::size_t n) {
  ZeroOneMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

IntMatrix ZeroOneMatrix::to_int() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) m.at(i, j) = 1;
  return m;
}

RatMatrix ZeroOneMatrix::to_rat() const { return RatMatrix(to_int()); }

bool operator==(const ZeroOneMatrix& x, const ZeroOneMatrix& y) {
  return x.n_ == y.n_ && x.a_ == y.a_;
}

bool operator<(const ZeroOneMatrix& x, const ZeroOneMatrix& y) {
  if (x.n_ != y.n_) return x.n_ < y.n_;
  return x.a_ < y.a_;
}

ZeroOneMatrix to_zero_one(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "expected a square matrix");
  if (!m.is_zero_one()) throw Error(ErrorCode::NotZeroOne, "expected zero-one entries");
  ZeroOneMatrix z(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) z.set(i, j, m.at(i, j) == 1);
  return z;
}

Rat dot(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::SizeMismatch, "dot shape mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

RatVec scale(const RatVec& u, const Rat& c) {
  RatVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] * c;
  return r;
}

RatVec add(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::SizeMismatch, "vector sum shape mismatch");
  RatVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

RatVec sub(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::SizeMismatch, "vector difference shape mismatch");
  RatVec r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

bool is_zero(const RatVec& u) {
  for (const auto& x : u)
    if (x != 0) return false;
  return true;
}

bool lex_less(const RatVec& u, const RatVec& v) {
  for (std::size_t i = 0; i < u.size() && i < v.size(); ++i) {
    if (u[i] != v[i]) return u[i] < v[i];
  }
  return u.size() < v.size();
}

}  // namespace flipsig
