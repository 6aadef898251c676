#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "flipsig/rational.hpp"

namespace flipsig {

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix constant(std::size_t rows, std::size_t cols, const Int& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix pow(std::size_t k) const;
  Int trace() const;
  bool is_zero_one() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
  friend IntMatrix operator-(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y);
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  std::vector<Int> apply(const std::vector<Int>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> a_;
};

/// Dense rational matrix, row-major.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  explicit RatMatrix(const IntMatrix& m);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
  friend bool operator==(const RatMatrix& x, const RatMatrix& y);
  friend bool operator!=(const RatMatrix& x, const RatMatrix& y) { return !(x == y); }

  RatVec apply(const RatVec& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

/// Square zero-one matrix; the transition matrix / flip matrix domain type.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() : n_(0) {}
  explicit ZeroOneMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}
  ZeroOneMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static ZeroOneMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return a_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { a_[i * n_ + j] = v ? 1 : 0; }

  IntMatrix to_int() const;
  RatMatrix to_rat() const;

  friend bool operator==(const ZeroOneMatrix& x, const ZeroOneMatrix& y);
  friend bool operator!=(const ZeroOneMatrix& x, const ZeroOneMatrix& y) { return !(x == y); }
  friend bool operator<(const ZeroOneMatrix& x, const ZeroOneMatrix& y);

 private:
  std::size_t n_;
  std::vector<std::uint8_t> a_;
};

/// Checked conversion: throws NotZeroOne / NotSquare.
ZeroOneMatrix to_zero_one(const IntMatrix& m);

// Vector helpers used throughout the kernel/signature work.
Rat dot(const RatVec& u, const RatVec& v);
RatVec scale(const RatVec& u, const Rat& c);
RatVec add(const RatVec& u, const RatVec& v);
RatVec sub(const RatVec& u, const RatVec& v);
bool is_zero(const RatVec& u);
/// Entrywise lexicographic comparison.
bool lex_less(const RatVec& u, const RatVec& v);

}  // namespace flipsig
