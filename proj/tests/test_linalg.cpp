#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "flipsig/linalg.hpp"
#include "flipsig/polynomial.hpp"
#include "oracles.hpp"
#include "pairs.hpp"

using namespace flipsig;

namespace {

template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST_CASE("rref finds pivots and normalizes rows") {
  RatMatrix m(3, 4);
  long rows[3][4] = {{1, 2, 0, 3}, {2, 4, 1, 7}, {1, 2, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
  std::vector<std::size_t> pivots = rref(m);
  CHECK(pivots == std::vector<std::size_t>{0, 2});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(2, 0) == 0);
  CHECK(m.at(2, 3) == 0);
}

TEST_CASE("rank matches the fraction-free oracle on random matrices") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 1 + trial % 6, c = 1 + (trial * 7) % 6;
    IntMatrix m = random_matrix(rng, r, c);
    CHECK(rank(m) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("rank of the worked transition matrices") {
  CHECK(rank(testpairs::ashley().a.to_int()) == 6);
  CHECK(rank(testpairs::fulltwo_K().a.to_int()) == 1);
  CHECK(rank(testpairs::seven_A().a.to_int()) == 6);
  CHECK(rank(testpairs::seven_B().a.to_int()) == 6);
}

TEST_CASE("kernel_basis spans the kernel") {
  IntMatrix a = testpairs::ashley().a.to_int();
  RatMatrix ra(a);
  std::vector<RatVec> basis = kernel_basis(ra);
  REQUIRE(basis.size() == 2);
  for (const RatVec& v : basis) {
    CHECK(!is_zero(v));
    CHECK(is_zero(ra.apply(v)));
  }
  // Nonsingular: empty kernel.
  CHECK(kernel_basis(IntMatrix::identity(4)).empty());
}

TEST_CASE("solve returns a solution exactly when consistent") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  std::optional<RatVec> sol = solve(m, RatVec{Rat(3), Rat(6)});
  REQUIRE(sol.has_value());
  CHECK(m.apply(*sol) == RatVec{Rat(3), Rat(6)});
  CHECK(!solve(m, RatVec{Rat(3), Rat(7)}).has_value());
}

TEST_CASE("char_poly of the worked matrices") {
  CHECK(char_poly(testpairs::ashley().a.to_int()) ==
        IntPolynomial::from_longs({0, 0, 0, 0, 0, 0, 0, -2, 1}));
  IntPolynomial seven = IntPolynomial::from_longs({0, 1, -7, 19, -26, 19, -7, 1});
  CHECK(char_poly(testpairs::seven_A().a.to_int()) == seven);
  CHECK(char_poly(testpairs::seven_B().a.to_int()) == seven);
  CHECK(seven.to_string() ==
        "t^7 - 7*t^6 + 19*t^5 - 26*t^4 + 19*t^3 - 7*t^2 + t");
}

TEST_CASE("char_poly matches cofactor expansion and Cayley-Hamilton") {
  std::mt19937_64 rng(717);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 5, 5);
    IntPolynomial chi = char_poly(m);
    CHECK(chi == oracle::cofactor_char_poly(m));
    CHECK(chi.evaluate(m).is_zero());
  }
  IntMatrix a = testpairs::ashley().a.to_int();
  CHECK(char_poly(a) == oracle::cofactor_char_poly(a));
  CHECK(char_poly(a).evaluate(a).is_zero());
}

TEST_CASE("jordan_profile block sizes from rank sequences") {
  JordanProfile zero = jordan_profile(testpairs::ashley().a.to_int(),
                                      IntPolynomial::from_longs({0, 1}));
  CHECK(zero.blocks == std::vector<std::size_t>{6, 1});
  CHECK(zero.rank_sequence ==
        std::vector<std::size_t>{8, 6, 5, 4, 3, 2, 1, 1});

  IntPolynomial t_minus_1 = IntPolynomial::from_longs({-1, 1});
  JordanProfile pa = jordan_profile(testpairs::seven_A().a.to_int(), t_minus_1);
  CHECK(pa.blocks == std::vector<std::size_t>{4});
  CHECK(pa.rank_sequence == std::vector<std::size_t>{7, 6, 5, 4, 3, 3});
  JordanProfile pb = jordan_profile(testpairs::seven_B().a.to_int(), t_minus_1);
  CHECK(pb.blocks == std::vector<std::size_t>{2, 2});
  CHECK(pb.rank_sequence == std::vector<std::size_t>{7, 5, 3, 3});

  // Quadratic factor with two simple roots: one block over the splitting field.
  JordanProfile quad = jordan_profile(testpairs::seven_A().a.to_int(),
                                      IntPolynomial::from_longs({1, -3, 1}));
  CHECK(quad.blocks == std::vector<std::size_t>{1});

  // A factor mixing eigenvalues of different block structure: the rank drop
  // is not a multiple of the degree.
  auto code = thrown_code([&] {
    jordan_profile(testpairs::seven_A().a.to_int(),
                   IntPolynomial::from_longs({0, -1, 1}));
  });
  CHECK(code == ErrorCode::InvalidFactor);
}

TEST_CASE("divide_exact and poly_gcd") {
  IntPolynomial t_minus_1 = IntPolynomial::from_longs({-1, 1});
  IntPolynomial quad = IntPolynomial::from_longs({1, -3, 1});
  IntPolynomial prod = t_minus_1 * quad;
  CHECK(divide_exact(prod, t_minus_1) == quad);
  CHECK(divide_exact(prod, quad) == t_minus_1);
  CHECK(thrown_code([&] { divide_exact(quad, t_minus_1); }) ==
        ErrorCode::InvalidFactor);
  CHECK(thrown_code([&] { divide_exact(quad, IntPolynomial()); }) ==
        ErrorCode::DivisionByZero);

  IntPolynomial chi = char_poly(testpairs::seven_A().a.to_int());
  IntPolynomial cube = t_minus_1 * t_minus_1 * t_minus_1;
  CHECK(poly_gcd(chi, chi.derivative()) == cube);
}

TEST_CASE("candidate_factors splits the worked characteristic polynomials") {
  FactorList seven = candidate_factors(char_poly(testpairs::seven_A().a.to_int()));
  REQUIRE(seven.factors.size() == 3);
  CHECK(seven.factors[0] == IntPolynomial::from_longs({-1, 1}));
  CHECK(seven.factors[1] == IntPolynomial::from_longs({0, 1}));
  CHECK(seven.factors[2] == IntPolynomial::from_longs({1, -3, 1}));
  CHECK(seven.remainder == IntPolynomial::from_longs({1}));

  FactorList ash = candidate_factors(char_poly(testpairs::ashley().a.to_int()));
  REQUIRE(ash.factors.size() == 2);
  CHECK(ash.factors[0] == IntPolynomial::from_longs({-2, 1}));
  CHECK(ash.factors[1] == IntPolynomial::from_longs({0, 1}));
}

TEST_CASE("parse_polynomial accepts the documented forms") {
  CHECK(parse_polynomial("t") == IntPolynomial::from_longs({0, 1}));
  CHECK(parse_polynomial("t-1") == IntPolynomial::from_longs({-1, 1}));
  CHECK(parse_polynomial("t^2-3t+1") == IntPolynomial::from_longs({1, -3, 1}));
  CHECK(parse_polynomial("2t^3 + t - 4") == IntPolynomial::from_longs({-4, 1, 0, 2}));
  CHECK(parse_polynomial("t^2 - 3*t + 1") == IntPolynomial::from_longs({1, -3, 1}));
  CHECK(thrown_code([] { parse_polynomial("x+1"); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { parse_polynomial(""); }) == ErrorCode::ParseError);
}
