#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "flipsig/flip_pair.hpp"

namespace flipsig {

/// Default cap on brute-force word enumeration; FLIPSIG_BUDGET overrides it
/// in the CLI, library callers pass their own.
constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// All admissible n-blocks in lexicographic order. n = 0 yields the empty
/// word only. Throws BudgetExceeded when the count would pass the budget.
std::vector<Word> blocks(const ZeroOneMatrix& a, std::size_t n,
                         std::uint64_t budget = kDefaultBudget);

/// All cyclically admissible m-words (= periodic points of period dividing m,
/// read off one period window), lexicographic.
std::vector<Word> periodic_words(const ZeroOneMatrix& a, std::size_t m,
                                 std::uint64_t budget = kDefaultBudget);

/// |{x : sigma^m x = x}| by brute-force enumeration.
Int count_periodic(const ZeroOneMatrix& a, std::size_t m,
                   std::uint64_t budget = kDefaultBudget);

/// |{x : sigma^m x = x and sigma^n(phi(x)) = x}| by brute force, where phi is
/// the one-block flip of p: phi(x)_i = tau(x_{-i}).
Int count_flip_fixed(const FlipPair& p, std::size_t m, std::size_t n,
                     std::uint64_t budget = kDefaultBudget);

/// Whether the period-m window w (cyclically admissible) satisfies
/// sigma^n(phi(x)) = x for the point x it generates.
bool is_flip_fixed(const FlipPair& p, const Word& w, std::size_t n);

/// One period window of phi(x) for the period-m point generated by w.
Word flip_of_periodic(const FlipPair& p, const Word& w);

/// The n-th higher block pair together with its alphabet of n-blocks
/// (lexicographic). n = 1 reproduces the input pair.
struct HigherBlockSystem {
  FlipPair pair;
  std::vector<Word> alphabet;
};

HigherBlockSystem higher_block(const FlipPair& p, std::size_t n,
                               std::uint64_t budget = kDefaultBudget);

}  // namespace flipsig
