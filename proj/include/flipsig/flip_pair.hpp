#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flipsig/matrix.hpp"

namespace flipsig {

/// Symbol word over an alphabet {0..n-1}.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

/// A transition matrix together with a compatible flip matrix:
/// J is a symmetric permutation involution and A J = J A^T.
/// tau is the symbol involution J encodes.
struct FlipPair {
  std::string name;
  ZeroOneMatrix a;
  ZeroOneMatrix j;
  std::vector<std::size_t> tau;

  std::size_t alphabet_size() const { return a.size(); }
};

/// Validates the flip-pair axioms and extracts tau. Throws
/// NotSquare / SizeMismatch / NotZeroOne / NotInvolution / NotCompatible.
FlipPair validate_flip_pair(const ZeroOneMatrix& a, const ZeroOneMatrix& j,
                            const std::string& name = "");

bool is_flip_pair(const ZeroOneMatrix& a, const ZeroOneMatrix& j);

/// Image of an admissible block under the block flip: reverse the word and
/// apply tau to each symbol. Throws BadBlock if w is not admissible for p.
Word flip_block(const FlipPair& p, const Word& w);

bool is_admissible(const ZeroOneMatrix& a, const Word& w);

/// All flip matrices compatible with a: every involutive permutation matrix J
/// with A J = J A^T, in the canonical involution enumeration order (smallest
/// unmatched symbol fixed first, then paired with each larger symbol in
/// order). Throws AlphabetTooLarge past the cap.
std::vector<ZeroOneMatrix> enumerate_flips(const ZeroOneMatrix& a,
                                           std::size_t max_alphabet = 10);

}  // namespace flipsig
