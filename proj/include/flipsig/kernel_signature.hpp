#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flipsig/flip_pair.hpp"
#include "flipsig/linalg.hpp"
#include "flipsig/matrix.hpp"

namespace flipsig {

/// Jordan chain at eigenvalue 0: v[0] = Ini (initial, in ker A),
/// v[k] = A v[k+1], v.back() = Ter (terminal). Length = v.size().
struct Chain {
  std::vector<RatVec> v;

  std::size_t length() const { return v.size(); }
  const RatVec& ini() const { return v.front(); }
  const RatVec& ter() const { return v.back(); }
};

/// Disjoint chains whose union is a basis of the eventual kernel
/// K(A) = ker A^n.
using CycleBasis = std::vector<Chain>;

/// <u, v>_J = u^T J v.
Rat bilinear(const ZeroOneMatrix& j, const RatVec& u, const RatVec& v);

/// Canonical cycle basis of the eventual kernel: chains built top-down from
/// ker(A^k), new terminals picked greedily from the deterministic kernel
/// basis. Empty when A is nonsingular.
CycleBasis eventual_kernel(const ZeroOneMatrix& a);
CycleBasis eventual_kernel(const IntMatrix& a);

/// Same construction with seeded random terminal picks (random integer
/// combinations of the kernel basis, subject to the same independence
/// conditions). Used to exercise basis-independence of the signature.
CycleBasis eventual_kernel_randomized(const IntMatrix& a, std::uint64_t seed);

/// Whether b is a valid cycle basis for a (chain recurrences hold, initial
/// vectors are in ker a, union is independent and spans the eventual kernel).
bool is_cycle_basis(const IntMatrix& a, const CycleBasis& b);

/// Normal form the signature is read from:
///  (1) <Ini, Ter>_J != 0 on every chain,
///  (2) each chain's Gram matrix under <.,.>_J is anti-diagonal with a
///      constant nonzero anti-diagonal value,
///  (3) distinct chains span J-orthogonal subspaces.
/// Deterministic: chains processed in decreasing length, ties broken by
/// lexicographically smaller terminal vector.
CycleBasis normalize_basis(const FlipPair& p, CycleBasis b);

/// Per-length-class signs of the normalized eventual kernel. index_set is
/// ascending; for a nonsingular matrix the convention is index_set = {0},
/// signs = {0: +1}. leading = sign at the largest index.
struct FlipSignature {
  std::vector<std::size_t> index_set;
  std::map<std::size_t, int> signs;
  int leading = +1;

  friend bool operator==(const FlipSignature& x, const FlipSignature& y) {
    return x.index_set == y.index_set && x.signs == y.signs && x.leading == y.leading;
  }
  friend bool operator!=(const FlipSignature& x, const FlipSignature& y) { return !(x == y); }
};

/// Signature of a normalized basis: per length class, the product over its
/// chains of sign(<Ini, Ter>_J).
FlipSignature signature_of(const FlipPair& p, const CycleBasis& normalized);

/// eventual_kernel + normalize_basis + signature_of.
FlipSignature flip_signature(const FlipPair& p);

/// Partition of a normalized basis under a half elementary equivalence
/// witness D: chain alpha is in the plus boundary when Ter(alpha) lies in
/// the column space of D, else in the minus boundary.
struct BoundaryDecomposition {
  /// side[i] = +1 or -1 for chain i of the basis passed in.
  std::vector<int> side;
  /// Product of chain signs restricted to one side, per length class.
  std::map<std::size_t, int> plus_signs;
  std::map<std::size_t, int> minus_signs;
};

BoundaryDecomposition boundary_decomposition(const FlipPair& domain,
                                             const IntMatrix& d,
                                             const CycleBasis& normalized);

}  // namespace flipsig
