#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipsig/flip_pair.hpp"
#include "flipsig/kernel_signature.hpp"
#include "flipsig/matrix.hpp"
#include "flipsig/symbolic.hpp"
#include "flipsig/zeta.hpp"

namespace flipsig {

/// Half elementary equivalence witness from (A, J) to (B, K):
/// zero-one D, E with A = DE, B = ED, E = K D^T J.
struct HeeWitness {
  IntMatrix d;
  IntMatrix e;
};

/// Strong shift equivalence: a chain of half elementary equivalences through
/// the listed intermediate pairs; pairs.front() is the domain, pairs.back()
/// the codomain, links[k] goes from pairs[k] to pairs[k+1].
struct SseChain {
  std::vector<FlipPair> pairs;
  std::vector<HeeWitness> links;

  std::size_t lag() const { return links.size(); }
};

/// Shift equivalence witness of the given lag: nonnegative integer D, E with
/// A^lag = DE, B^lag = ED, AD = DB, E = K D^T J.
struct SeWitness {
  std::size_t lag = 0;
  IntMatrix d;
  IntMatrix e;
};

/// Witness checks. On failure, *why (if given) receives the violated
/// identity.
bool verify_hee(const FlipPair& p, const FlipPair& q, const HeeWitness& w,
                std::string* why = nullptr);
bool verify_se(const FlipPair& p, const FlipPair& q, const SeWitness& w,
               std::string* why = nullptr);

/// Exhaustive backtracking search for a half elementary equivalence witness:
/// D is filled column by column (entries 0 before 1), E is forced as K D^T J,
/// partial products of DE against A and ED against B prune the tree. Returns
/// the first witness in column-major order of D, or nullopt when none exists
/// (exhaustiveness within the budget). Throws BudgetExceeded when the node
/// budget runs out and AlphabetTooLarge when |p| * |q| > max_bits.
std::optional<HeeWitness> search_hee(const FlipPair& p, const FlipPair& q,
                                     std::uint64_t node_budget = kDefaultBudget,
                                     std::size_t max_bits = 64);

/// Multiplies a chain of half elementary equivalences into a shift
/// equivalence of lag = chain length: D = D_1 ... D_l, E = E_l ... E_1.
/// Every link is re-verified; the result passes verify_se by construction.
SeWitness compose_sse(const SseChain& chain);

/// The standard higher-block chain: links (D_k, E_k) from the k-th to the
/// (k+1)-th higher block pair, D_k(u, v) = [u = initial k-block of v],
/// E_k(v, u) = [u = terminal k-block of v], for k = 1..n-1.
SseChain higher_block_chain(const FlipPair& p, std::size_t n,
                            std::uint64_t budget = kDefaultBudget);

/// Conjugacy induced by an HEE witness on periodic points: y_i is the unique
/// b with D(x_i, b) = E(b, x_{i+1}) = 1. Input and output are one period
/// window. Throws NoImage when uniqueness or existence fails (corrupt
/// witness), BadBlock when x is not cyclically admissible.
Word apply_gamma(const FlipPair& p, const HeeWitness& w, const Word& x);

/// Chain construction from a one-block conjugacy psi : X_A -> X_B whose
/// inverse has window 2m+1. Builds the interleaved alphabets
///   A_k = { (v, w, u) : u, v in B_i(X_B), w in B_j(X_A),
///           u Psi(w) v in B_k(X_B) },  i = floor((k-1)/2), j = k - 2i,
/// their pairs (M_k, F_k), and the connecting witnesses (R_k, S_k) for
/// k = 1..2m; M_1 = A and F_1 = J exactly. Returns the lag-2m chain.
/// Throws NotAConjugacy when psi fails the one-block / flip-equivariance /
/// periodic-point bijectivity checks, WindowTooSmall when 2m+1 does not
/// invert psi on admissible blocks.
SseChain prop_a_chain(const FlipPair& p, const FlipPair& q,
                      const std::vector<std::size_t>& psi, std::size_t m,
                      std::uint64_t budget = kDefaultBudget);

/// Reasons a certificate can name, cheapest first.
enum class CertificateReason {
  SignatureMinusOneCount,
  LeadingSignature,
  ZetaMismatch,
};

const char* certificate_reason_name(CertificateReason r);

/// Evidence that two flip systems are not conjugate.
struct NonConjugacyCertificate {
  CertificateReason reason;
  /// Human-readable sides of the violated invariant.
  std::string lhs;
  std::string rhs;
  /// For ZetaMismatch: first differing power.
  std::size_t degree = 0;
};

/// Tries the invariants in order (leading signature, minus-one counts, Lind
/// zeta through the given degree) and returns the first violated one;
/// nullopt = inconclusive.
std::optional<NonConjugacyCertificate> distinguish(const FlipPair& p,
                                                   const FlipPair& q,
                                                   std::size_t degree = 16);

}  // namespace flipsig
