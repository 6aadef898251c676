#include "flipsig/flip_pair.hpp"

#include <algorithm>
#include <sstream>

namespace flipsig {

std::string word_to_string(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ".";
    out << w[i];
  }
  return out.str();
}

FlipPair validate_flip_pair(const ZeroOneMatrix& a, const ZeroOneMatrix& j,
                            const std::string& name) {
  if (a.size() != j.size())
    throw Error(ErrorCode::SizeMismatch, "A and J have different sizes");
  std::size_t n = a.size();
  // J must be a symmetric permutation matrix; symmetry + permutation = involution.
  std::vector<std::size_t> tau(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0, image = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (j.get(i, k)) {
        ++ones;
        image = k;
      }
    if (ones != 1)
      throw Error(ErrorCode::NotInvolution, "J is not a permutation matrix (row " +
                                                std::to_string(i) + ")");
    tau[i] = image;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (tau[tau[i]] != i)
      throw Error(ErrorCode::NotInvolution, "J is not an involution (symbol " +
                                                std::to_string(i) + ")");
    for (std::size_t k = 0; k < n; ++k)
      if (j.get(i, k) != j.get(k, i))
        throw Error(ErrorCode::NotInvolution, "J is not symmetric");
  }
  // A J = J A^T, entrywise: A(i, tau(k)) = A(k, tau(i)).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a.get(i, tau[k]) != a.get(k, tau[i]))
        throw Error(ErrorCode::NotCompatible, "A J != J A^T at (" + std::to_string(i) +
                                                  "," + std::to_string(k) + ")");
  return FlipPair{name, a, j, std::move(tau)};
}

bool is_flip_pair(const ZeroOneMatrix& a, const ZeroOneMatrix& j) {
  try {
    validate_flip_pair(a, j);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_admissible(const ZeroOneMatrix& a, const Word& w) {
  for (int s : w)
    if (s < 0 || static_cast<std::size_t>(s) >= a.size()) return false;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (!a.get(w[i], w[i + 1])) return false;
  return true;
}

Word flip_block(const FlipPair& p, const Word& w) {
  if (!is_admissible(p.a, w))
    throw Error(ErrorCode::BadBlock, "block is not admissible");
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<int>(p.tau[w[w.size() - 1 - i]]);
  return out;
}

namespace {

void involutions_rec(std::vector<std::size_t>& tau, std::vector<bool>& used,
                     std::size_t n, const ZeroOneMatrix& a,
                     std::vector<ZeroOneMatrix>& out) {
  std::size_t i = 0;
  while (i < n && used[i]) ++i;
  if (i == n) {
    ZeroOneMatrix j(n);
    for (std::size_t s = 0; s < n; ++s) j.set(s, tau[s], true);
    if (is_flip_pair(a, j)) out.push_back(j);
    return;
  }
  used[i] = true;
  tau[i] = i;
  involutions_rec(tau, used, n, a, out);
  for (std::size_t k = i + 1; k < n; ++k) {
    if (used[k]) continue;
    used[k] = true;
    tau[i] = k;
    tau[k] = i;
    involutions_rec(tau, used, n, a, out);
    used[k] = false;
  }
  used[i] = false;
}

}  // namespace

std::vector<ZeroOneMatrix> enumerate_flips(const ZeroOneMatrix& a,
                                           std::size_t max_alphabet) {
  if (a.size() > max_alphabet)
    throw Error(ErrorCode::AlphabetTooLarge,
                "alphabet size " + std::to_string(a.size()) + " exceeds cap " +
                    std::to_string(max_alphabet));
  std::vector<ZeroOneMatrix> out;
  std::vector<std::size_t> tau(a.size());
  std::vector<bool> used(a.size(), false);
  involutions_rec(tau, used, a.size(), a, out);
  return out;
}

}  // namespace flipsig
