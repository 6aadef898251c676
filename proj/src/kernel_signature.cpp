#include "flipsig/kernel_signature.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace flipsig {

namespace {

/// Incremental row-echelon reducer for exact independence tests.
struct Reducer {
  std::vector<RatVec> rows;        // echelonized, pivot normalized to 1
  std::vector<std::size_t> pivots;

  /// Reduces v against the stored rows; if independent, inserts it and
  /// returns true.
  bool add(RatVec v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rat& c = v[pivots[k]];
      if (c != 0) {
        Rat f = c;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
      }
    }
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    Rat inv = v[p];
    for (auto& x : v) x /= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

Chain rebuild_chain(const RatMatrix& a, RatVec terminal, std::size_t length) {
  Chain c;
  c.v.assign(length, RatVec());
  RatVec w = std::move(terminal);
  for (std::size_t i = length; i-- > 0;) {
    c.v[i] = w;
    if (i > 0) w = a.apply(w);
  }
  if (is_zero(c.v.front()))
    throw Error(ErrorCode::Internal, "chain terminal lost height during rebuild");
  if (!is_zero(a.apply(c.v.front())))
    throw Error(ErrorCode::Internal, "chain initial vector is not in the kernel");
  return c;
}

/// Candidate supplier for new terminals at one height.
using Picker = std::function<std::vector<RatVec>(std::size_t height,
                                                 const std::vector<RatVec>& kernel)>;

CycleBasis build_chains(const IntMatrix& a, const Picker& extra_candidates) {
  if (!a.square()) throw Error(ErrorCode::NotSquare, "eventual kernel of non-square matrix");
  std::size_t n = a.rows();
  RatMatrix ar(a);
  // Kernels of successive powers until the dimension stabilizes.
  std::vector<std::vector<RatVec>> kers{{}};  // kers[k] = basis of ker a^k
  IntMatrix p = a;
  while (true) {
    std::vector<RatVec> kb = kernel_basis(p);
    if (kb.size() == kers.back().size()) break;
    kers.push_back(std::move(kb));
    if (kers.size() > n + 1) throw Error(ErrorCode::Internal, "kernel growth did not stabilize");
    p = p * a;
  }
  std::size_t s = kers.size() - 1;  // maximal chain length
  CycleBasis chains;
  for (std::size_t k = s; k >= 1; --k) {
    Reducer red;
    for (const auto& v : kers[k - 1]) red.add(v);
    // Height-k vectors inherited from longer chains span
    // (ker a^{k-1} + a ker a^{k+1}) together with the seed above.
    std::size_t longer = 0;
    for (const auto& c : chains) {
      if (c.length() <= k) continue;
      if (!red.add(c.v[k - 1]))
        throw Error(ErrorCode::Internal, "inherited chain vectors are dependent");
      ++longer;
    }
    std::size_t need = kers[k].size() - kers[k - 1].size() - longer;
    std::vector<RatVec> candidates;
    if (extra_candidates) {
      auto ex = extra_candidates(k, kers[k]);
      candidates.insert(candidates.end(), ex.begin(), ex.end());
    }
    candidates.insert(candidates.end(), kers[k].begin(), kers[k].end());
    std::size_t made = 0;
    for (const auto& v : candidates) {
      if (made == need) break;
      if (red.add(v)) {
        chains.push_back(rebuild_chain(ar, v, k));
        ++made;
      }
    }
    if (made != need)
      throw Error(ErrorCode::Internal, "could not complete the chain basis");
  }
  return chains;
}

int chain_sign(const ZeroOneMatrix& j, const Chain& c) {
  Rat v = bilinear(j, c.ini(), c.ter());
  return sign_of(v);
}

}  // namespace

Rat bilinear(const ZeroOneMatrix& j, const RatVec& u, const RatVec& v) {
  if (u.size() != j.size() || v.size() != j.size())
    throw Error(ErrorCode::SizeMismatch, "bilinear form shape mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t k = 0; k < j.size(); ++k)
      if (j.get(i, k) && v[k] != 0) s += u[i] * v[k];
  }
  return s;
}

CycleBasis eventual_kernel(const IntMatrix& a) { return build_chains(a, nullptr); }

CycleBasis eventual_kernel(const ZeroOneMatrix& a) { return eventual_kernel(a.to_int()); }

CycleBasis eventual_kernel_randomized(const IntMatrix& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Picker picker = [&rng](std::size_t, const std::vector<RatVec>& kernel) {
    std::vector<RatVec> out;
    if (kernel.empty()) return out;
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (std::size_t tries = 0; tries < 4 * kernel.size(); ++tries) {
      RatVec v(kernel.front().size(), Rat(0));
      for (const auto& b : kernel) {
        int c = coeff(rng);
        if (c != 0) v = add(v, scale(b, Rat(c)));
      }
      if (!is_zero(v)) out.push_back(std::move(v));
    }
    return out;
  };
  return build_chains(a, picker);
}

bool is_cycle_basis(const IntMatrix& a, const CycleBasis& b) {
  if (!a.square()) return false;
  RatMatrix ar(a);
  Reducer red;
  std::size_t total = 0;
  for (const auto& c : b) {
    if (c.v.empty()) return false;
    if (!is_zero(ar.apply(c.v.front()))) return false;
    for (std::size_t i = 0; i + 1 < c.v.size(); ++i)
      if (ar.apply(c.v[i + 1]) != c.v[i]) return false;
    for (const auto& v : c.v) {
      if (!red.add(v)) return false;
      ++total;
    }
  }
  // Spans the eventual kernel: dimension matches ker a^n.
  IntMatrix p = a.pow(a.rows());
  return total == kernel_basis(p).size();
}

CycleBasis normalize_basis(const FlipPair& p, CycleBasis b) {
  RatMatrix ar = p.a.to_rat();
  const ZeroOneMatrix& j = p.j;
  CycleBasis pending = std::move(b);
  CycleBasis final_chains;
  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), [](const Chain& x, const Chain& y) {
      if (x.length() != y.length()) return x.length() > y.length();
      return lex_less(x.ter(), y.ter());
    });
    Chain alpha = std::move(pending.front());
    pending.erase(pending.begin());
    std::size_t q = alpha.length();
    // (1) make <Ini, Ter> nonzero, mixing with a same-length partner chain.
    if (bilinear(j, alpha.ini(), alpha.ter()) == 0) {
      const Chain* partner = nullptr;
      for (const auto& c : pending)
        if (c.length() == q && bilinear(j, alpha.ini(), c.ter()) != 0) {
          partner = &c;
          break;
        }
      if (!partner)
        throw Error(ErrorCode::Internal, "no partner chain for a degenerate chain");
      bool fixed = false;
      for (int k : {1, -1, 2, -2, 3, -3}) {
        Chain cand = rebuild_chain(ar, sub(alpha.ter(), scale(partner->ter(), Rat(k))), q);
        if (bilinear(j, cand.ini(), cand.ter()) != 0) {
          alpha = std::move(cand);
          fixed = true;
          break;
        }
      }
      if (!fixed)
        throw Error(ErrorCode::Internal, "mixing constants exhausted");
    }
    // (2) anti-diagonalize the chain's Gram matrix: kill <A^d w, w> for
    // d < q-1 top-down; each correction subtracts a multiple of the
    // height-(d+1) chain vector from the terminal.
    Rat b1 = bilinear(j, alpha.ini(), alpha.ter());
    for (std::size_t d = q - 1; d-- > 0;) {
      Rat gd = bilinear(j, alpha.v[q - 1 - d], alpha.ter());
      if (gd != 0) {
        RatVec t2 = sub(alpha.ter(), scale(alpha.v[d], gd / (2 * b1)));
        alpha = rebuild_chain(ar, std::move(t2), q);
      }
    }
    // (3) project every remaining chain off span(alpha); correcting the
    // terminal corrects the whole chain since A is self-adjoint for <.,.>_J.
    Rat a_val = bilinear(j, alpha.ini(), alpha.ter());
    for (auto& c : pending) {
      RatVec w = c.ter();
      bool touched = false;
      for (std::size_t jj = 0; jj < q; ++jj) {
        Rat coef = bilinear(j, w, alpha.v[q - 1 - jj]) / a_val;
        if (coef != 0) {
          w = sub(w, scale(alpha.v[jj], coef));
          touched = true;
        }
      }
      if (touched) c = rebuild_chain(ar, std::move(w), c.length());
    }
    final_chains.push_back(std::move(alpha));
  }
  return final_chains;
}

FlipSignature signature_of(const FlipPair& p, const CycleBasis& normalized) {
  FlipSignature sig;
  if (normalized.empty()) {
    sig.index_set = {0};
    sig.signs[0] = +1;
    sig.leading = +1;
    return sig;
  }
  for (const auto& c : normalized) {
    int s = chain_sign(p.j, c);
    if (s == 0)
      throw Error(ErrorCode::BadWitness, "chain basis is not normalized");
    auto [it, fresh] = sig.signs.emplace(c.length(), s);
    if (!fresh) it->second *= s;
  }
  for (const auto& [len, s] : sig.signs) sig.index_set.push_back(len);
  sig.leading = sig.signs.rbegin()->second;
  return sig;
}

FlipSignature flip_signature(const FlipPair& p) {
  return signature_of(p, normalize_basis(p, eventual_kernel(p.a)));
}

BoundaryDecomposition boundary_decomposition(const FlipPair& domain,
                                             const IntMatrix& d,
                                             const CycleBasis& normalized) {
  if (d.rows() != domain.alphabet_size())
    throw Error(ErrorCode::SizeMismatch, "witness row count does not match the domain");
  RatMatrix dr(d);
  BoundaryDecomposition out;
  for (const auto& c : normalized) {
    bool in_range = solve(dr, c.ter()).has_value();
    out.side.push_back(in_range ? +1 : -1);
  }
  for (std::size_t i = 0; i < normalized.size(); ++i) {
    std::size_t len = normalized[i].length();
    out.plus_signs.emplace(len, +1);
    out.minus_signs.emplace(len, +1);
    int s = chain_sign(domain.j, normalized[i]);
    if (s == 0) throw Error(ErrorCode::BadWitness, "chain basis is not normalized");
    (out.side[i] > 0 ? out.plus_signs : out.minus_signs)[len] *= s;
  }
  return out;
}

}  // namespace flipsig
