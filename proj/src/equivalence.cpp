#include "flipsig/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace flipsig {

namespace {

bool set_why(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

/// E = K D^T J entrywise: E(b, a) = D(tau_J(a), tau_K(b)).
IntMatrix forced_e(const FlipPair& p, const FlipPair& q, const IntMatrix& d) {
  IntMatrix e(q.alphabet_size(), p.alphabet_size());
  for (std::size_t b = 0; b < q.alphabet_size(); ++b)
    for (std::size_t a = 0; a < p.alphabet_size(); ++a)
      e.at(b, a) = d.at(p.tau[a], q.tau[b]);
  return e;
}

}  // namespace

bool verify_hee(const FlipPair& p, const FlipPair& q, const HeeWitness& w,
                std::string* why) {
  std::size_t m = p.alphabet_size(), n = q.alphabet_size();
  if (w.d.rows() != m || w.d.cols() != n || w.e.rows() != n || w.e.cols() != m)
    return set_why(why, "witness shapes do not match the pairs");
  if (!w.d.is_zero_one() || !w.e.is_zero_one())
    return set_why(why, "witness matrices must be zero-one");
  if (w.e != forced_e(p, q, w.d)) return set_why(why, "E != K D^T J");
  if (w.d * w.e != p.a.to_int()) return set_why(why, "D E != A");
  if (w.e * w.d != q.a.to_int()) return set_why(why, "E D != B");
  return true;
}

bool verify_se(const FlipPair& p, const FlipPair& q, const SeWitness& w,
               std::string* why) {
  std::size_t m = p.alphabet_size(), n = q.alphabet_size();
  if (w.d.rows() != m || w.d.cols() != n || w.e.rows() != n || w.e.cols() != m)
    return set_why(why, "witness shapes do not match the pairs");
  if (!w.d.is_nonnegative() || !w.e.is_nonnegative())
    return set_why(why, "witness matrices must be nonnegative");
  IntMatrix a = p.a.to_int(), b = q.a.to_int();
  if (w.d * w.e != a.pow(w.lag)) return set_why(why, "D E != A^lag");
  if (w.e * w.d != b.pow(w.lag)) return set_why(why, "E D != B^lag");
  if (a * w.d != w.d * b) return set_why(why, "A D != D B");
  if (w.e != forced_e(p, q, w.d)) return set_why(why, "E != K D^T J");
  return true;
}

std::optional<HeeWitness> search_hee(const FlipPair& p, const FlipPair& q,
                                     std::uint64_t node_budget, std::size_t max_bits) {
  std::size_t m = p.alphabet_size(), n = q.alphabet_size();
  if (m * n > max_bits)
    throw Error(ErrorCode::AlphabetTooLarge,
                "search space " + std::to_string(m * n) + " bits exceeds cap " +
                    std::to_string(max_bits));
  // Variables: entries of D in column-major order (column c, row r) -> c*m + r.
  std::size_t nvars = m * n;
  auto var = [m](std::size_t row, std::size_t col) { return col * m + row; };

  struct Term {
    std::size_t v1, v2;  // variable indices; v1 == v2 means a squared entry
    // DFS state:
    int unassigned;  // variables of the term still free (1 or 2)
    bool dead;       // some assigned variable is 0
  };
  struct Constraint {
    int target;
    std::vector<std::size_t> terms;  // indices into the term pool
    // DFS state:
    int sum;   // determined terms that evaluate to 1
    int open;  // terms not yet determined
  };
  std::vector<Term> terms;
  std::vector<Constraint> cons;
  // A(a, a') = sum_b D(a, b) D(tau_J a', tau_K b).
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t a2 = 0; a2 < m; ++a2) {
      Constraint c;
      c.target = p.a.get(a, a2) ? 1 : 0;
      for (std::size_t b = 0; b < n; ++b) {
        Term t{var(a, b), var(p.tau[a2], q.tau[b]), 0, false};
        c.terms.push_back(terms.size());
        terms.push_back(t);
      }
      cons.push_back(std::move(c));
    }
  // B(b, b') = sum_a D(tau_J a, tau_K b) D(a, b').
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t b2 = 0; b2 < n; ++b2) {
      Constraint c;
      c.target = q.a.get(b, b2) ? 1 : 0;
      for (std::size_t a = 0; a < m; ++a) {
        Term t{var(p.tau[a], q.tau[b]), var(a, b2), 0, false};
        c.terms.push_back(terms.size());
        terms.push_back(t);
      }
      cons.push_back(std::move(c));
    }
  for (auto& t : terms) t.unassigned = t.v1 == t.v2 ? 1 : 2;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> touching(nvars);
  for (std::size_t ci = 0; ci < cons.size(); ++ci)
    for (std::size_t ti : cons[ci].terms) {
      touching[terms[ti].v1].push_back({ci, ti});
      if (terms[ti].v2 != terms[ti].v1) touching[terms[ti].v2].push_back({ci, ti});
    }
  for (auto& c : cons) {
    c.sum = 0;
    c.open = static_cast<int>(c.terms.size());
  }

  std::vector<int> assign(nvars, -1);
  std::uint64_t nodes = 0;

  // Journal entries for backtracking: term killed (dead) or completed (sum+1).
  struct Step {
    std::size_t ci, ti;
    enum { Killed, Completed, Counted } what;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t v) -> bool {
    if (v == nvars) return true;
    for (int val : {0, 1}) {
      if (++nodes > node_budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "search exceeded node budget of " + std::to_string(node_budget));
      assign[v] = val;
      std::vector<Step> journal;
      bool feasible = true;
      for (const auto& [ci, ti] : touching[v]) {
        Term& t = terms[ti];
        Constraint& c = cons[ci];
        if (t.dead) continue;
        if (val == 0) {
          t.dead = true;
          --c.open;
          journal.push_back({ci, ti, Step::Killed});
        } else {
          --t.unassigned;
          journal.push_back({ci, ti, Step::Completed});
          if (t.unassigned == 0) {
            --c.open;
            ++c.sum;
            journal.push_back({ci, ti, Step::Counted});
          }
        }
        if (c.sum > c.target || c.sum + c.open < c.target) feasible = false;
      }
      if (feasible && dfs(v + 1)) return true;
      for (auto it = journal.rbegin(); it != journal.rend(); ++it) {
        Term& t = terms[it->ti];
        Constraint& c = cons[it->ci];
        switch (it->what) {
          case Step::Killed:
            t.dead = false;
            ++c.open;
            break;
          case Step::Completed:
            ++t.unassigned;
            break;
          case Step::Counted:
            ++c.open;
            --c.sum;
            break;
        }
      }
      assign[v] = -1;
    }
    return false;
  };

  if (!dfs(0)) return std::nullopt;
  IntMatrix d(m, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < m; ++r) d.at(r, c) = assign[var(r, c)];
  HeeWitness w{d, forced_e(p, q, d)};
  std::string why;
  if (!verify_hee(p, q, w, &why))
    throw Error(ErrorCode::Internal, "search produced an invalid witness: " + why);
  return w;
}

SeWitness compose_sse(const SseChain& chain) {
  if (chain.pairs.size() != chain.links.size() + 1)
    throw Error(ErrorCode::BadWitness, "chain needs one more pair than links");
  std::string why;
  for (std::size_t k = 0; k < chain.links.size(); ++k)
    if (!verify_hee(chain.pairs[k], chain.pairs[k + 1], chain.links[k], &why))
      throw Error(ErrorCode::BadWitness,
                  "link " + std::to_string(k + 1) + " is not a valid witness: " + why);
  std::size_t m = chain.pairs.front().alphabet_size();
  std::size_t n = chain.pairs.back().alphabet_size();
  SeWitness w;
  w.lag = chain.links.size();
  w.d = IntMatrix::identity(m);
  w.e = IntMatrix::identity(n);
  for (const auto& link : chain.links) w.d = w.d * link.d;
  for (auto it = chain.links.rbegin(); it != chain.links.rend(); ++it)
    w.e = w.e * it->e;
  if (!verify_se(chain.pairs.front(), chain.pairs.back(), w, &why))
    throw Error(ErrorCode::Internal, "composed witness fails verification: " + why);
  return w;
}

SseChain higher_block_chain(const FlipPair& p, std::size_t n, std::uint64_t budget) {
  if (n == 0) throw Error(ErrorCode::BadBlock, "higher block order must be positive");
  SseChain chain;
  chain.pairs.push_back(p);
  std::vector<Word> prev_alpha = blocks(p.a, 1, budget);
  for (std::size_t k = 2; k <= n; ++k) {
    HigherBlockSystem next = higher_block(p, k, budget);
    std::size_t rows = prev_alpha.size(), cols = next.alphabet.size();
    IntMatrix d(rows, cols), e(cols, rows);
    std::map<Word, std::size_t> prev_index;
    for (std::size_t i = 0; i < rows; ++i) prev_index[prev_alpha[i]] = i;
    for (std::size_t v = 0; v < cols; ++v) {
      const Word& wv = next.alphabet[v];
      Word prefix(wv.begin(), wv.end() - 1);
      Word suffix(wv.begin() + 1, wv.end());
      d.at(prev_index.at(prefix), v) = 1;
      e.at(v, prev_index.at(suffix)) = 1;
    }
    chain.links.push_back(HeeWitness{std::move(d), std::move(e)});
    chain.pairs.push_back(next.pair);
    prev_alpha = std::move(next.alphabet);
  }
  std::string why;
  for (std::size_t k = 0; k < chain.links.size(); ++k)
    if (!verify_hee(chain.pairs[k], chain.pairs[k + 1], chain.links[k], &why))
      throw Error(ErrorCode::Internal, "higher block link failed: " + why);
  return chain;
}

Word apply_gamma(const FlipPair& p, const HeeWitness& w, const Word& x) {
  std::size_t m = p.alphabet_size();
  if (w.d.rows() != m || w.e.cols() != m || w.d.cols() != w.e.rows())
    throw Error(ErrorCode::BadWitness, "witness shapes do not match the domain");
  if (x.empty()) throw Error(ErrorCode::BadBlock, "empty periodic word");
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t next = (i + 1) % x.size();
    if (x[i] < 0 || static_cast<std::size_t>(x[i]) >= m ||
        !p.a.get(x[i], x[next]))
      throw Error(ErrorCode::BadBlock, "word is not cyclically admissible");
  }
  std::size_t cols = w.d.cols();
  Word y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t next = (i + 1) % x.size();
    int found = -1;
    for (std::size_t b = 0; b < cols; ++b) {
      if (w.d.at(x[i], b) == 1 && w.e.at(b, x[next]) == 1) {
        if (found >= 0)
          throw Error(ErrorCode::NoImage, "transition image is not unique");
        found = static_cast<int>(b);
      }
    }
    if (found < 0) throw Error(ErrorCode::NoImage, "transition has no image");
    y[i] = found;
  }
  return y;
}

namespace {

struct Triple {
  Word v, w, u;

  bool operator<(const Triple& o) const {
    return std::tie(v, w, u) < std::tie(o.v, o.w, o.u);
  }
  bool operator==(const Triple& o) const {
    return v == o.v && w == o.w && u == o.u;
  }
};

Word psi_image(const std::vector<std::size_t>& psi, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = static_cast<int>(psi[w[i]]);
  return out;
}

Word concat3(const Word& u, const Word& mid, const Word& v) {
  Word out;
  out.reserve(u.size() + mid.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word reversed_tau(const std::vector<std::size_t>& tau, const Word& w) {
  Word out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out[i] = static_cast<int>(tau[w[w.size() - 1 - i]]);
  return out;
}

/// Higher-block 2-block rule on words of equal length over matrix a.
bool words_overlap(const ZeroOneMatrix& a, const Word& x, const Word& y) {
  std::size_t k = x.size();
  if (!a.get(x[k - 1], y[k - 1])) return false;
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (x[i + 1] != y[i]) return false;
  return true;
}

void validate_psi(const FlipPair& p, const FlipPair& q,
                  const std::vector<std::size_t>& psi, std::size_t m,
                  std::uint64_t budget) {
  if (psi.size() != p.alphabet_size())
    throw Error(ErrorCode::SizeMismatch, "psi must map every domain symbol");
  for (std::size_t a = 0; a < psi.size(); ++a)
    if (psi[a] >= q.alphabet_size())
      throw Error(ErrorCode::SizeMismatch, "psi maps outside the codomain alphabet");
  for (std::size_t a = 0; a < psi.size(); ++a)
    for (std::size_t a2 = 0; a2 < psi.size(); ++a2)
      if (p.a.get(a, a2) && !q.a.get(psi[a], psi[a2]))
        throw Error(ErrorCode::NotAConjugacy, "psi is not a one-block code");
  for (std::size_t a = 0; a < psi.size(); ++a)
    if (psi[p.tau[a]] != q.tau[psi[a]])
      throw Error(ErrorCode::NotAConjugacy, "psi does not intertwine the flips");
  // Bijectivity on periodic points through period 2m+1.
  for (std::size_t period = 1; period <= 2 * m + 1; ++period) {
    std::vector<Word> dom = periodic_words(p.a, period, budget);
    std::vector<Word> images;
    images.reserve(dom.size());
    for (const Word& x : dom) images.push_back(psi_image(psi, x));
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
      throw Error(ErrorCode::NotAConjugacy,
                  "psi is not injective on periodic points of period " +
                      std::to_string(period));
    std::vector<Word> cod = periodic_words(q.a, period, budget);
    if (images != cod)
      throw Error(ErrorCode::NotAConjugacy,
                  "psi is not onto periodic points of period " + std::to_string(period));
  }
  // Window 2m+1 inverts psi on blocks: equal images force equal centers.
  std::map<Word, int> center_by_image;
  for (const Word& w : blocks(p.a, 2 * m + 1, budget)) {
    Word img = psi_image(psi, w);
    auto [it, fresh] = center_by_image.emplace(img, w[m]);
    if (!fresh && it->second != w[m])
      throw Error(ErrorCode::WindowTooSmall,
                  "window " + std::to_string(2 * m + 1) + " does not invert psi");
  }
}

}  // namespace

SseChain prop_a_chain(const FlipPair& p, const FlipPair& q,
                      const std::vector<std::size_t>& psi, std::size_t m,
                      std::uint64_t budget) {
  validate_psi(p, q, psi, m, budget);
  SseChain chain;
  std::vector<std::vector<Triple>> alphabets;  // index k-1 holds A_k
  for (std::size_t k = 1; k <= 2 * m + 1; ++k) {
    std::size_t i = (k - 1) / 2, j = k - 2 * i;
    std::vector<Triple> ak;
    std::vector<Word> side = blocks(q.a, i, budget);
    for (const Word& w : blocks(p.a, j, budget)) {
      Word mid = psi_image(psi, w);
      for (const Word& u : side)
        for (const Word& v : side)
          if (is_admissible(q.a, concat3(u, mid, v))) ak.push_back(Triple{v, w, u});
    }
    std::sort(ak.begin(), ak.end());
    alphabets.push_back(std::move(ak));
  }
  std::vector<FlipPair> pairs;
  for (std::size_t k = 1; k <= 2 * m + 1; ++k) {
    const auto& ak = alphabets[k - 1];
    std::size_t sz = ak.size();
    std::size_t jlen = ak.empty() ? 1 : ak.front().w.size();
    ZeroOneMatrix mk(sz), fk(sz);
    std::map<Triple, std::size_t> index;
    for (std::size_t t = 0; t < sz; ++t) index[ak[t]] = t;
    for (std::size_t t = 0; t < sz; ++t) {
      Word wt = concat3(ak[t].u, psi_image(psi, ak[t].w), ak[t].v);
      for (std::size_t t2 = 0; t2 < sz; ++t2) {
        Word wt2 = concat3(ak[t2].u, psi_image(psi, ak[t2].w), ak[t2].v);
        bool ok = words_overlap(q.a, wt, wt2) &&
                  words_overlap(p.a, ak[t].w, ak[t2].w);
        mk.set(t, t2, ok);
      }
      Triple flip{reversed_tau(q.tau, ak[t].u), reversed_tau(p.tau, ak[t].w),
                  reversed_tau(q.tau, ak[t].v)};
      auto it = index.find(flip);
      if (it == index.end())
        throw Error(ErrorCode::NotAConjugacy, "flip image leaves the chain alphabet");
      fk.set(t, it->second, true);
    }
    pairs.push_back(validate_flip_pair(mk, fk, "chain[" + std::to_string(k) + "]"));
  }
  chain.pairs = pairs;
  for (std::size_t k = 1; k <= 2 * m; ++k) {
    const auto& ak = alphabets[k - 1];
    const auto& ak1 = alphabets[k];
    IntMatrix r(ak.size(), ak1.size()), s(ak1.size(), ak.size());
    for (std::size_t t = 0; t < ak.size(); ++t) {
      Word wt = concat3(ak[t].u, psi_image(psi, ak[t].w), ak[t].v);
      for (std::size_t t2 = 0; t2 < ak1.size(); ++t2) {
        Word wt2 = concat3(ak1[t2].u, psi_image(psi, ak1[t2].w), ak1[t2].v);
        bool prefix = std::equal(wt.begin(), wt.end(), wt2.begin());
        bool suffix = std::equal(wt.begin(), wt.end(), wt2.end() - wt.size());
        if (prefix && ak[t].w.back() == ak1[t2].w.front()) r.at(t, t2) = 1;
        if (suffix && ak1[t2].w.back() == ak[t].w.front()) s.at(t2, t) = 1;
      }
    }
    chain.links.push_back(HeeWitness{std::move(r), std::move(s)});
  }
  std::string why;
  for (std::size_t k = 0; k < chain.links.size(); ++k)
    if (!verify_hee(chain.pairs[k], chain.pairs[k + 1], chain.links[k], &why))
      throw Error(ErrorCode::Internal,
                  "chain link " + std::to_string(k + 1) + " failed: " + why);
  return chain;
}

const char* certificate_reason_name(CertificateReason r) {
  switch (r) {
    case CertificateReason::SignatureMinusOneCount: return "SignatureMinusOneCount";
    case CertificateReason::LeadingSignature: return "LeadingSignature";
    case CertificateReason::ZetaMismatch: return "ZetaMismatch";
  }
  return "Unknown";
}

std::optional<NonConjugacyCertificate> distinguish(const FlipPair& p,
                                                   const FlipPair& q,
                                                   std::size_t degree) {
  FlipSignature sp = flip_signature(p), sq = flip_signature(q);
  auto minus_ones = [](const FlipSignature& s) {
    std::size_t c = 0;
    for (const auto& [len, sign] : s.signs)
      if (sign < 0) ++c;
    return c;
  };
  if (sp.leading != sq.leading)
    return NonConjugacyCertificate{CertificateReason::LeadingSignature,
                                   sp.leading > 0 ? "+1" : "-1",
                                   sq.leading > 0 ? "+1" : "-1", 0};
  std::size_t mp = minus_ones(sp), mq = minus_ones(sq);
  if (mp != mq)
    return NonConjugacyCertificate{CertificateReason::SignatureMinusOneCount,
                                   std::to_string(mp), std::to_string(mq), 0};
  QSeries zp = lind_zeta(p, degree), zq = lind_zeta(q, degree);
  SeriesComparison cmp = series_equal(zp, zq, degree);
  if (!cmp.equal)
    return NonConjugacyCertificate{CertificateReason::ZetaMismatch,
                                   rat_to_string(zp.coeff(cmp.first_diff)),
                                   rat_to_string(zq.coeff(cmp.first_diff)),
                                   cmp.first_diff};
  return std::nullopt;
}

}  // namespace flipsig
