#include "flipsig/symbolic.hpp"

#include <map>
#include <string>

namespace flipsig {

namespace {

struct WordEnumerator {
  const ZeroOneMatrix& a;
  std::size_t n;
  bool cyclic;
  std::uint64_t budget;
  std::uint64_t seen = 0;

  template <typename Visit>
  void run(Visit&& visit) {
    Word w;
    if (n == 0) {
      bump();
      visit(w);
      return;
    }
    w.reserve(n);
    for (std::size_t s = 0; s < a.size(); ++s) {
      w.push_back(static_cast<int>(s));
      rec(w, visit);
      w.pop_back();
    }
  }

  void bump() {
    if (++seen > budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "word enumeration exceeded budget of " + std::to_string(budget));
  }

  template <typename Visit>
  void rec(Word& w, Visit&& visit) {
    if (w.size() == n) {
      if (!cyclic || a.get(w.back(), w.front())) {
        bump();
        visit(w);
      }
      return;
    }
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (!a.get(w.back(), s)) continue;
      w.push_back(static_cast<int>(s));
      rec(w, visit);
      w.pop_back();
    }
  }
};

}  // namespace

std::vector<Word> blocks(const ZeroOneMatrix& a, std::size_t n, std::uint64_t budget) {
  std::vector<Word> out;
  WordEnumerator e{a, n, /*cyclic=*/false, budget};
  e.run([&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> periodic_words(const ZeroOneMatrix& a, std::size_t m,
                                 std::uint64_t budget) {
  if (m == 0) throw Error(ErrorCode::BadBlock, "period must be positive");
  std::vector<Word> out;
  WordEnumerator e{a, m, /*cyclic=*/true, budget};
  e.run([&](const Word& w) { out.push_back(w); });
  return out;
}

Int count_periodic(const ZeroOneMatrix& a, std::size_t m, std::uint64_t budget) {
  if (m == 0) throw Error(ErrorCode::BadBlock, "period must be positive");
  Int c = 0;
  WordEnumerator e{a, m, /*cyclic=*/true, budget};
  e.run([&](const Word&) { ++c; });
  return c;
}

Word flip_of_periodic(const FlipPair& p, const Word& w) {
  std::size_t m = w.size();
  Word out(m);
  for (std::size_t i = 0; i < m; ++i)
    out[i] = static_cast<int>(p.tau[w[(m - i) % m]]);
  return out;
}

bool is_flip_fixed(const FlipPair& p, const Word& w, std::size_t n) {
  // sigma^n(phi(x)) = x with x_i = w[i mod m] reads: x_i = tau(x_{(-i-n) mod m}).
  std::size_t m = w.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = (2 * m - (i + n) % m) % m;
    if (w[i] != static_cast<int>(p.tau[w[k]])) return false;
  }
  return true;
}

Int count_flip_fixed(const FlipPair& p, std::size_t m, std::size_t n,
                     std::uint64_t budget) {
  if (m == 0) throw Error(ErrorCode::BadBlock, "period must be positive");
  Int c = 0;
  WordEnumerator e{p.a, m, /*cyclic=*/true, budget};
  e.run([&](const Word& w) {
    if (is_flip_fixed(p, w, n)) ++c;
  });
  return c;
}

HigherBlockSystem higher_block(const FlipPair& p, std::size_t n, std::uint64_t budget) {
  if (n == 0) throw Error(ErrorCode::BadBlock, "higher block order must be positive");
  std::vector<Word> alphabet = blocks(p.a, n, budget);
  if (alphabet.empty())
    throw Error(ErrorCode::BadBlock, "no admissible blocks of order " + std::to_string(n));
  std::size_t sz = alphabet.size();
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < sz; ++i) index[alphabet[i]] = i;
  ZeroOneMatrix an(sz), jn(sz);
  for (std::size_t u = 0; u < sz; ++u) {
    const Word& wu = alphabet[u];
    for (std::size_t v = 0; v < sz; ++v) {
      const Word& wv = alphabet[v];
      // Progressive overlap plus the glue transition; the glue is only
      // binding for n = 1 (it is implied by v's admissibility otherwise).
      bool ok = p.a.get(wu[n - 1], wv[n - 1]);
      for (std::size_t i = 0; ok && i + 1 < n; ++i) ok = wu[i + 1] == wv[i];
      an.set(u, v, ok);
    }
    // J_n(u, v) = 1 iff v is the reversed tau-image of u.
    Word fu(n);
    for (std::size_t i = 0; i < n; ++i)
      fu[i] = static_cast<int>(p.tau[wu[n - 1 - i]]);
    auto it = index.find(fu);
    if (it == index.end())
      throw Error(ErrorCode::Internal, "flip image of an admissible block is inadmissible");
    jn.set(u, it->second, true);
  }
  FlipPair hp = validate_flip_pair(
      an, jn, p.name.empty() ? "" : p.name + "[" + std::to_string(n) + "]");
  return HigherBlockSystem{std::move(hp), std::move(alphabet)};
}

}  // namespace flipsig
