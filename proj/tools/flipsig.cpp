// flipsig: conjugacy invariants of topological Markov chains with flips.
//
// Exit codes: 0 affirmative verdict, 1 negative or inconclusive verdict,
// 2 usage/parse/IO error, 3 validation error, 4 budget or size cap exceeded,
// 5 internal error. JSON payloads go to stdout, diagnostics to stderr.
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flipsig/equivalence.hpp"
#include "flipsig/json_io.hpp"
#include "flipsig/kernel_signature.hpp"
#include "flipsig/linalg.hpp"
#include "flipsig/symbolic.hpp"
#include "flipsig/zeta.hpp"

using namespace flipsig;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;
constexpr int kBudget = 4;
constexpr int kInternal = 5;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
      return kUsage;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::AlphabetTooLarge:
      return kBudget;
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kInvalid;
  }
}

std::uint64_t budget_from_env() {
  const char* s = std::getenv("FLIPSIG_BUDGET");
  if (!s || !*s) return kDefaultBudget;
  char* end = nullptr;
  errno = 0;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (errno != 0 || end == s || *end != '\0' || v == 0)
    throw Error(ErrorCode::ParseError,
                "FLIPSIG_BUDGET must be a positive integer");
  return static_cast<std::uint64_t>(v);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char byte;
  while (in.get(byte)) {
    h ^= static_cast<unsigned char>(byte);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string tau_cycles(const std::vector<std::size_t>& tau) {
  std::string out;
  for (std::size_t i = 0; i < tau.size(); ++i)
    if (tau[i] > i)
      out += "(" + std::to_string(i) + " " + std::to_string(tau[i]) + ")";
  return out.empty() ? "id" : out;
}

struct Ctx {
  std::string command;
  std::string format = "json";
  bool report = false;
  std::vector<std::string> inputs;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  FlipPair pair(const std::string& path) {
    inputs.push_back(path);
    return load_flip_pair(path, format);
  }
  ZeroOneMatrix matrix(const std::string& path) {
    inputs.push_back(path);
    return load_matrix(path, format);
  }
  json file(const std::string& path) {
    inputs.push_back(path);
    return read_json_file(path);
  }

  void emit(const json& payload) const {
    if (!report) {
      std::cout << payload.dump(2) << "\n";
      return;
    }
    json digests = json::object();
    for (const std::string& p : inputs) digests[p] = file_digest(p);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json envelope{{"command", command},
                  {"inputs", digests},
                  {"outputs", payload},
                  {"timing_ms", ms}};
    std::cout << envelope.dump(2) << "\n";
  }
};

int cmd_validate(Ctx& ctx, const std::string& file) {
  try {
    FlipPair p = ctx.pair(file);
    json payload{{"valid", true},
                 {"name", p.name},
                 {"alphabet_size", p.alphabet_size()},
                 {"tau", tau_cycles(p.tau)}};
    ctx.emit(payload);
    return kOk;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    json payload{{"valid", false},
                 {"error", error_code_name(e.code())},
                 {"message", e.what()}};
    ctx.emit(payload);
    std::cerr << "invalid: " << e.what() << "\n";
    return kInvalid;
  }
}

int cmd_signature(Ctx& ctx, const std::string& file) {
  FlipPair p = ctx.pair(file);
  ctx.emit(signature_to_json(flip_signature(p)));
  return kOk;
}

int cmd_zeta(Ctx& ctx, const std::string& file, std::size_t degree) {
  FlipPair p = ctx.pair(file);
  ctx.emit(series_to_json(lind_zeta(p, degree)));
  return kOk;
}

int cmd_fixed_points(Ctx& ctx, const std::string& file, std::size_t max_m,
                     bool oracle) {
  FlipPair p = ctx.pair(file);
  std::uint64_t budget = budget_from_env();
  FixedPointTable t = fixed_point_counts(p, max_m);
  json payload = table_to_json(t);
  if (oracle) {
    // Brute-force cross-check of every table entry with period <= 10.
    for (std::size_t m = 1; m <= 2 * max_m && m <= 10; ++m)
      if (count_periodic(p.a, m, budget) != t.p[m])
        throw Error(ErrorCode::Internal,
                    "oracle mismatch: periodic count of period " +
                        std::to_string(m));
    for (std::size_t m = 1; m <= max_m; ++m) {
      if (2 * m - 1 <= 10 &&
          count_flip_fixed(p, 2 * m - 1, 0, budget) != t.odd0[m])
        throw Error(ErrorCode::Internal,
                    "oracle mismatch: odd period " + std::to_string(2 * m - 1));
      if (2 * m <= 10) {
        if (count_flip_fixed(p, 2 * m, 0, budget) != t.even0[m])
          throw Error(ErrorCode::Internal,
                      "oracle mismatch: even period " + std::to_string(2 * m) +
                          " offset 0");
        if (count_flip_fixed(p, 2 * m, 1, budget) != t.even1[m])
          throw Error(ErrorCode::Internal,
                      "oracle mismatch: even period " + std::to_string(2 * m) +
                          " offset 1");
      }
    }
    payload["oracle"] = "ok";
  }
  ctx.emit(payload);
  return kOk;
}

int cmd_higher_block(Ctx& ctx, const std::string& file, std::size_t n) {
  FlipPair p = ctx.pair(file);
  HigherBlockSystem hb = higher_block(p, n, budget_from_env());
  if (!p.name.empty()) hb.pair.name = p.name + "_block" + std::to_string(n);
  json payload = flip_pair_to_json(hb.pair);
  json alphabet = json::array();
  for (const Word& w : hb.alphabet) alphabet.push_back(word_to_string(w));
  payload["alphabet"] = alphabet;
  ctx.emit(payload);
  return kOk;
}

int cmd_hee_search(Ctx& ctx, const std::string& file_a,
                   const std::string& file_b) {
  FlipPair p = ctx.pair(file_a), q = ctx.pair(file_b);
  std::optional<HeeWitness> w = search_hee(p, q, budget_from_env());
  if (!w) {
    ctx.emit(json{{"found", false}});
    std::cerr << "no half elementary equivalence exists\n";
    return kNegative;
  }
  json payload = witness_to_json(*w);
  payload["found"] = true;
  ctx.emit(payload);
  return kOk;
}

int cmd_se_verify(Ctx& ctx, const std::string& file_a,
                  const std::string& file_b, const std::string& witness_file) {
  FlipPair p = ctx.pair(file_a), q = ctx.pair(file_b);
  json j = ctx.file(witness_file);
  std::string kind = j.value("kind", "SE");
  bool valid = false;
  std::string why;
  std::size_t lag = 0;
  if (kind == "HEE") {
    HeeWitness w = hee_from_json(j);
    lag = 1;
    valid = verify_hee(p, q, w, &why);
  } else if (kind == "SE") {
    SeWitness w = se_from_json(j);
    lag = w.lag;
    valid = verify_se(p, q, w, &why);
  } else {
    throw Error(ErrorCode::ParseError, "unknown witness kind: " + kind);
  }
  json payload{{"valid", valid}, {"kind", kind}, {"lag", lag}};
  if (!valid) {
    payload["why"] = why;
    std::cerr << "witness rejected: " << why << "\n";
  }
  ctx.emit(payload);
  return valid ? kOk : kNegative;
}

int cmd_sse_compose(Ctx& ctx, const std::string& file_a,
                    const std::string& file_b, const std::string& chain_file) {
  FlipPair p = ctx.pair(file_a), q = ctx.pair(file_b);
  SseChain chain = chain_from_json(ctx.file(chain_file), p, q);
  SeWitness w = compose_sse(chain);
  std::string why;
  if (!verify_se(p, q, w, &why))
    throw Error(ErrorCode::Internal, "composed witness rejected: " + why);
  json payload = witness_to_json(w);
  payload["valid"] = true;
  ctx.emit(payload);
  return kOk;
}

int cmd_distinguish(Ctx& ctx, const std::string& file_a,
                    const std::string& file_b, std::size_t degree) {
  FlipPair p = ctx.pair(file_a), q = ctx.pair(file_b);
  std::optional<NonConjugacyCertificate> cert = distinguish(p, q, degree);
  if (!cert) {
    ctx.emit(json{{"verdict", "inconclusive"}});
    std::cerr << "all computed invariants agree\n";
    return kNegative;
  }
  json payload = certificate_to_json(*cert);
  payload["verdict"] = "distinguished";
  ctx.emit(payload);
  return kOk;
}

int cmd_jordan(Ctx& ctx, const std::string& file, const std::string& factor) {
  FlipPair p = ctx.pair(file);
  IntMatrix m = p.a.to_int();
  IntPolynomial cp = char_poly(m);
  json profiles = json::array();
  json payload{{"char_poly", cp.to_string()}};
  if (!factor.empty()) {
    profiles.push_back(profile_to_json(jordan_profile(m, parse_polynomial(factor))));
  } else {
    FactorList fl = candidate_factors(cp);
    for (const IntPolynomial& f : fl.factors)
      profiles.push_back(profile_to_json(jordan_profile(m, f)));
    if (fl.remainder.degree() > 0)
      payload["unfactored"] = fl.remainder.to_string();
  }
  payload["profiles"] = profiles;
  ctx.emit(payload);
  return kOk;
}

int cmd_flips(Ctx& ctx, const std::string& file, std::size_t max_alphabet) {
  ZeroOneMatrix a = ctx.matrix(file);
  std::vector<ZeroOneMatrix> js = enumerate_flips(a, max_alphabet);
  json list = json::array();
  for (const ZeroOneMatrix& j : js) {
    FlipPair p = validate_flip_pair(a, j);
    list.push_back(json{{"J", matrix_to_json(j)}, {"tau", tau_cycles(p.tau)}});
  }
  ctx.emit(json{{"count", js.size()}, {"flips", list}});
  if (js.empty()) {
    std::cerr << "no compatible flips\n";
    return kNegative;
  }
  return kOk;
}

void add_common(CLI::App* sub, Ctx& ctx) {
  sub->add_option("--format", ctx.format, "Input file format: json or txt")
      ->check(CLI::IsMember({"json", "txt"}));
  sub->add_flag("--report", ctx.report,
                "Wrap the payload in a run report with input digests and timing");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "flipsig: exact conjugacy invariants of topological Markov chains "
      "with flips (signatures, zeta functions, fixed point counts, "
      "equivalence witnesses)"};
  app.require_subcommand(1);

  Ctx ctx;
  std::string file_a, file_b, witness_file, chain_file, factor;
  std::size_t degree = 16, max_m = 5, order = 2, max_alphabet = 10;
  bool oracle = false;

  CLI::App* validate = app.add_subcommand(
      "validate", "Check the flip pair axioms and print the symbol involution");
  validate->add_option("file", file_a, "Flip pair file")->required();
  add_common(validate, ctx);

  CLI::App* signature = app.add_subcommand(
      "signature", "Flip signature of the eventual kernel at zero");
  signature->add_option("file", file_a, "Flip pair file")->required();
  add_common(signature, ctx);

  CLI::App* zeta =
      app.add_subcommand("zeta", "Zeta function of the flip system as a "
                                 "truncated rational power series");
  zeta->add_option("file", file_a, "Flip pair file")->required();
  zeta->add_option("--degree", degree, "Truncation degree (default 16)");
  add_common(zeta, ctx);

  CLI::App* fixed = app.add_subcommand(
      "fixed-points", "Counts of points fixed by shift powers and flips");
  fixed->add_option("file", file_a, "Flip pair file")->required();
  fixed->add_option("--max-m", max_m,
                    "Offset rows up to m (periodic counts reach 2m)");
  fixed->add_flag("--oracle", oracle,
                  "Cross-check every entry of period <= 10 by brute force");
  add_common(fixed, ctx);

  CLI::App* higher = app.add_subcommand(
      "higher-block", "Emit the n-th higher block pair and its alphabet");
  higher->add_option("file", file_a, "Flip pair file")->required();
  higher->add_option("-n,--order", order, "Block order (default 2)");
  add_common(higher, ctx);

  CLI::App* hee = app.add_subcommand(
      "hee-search", "Search for a half elementary equivalence witness");
  hee->add_option("fileA", file_a, "Domain flip pair")->required();
  hee->add_option("fileB", file_b, "Codomain flip pair")->required();
  add_common(hee, ctx);

  CLI::App* sev = app.add_subcommand(
      "se-verify", "Verify a shift equivalence (or half elementary) witness");
  sev->add_option("fileA", file_a, "Domain flip pair")->required();
  sev->add_option("fileB", file_b, "Codomain flip pair")->required();
  sev->add_option("--witness", witness_file, "Witness JSON file")->required();
  add_common(sev, ctx);

  CLI::App* sse = app.add_subcommand(
      "sse-compose", "Multiply a strong shift equivalence chain into a "
                     "shift equivalence witness");
  sse->add_option("fileA", file_a, "Domain flip pair")->required();
  sse->add_option("fileB", file_b, "Codomain flip pair")->required();
  sse->add_option("--chain", chain_file, "Chain JSON file")->required();
  add_common(sse, ctx);

  CLI::App* dist = app.add_subcommand(
      "distinguish", "Certify non-conjugacy from signatures or zeta series");
  dist->add_option("fileA", file_a, "First flip pair")->required();
  dist->add_option("fileB", file_b, "Second flip pair")->required();
  dist->add_option("--degree", degree, "Zeta comparison degree (default 16)");
  add_common(dist, ctx);

  CLI::App* jordan = app.add_subcommand(
      "jordan", "Nilpotent/Jordan block profile of the transition matrix");
  jordan->add_option("file", file_a, "Flip pair file")->required();
  jordan->add_option("--factor", factor,
                     "Polynomial factor, e.g. \"t-1\" (default: all candidate "
                     "factors of the characteristic polynomial)");
  add_common(jordan, ctx);

  CLI::App* flips = app.add_subcommand(
      "flips", "Enumerate all flip matrices compatible with a transition "
               "matrix");
  flips->add_option("file", file_a, "Matrix or pair file")->required();
  flips->add_option("--max-alphabet", max_alphabet,
                    "Refuse alphabets larger than this (default 10)");
  add_common(flips, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  ctx.command = sub->get_name();
  try {
    if (sub == validate) return cmd_validate(ctx, file_a);
    if (sub == signature) return cmd_signature(ctx, file_a);
    if (sub == zeta) return cmd_zeta(ctx, file_a, degree);
    if (sub == fixed) return cmd_fixed_points(ctx, file_a, max_m, oracle);
    if (sub == higher) return cmd_higher_block(ctx, file_a, order);
    if (sub == hee) return cmd_hee_search(ctx, file_a, file_b);
    if (sub == sev) return cmd_se_verify(ctx, file_a, file_b, witness_file);
    if (sub == sse) return cmd_sse_compose(ctx, file_a, file_b, chain_file);
    if (sub == dist) return cmd_distinguish(ctx, file_a, file_b, degree);
    if (sub == jordan) return cmd_jordan(ctx, file_a, factor);
    if (sub == flips) return cmd_flips(ctx, file_a, max_alphabet);
    std::cerr << "unknown subcommand\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
