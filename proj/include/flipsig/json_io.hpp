#pragma once

#include <string>

#include <json.hpp>

#include "flipsig/equivalence.hpp"
#include "flipsig/flip_pair.hpp"
#include "flipsig/kernel_signature.hpp"
#include "flipsig/linalg.hpp"
#include "flipsig/zeta.hpp"

namespace flipsig {

using nlohmann::json;

json matrix_to_json(const IntMatrix& m);
json matrix_to_json(const ZeroOneMatrix& m);
IntMatrix int_matrix_from_json(const json& j);
ZeroOneMatrix zero_one_from_json(const json& j);

/// {"name": ..., "A": [[...]], "J": [[...]]}; validates the pair.
json flip_pair_to_json(const FlipPair& p);
FlipPair flip_pair_from_json(const json& j);

/// Plain-text form: rows of 0/1 separated by spaces, one matrix; a blank
/// line then a second matrix when the file holds a pair.
FlipPair flip_pair_from_text(const std::string& text, const std::string& name);
IntMatrix int_matrix_from_text(const std::string& text);

/// Loads a pair from a .json file or, with format "txt", from plain text.
FlipPair load_flip_pair(const std::string& path, const std::string& format = "json");
/// Loads a bare square zero-one matrix: accepts a pair file (takes A), a
/// {"A": ...} / bare [[...]] json, or txt.
ZeroOneMatrix load_matrix(const std::string& path, const std::string& format = "json");

/// {"index_set":[...], "signs":{"1":-1,...}, "leading":...}
json signature_to_json(const FlipSignature& s);
FlipSignature signature_from_json(const json& j);

/// {"kind":"HEE"|"SE","lag":...,"D":...,"E":...} and
/// {"kind":"SSE","lag":l,"links":[{"D":..,"E":..,"to":{pair}},...]}.
json witness_to_json(const HeeWitness& w);
json witness_to_json(const SeWitness& w);
json chain_to_json(const SseChain& c);
HeeWitness hee_from_json(const json& j);
SeWitness se_from_json(const json& j);
/// Needs the endpoint pairs to anchor the chain: links carry only the "to"
/// pair of each step.
SseChain chain_from_json(const json& j, const FlipPair& from, const FlipPair& to);

/// {"degree":N,"coefficients":["1","0","3/2",...]} canonical p/q strings.
json series_to_json(const QSeries& s);
QSeries series_from_json(const json& j);

json table_to_json(const FixedPointTable& t);
json profile_to_json(const JordanProfile& p);
json certificate_to_json(const NonConjugacyCertificate& c);

json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace flipsig
