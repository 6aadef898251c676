#include "flipsig/json_io.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace flipsig {

namespace {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::ParseError, "bad integer literal: " + j.dump());
    }
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

/// Splits text into blank-line-separated blocks of whitespace-separated
/// integer rows.
std::vector<IntMatrix> matrices_from_text(const std::string& text) {
  std::vector<std::vector<std::vector<Int>>> blocks;
  std::vector<std::vector<Int>> current;
  std::istringstream lines(text);
  std::string line;
  auto flush = [&] {
    if (!current.empty()) blocks.push_back(std::move(current));
    current.clear();
  };
  while (std::getline(lines, line)) {
    std::istringstream toks(line);
    std::vector<Int> row;
    std::string tok;
    while (toks >> tok) {
      try {
        row.emplace_back(tok, 10);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::ParseError, "bad matrix entry: " + tok);
      }
    }
    if (row.empty())
      flush();
    else
      current.push_back(std::move(row));
  }
  flush();
  std::vector<IntMatrix> out;
  for (const auto& rows : blocks) {
    std::size_t cols = rows.front().size();
    for (const auto& r : rows)
      if (r.size() != cols)
        throw Error(ErrorCode::ParseError, "ragged rows in matrix text");
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const ZeroOneMatrix& m) { return matrix_to_json(m.to_int()); }

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
  if (j.empty()) return IntMatrix(0, 0);
  std::size_t rows = j.size();
  if (!j[0].is_array()) throw Error(ErrorCode::ParseError, "matrix rows must be arrays");
  std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw Error(ErrorCode::ParseError, "ragged rows in matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

ZeroOneMatrix zero_one_from_json(const json& j) {
  return to_zero_one(int_matrix_from_json(j));
}

json flip_pair_to_json(const FlipPair& p) {
  json j;
  j["name"] = p.name;
  j["A"] = matrix_to_json(p.a);
  j["J"] = matrix_to_json(p.j);
  return j;
}

FlipPair flip_pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("J"))
    throw Error(ErrorCode::ParseError, "flip pair needs \"A\" and \"J\" matrices");
  std::string name = j.value("name", std::string());
  return validate_flip_pair(zero_one_from_json(j["A"]), zero_one_from_json(j["J"]),
                            name);
}

FlipPair flip_pair_from_text(const std::string& text, const std::string& name) {
  std::vector<IntMatrix> ms = matrices_from_text(text);
  if (ms.size() != 2)
    throw Error(ErrorCode::ParseError,
                "pair text needs two matrices separated by a blank line");
  return validate_flip_pair(to_zero_one(ms[0]), to_zero_one(ms[1]), name);
}

IntMatrix int_matrix_from_text(const std::string& text) {
  std::vector<IntMatrix> ms = matrices_from_text(text);
  if (ms.size() != 1)
    throw Error(ErrorCode::ParseError, "expected exactly one matrix in text input");
  return ms[0];
}

FlipPair load_flip_pair(const std::string& path, const std::string& format) {
  if (format == "txt") return flip_pair_from_text(read_text_file(path), path_stem(path));
  if (format != "json")
    throw Error(ErrorCode::ParseError, "unknown format \"" + format + "\"");
  json j = read_json_file(path);
  if (j.is_object() && !j.contains("name")) j["name"] = path_stem(path);
  return flip_pair_from_json(j);
}

ZeroOneMatrix load_matrix(const std::string& path, const std::string& format) {
  if (format == "txt") return to_zero_one(int_matrix_from_text(read_text_file(path)));
  if (format != "json")
    throw Error(ErrorCode::ParseError, "unknown format \"" + format + "\"");
  json j = read_json_file(path);
  if (j.is_object() && j.contains("A")) return zero_one_from_json(j["A"]);
  return zero_one_from_json(j);
}

json signature_to_json(const FlipSignature& s) {
  json j;
  j["index_set"] = json::array();
  for (std::size_t k : s.index_set) j["index_set"].push_back(k);
  json signs = json::object();
  for (const auto& [len, sign] : s.signs) signs[std::to_string(len)] = sign;
  j["signs"] = std::move(signs);
  j["leading"] = s.leading;
  return j;
}

FlipSignature signature_from_json(const json& j) {
  FlipSignature s;
  for (const auto& k : j.at("index_set")) s.index_set.push_back(k.get<std::size_t>());
  for (const auto& [key, val] : j.at("signs").items())
    s.signs[static_cast<std::size_t>(std::stoul(key))] = val.get<int>();
  s.leading = j.at("leading").get<int>();
  return s;
}

json witness_to_json(const HeeWitness& w) {
  json j;
  j["kind"] = "HEE";
  j["lag"] = 1;
  j["D"] = matrix_to_json(w.d);
  j["E"] = matrix_to_json(w.e);
  return j;
}

json witness_to_json(const SeWitness& w) {
  json j;
  j["kind"] = "SE";
  j["lag"] = w.lag;
  j["D"] = matrix_to_json(w.d);
  j["E"] = matrix_to_json(w.e);
  return j;
}

json chain_to_json(const SseChain& c) {
  json j;
  j["kind"] = "SSE";
  j["lag"] = c.links.size();
  json links = json::array();
  for (std::size_t k = 0; k < c.links.size(); ++k) {
    json link;
    link["D"] = matrix_to_json(c.links[k].d);
    link["E"] = matrix_to_json(c.links[k].e);
    link["to"] = flip_pair_to_json(c.pairs[k + 1]);
    links.push_back(std::move(link));
  }
  j["links"] = std::move(links);
  return j;
}

HeeWitness hee_from_json(const json& j) {
  if (j.contains("kind") && j["kind"] != "HEE")
    throw Error(ErrorCode::ParseError, "witness kind is not HEE");
  return HeeWitness{int_matrix_from_json(j.at("D")), int_matrix_from_json(j.at("E"))};
}

SeWitness se_from_json(const json& j) {
  if (j.contains("kind") && j["kind"] != "SE")
    throw Error(ErrorCode::ParseError, "witness kind is not SE");
  SeWitness w;
  w.lag = j.at("lag").get<std::size_t>();
  w.d = int_matrix_from_json(j.at("D"));
  w.e = int_matrix_from_json(j.at("E"));
  return w;
}

SseChain chain_from_json(const json& j, const FlipPair& from, const FlipPair& to) {
  if (j.contains("kind") && j["kind"] != "SSE")
    throw Error(ErrorCode::ParseError, "witness kind is not SSE");
  SseChain c;
  c.pairs.push_back(from);
  for (const auto& link : j.at("links")) {
    c.links.push_back(HeeWitness{int_matrix_from_json(link.at("D")),
                                 int_matrix_from_json(link.at("E"))});
    c.pairs.push_back(flip_pair_from_json(link.at("to")));
  }
  if (j.contains("lag") && j["lag"].get<std::size_t>() != c.links.size())
    throw Error(ErrorCode::ParseError, "lag does not match the number of links");
  const FlipPair& last = c.pairs.back();
  if (!(last.a == to.a) || !(last.j == to.j))
    throw Error(ErrorCode::BadWitness, "chain does not end at the target pair");
  return c;
}

json series_to_json(const QSeries& s) {
  json j;
  j["degree"] = s.degree;
  json coeffs = json::array();
  for (const Rat& c : s.c) coeffs.push_back(rat_to_string(c));
  j["coefficients"] = std::move(coeffs);
  return j;
}

QSeries series_from_json(const json& j) {
  QSeries s(j.at("degree").get<std::size_t>());
  const json& coeffs = j.at("coefficients");
  if (coeffs.size() != s.degree + 1)
    throw Error(ErrorCode::ParseError, "coefficient count does not match degree");
  for (std::size_t k = 0; k <= s.degree; ++k) {
    const json& c = coeffs[k];
    s.c[k] = c.is_string() ? rat_from_string(c.get<std::string>())
                           : Rat(int_from_json(c));
  }
  return s;
}

json table_to_json(const FixedPointTable& t) {
  json j;
  j["max_m"] = t.max_m;
  json p = json::array(), odd0 = json::array(), even0 = json::array(),
       even1 = json::array();
  for (std::size_t m = 1; m <= 2 * t.max_m; ++m) p.push_back(int_to_json(t.p[m]));
  for (std::size_t m = 1; m <= t.max_m; ++m) {
    odd0.push_back(int_to_json(t.odd0[m]));
    even0.push_back(int_to_json(t.even0[m]));
    even1.push_back(int_to_json(t.even1[m]));
  }
  j["periodic"] = std::move(p);
  j["odd_offset0"] = std::move(odd0);
  j["even_offset0"] = std::move(even0);
  j["even_offset1"] = std::move(even1);
  return j;
}

json profile_to_json(const JordanProfile& p) {
  json j;
  j["factor"] = p.factor.to_string();
  j["blocks"] = p.blocks;
  j["rank_sequence"] = p.rank_sequence;
  return j;
}

json certificate_to_json(const NonConjugacyCertificate& c) {
  json j;
  j["reason"] = certificate_reason_name(c.reason);
  j["lhs"] = c.lhs;
  j["rhs"] = c.rhs;
  if (c.reason == CertificateReason::ZetaMismatch) j["degree"] = c.degree;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("JSON parse error: ") + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace flipsig
