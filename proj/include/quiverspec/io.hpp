#pragma once

#include "quiverspec/explorer.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace quiverspec {

using Json = nlohmann::ordered_json;

namespace detail {

struct Token {
  std::string text;
  int line;
};

inline Int parse_int(const Token& t) {
  const std::string& s = t.text;
  std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = i < s.size();
  for (; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
  if (!ok) throw ParseError("line " + std::to_string(t.line) + ": expected an integer, got '" + s + "'");
  return Int(s);
}

inline int parse_vertex(const Token& t, int n) {
  Int v = parse_int(t);
  if (v < 1 || v > n)
    throw ParseError("line " + std::to_string(t.line) + ": vertex " + t.text + " out of range 1.." + std::to_string(n));
  return v.convert_to<int>() - 1;
}

}  // namespace detail

/// Quiver file format (line oriented, '#' starts a comment):
///   n <count>
///   arrow <i> <j> <v1> <v2>     (1-based, arrow i→j with value pair (v1,v2))
/// or alternatively
///   matrix <n>
///   <n rows of n integers>      (validated as a sign-skew-symmetric matrix)
inline ValuedQuiver parse_quiver(const std::string& text) {
  std::vector<std::vector<detail::Token>> lines;
  {
    std::istringstream stream(text);
    std::string raw;
    int number = 0;
    while (std::getline(stream, raw)) {
      ++number;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      std::istringstream linestream(raw);
      std::vector<detail::Token> tokens;
      std::string word;
      while (linestream >> word) tokens.push_back({word, number});
      if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
  }
  if (lines.empty()) throw ParseError("empty quiver file");

  const std::vector<detail::Token>& head = lines.front();
  if (head[0].text == "n") {
    if (head.size() != 2) throw ParseError("line " + std::to_string(head[0].line) + ": expected 'n <count>'");
    Int count = detail::parse_int(head[1]);
    if (count < 1 || count > 10000) throw ParseError("line " + std::to_string(head[0].line) + ": vertex count out of range");
    const int n = count.convert_to<int>();
    std::vector<Arrow> arrows;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (std::size_t li = 1; li < lines.size(); ++li) {
      const auto& tok = lines[li];
      const int lineno = tok[0].line;
      if (tok[0].text != "arrow")
        throw ParseError("line " + std::to_string(lineno) + ": expected 'arrow', got '" + tok[0].text + "'");
      if (tok.size() != 5)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'arrow <i> <j> <v1> <v2>'");
      int i = detail::parse_vertex(tok[1], n);
      int j = detail::parse_vertex(tok[2], n);
      Int v1 = detail::parse_int(tok[3]);
      Int v2 = detail::parse_int(tok[4]);
      if (i == j) throw ParseError("line " + std::to_string(lineno) + ": loop arrow at vertex " + tok[1].text);
      if (v1 < 1 || v2 < 1) throw ParseError("line " + std::to_string(lineno) + ": arrow values must be positive");
      if (seen[i][j] || seen[j][i])
        throw ParseError("line " + std::to_string(lineno) + ": second arrow between vertices " + tok[1].text + " and " + tok[2].text);
      seen[i][j] = 1;
      arrows.push_back({i, j, std::move(v1), std::move(v2)});
    }
    return ValuedQuiver(n, std::move(arrows));
  }

  if (head[0].text == "matrix") {
    if (head.size() != 2) throw ParseError("line " + std::to_string(head[0].line) + ": expected 'matrix <n>'");
    Int count = detail::parse_int(head[1]);
    if (count < 1 || count > 10000) throw ParseError("line " + std::to_string(head[0].line) + ": matrix order out of range");
    const int n = count.convert_to<int>();
    if (lines.size() != static_cast<std::size_t>(n) + 1)
      throw ParseError("matrix block needs exactly " + std::to_string(n) + " rows");
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
      const auto& tok = lines[static_cast<std::size_t>(i) + 1];
      if (static_cast<int>(tok.size()) != n)
        throw ParseError("line " + std::to_string(tok[0].line) + ": expected " + std::to_string(n) + " entries");
      for (int j = 0; j < n; ++j) m.at(i, j) = detail::parse_int(tok[j]);
    }
    return quiver_from_matrix(ExchangeMatrix(std::move(m)));
  }

  throw ParseError("line " + std::to_string(head[0].line) + ": expected 'n <count>' or 'matrix <n>'");
}

/// Canonical arrow-format serialization; parse_quiver round-trips it byte for
/// byte because arrows are stored normalized.
inline std::string serialize_quiver(const ValuedQuiver& q) {
  std::string out = "n " + std::to_string(q.order()) + "\n";
  for (const Arrow& a : q.arrows())
    out += "arrow " + std::to_string(a.source + 1) + " " + std::to_string(a.target + 1) + " " + a.v1.str() + " " +
           a.v2.str() + "\n";
  return out;
}

// ---- JSON builders (big integers become numbers when they fit in 64 bits,
// ---- decimal strings otherwise; vertices and words are 1-based externally)

inline Json json_int(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

inline Json json_int_list(const std::vector<Int>& xs) {
  Json out = Json::array();
  for (const Int& x : xs) out.push_back(json_int(x));
  return out;
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.order(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(json_int(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Ascending coefficient list [c₀, c₁, …].
inline Json to_json(const IntPolynomial& p) { return json_int_list(p.coeffs()); }

inline Json to_json(const ValuedQuiver& q) {
  Json arrows = Json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back(Json::array({a.source + 1, a.target + 1, json_int(a.v1), json_int(a.v2)}));
  return Json{{"n", q.order()}, {"arrows", std::move(arrows)}, {"symmetrizer", json_int_list(validate(q))}};
}

inline Json json_word(const std::vector<int>& word) {
  Json out = Json::array();
  for (int k : word) out.push_back(k + 1);
  return out;
}

inline Json to_json(const RadiusVerdict& v, const Rat& r) {
  return Json{{"threshold", Rat(r).str()},
              {"ordering", to_string(v.ordering)},
              {"approx", v.approx},
              {"g", to_json(v.g)},
              {"roots_above", v.roots_above},
              {"threshold_is_root", v.threshold_is_root}};
}

inline Json to_json(const MutationClass& c) {
  Json members = Json::array();
  for (const auto& [key, member] : c.members)
    members.push_back(Json{{"key", key}, {"matrix", to_json(member.matrix.matrix())}, {"word", json_word(member.word)}});
  Json edges = Json::array();
  for (const auto& [a, b] : c.edges) edges.push_back(Json::array({a, b}));
  Json groups = Json::array();
  for (const CospectralGroup& g : cospectral_partition(c)) {
    Json keys = Json::array();
    for (const CanonicalKey& k : g.keys) keys.push_back(k);
    groups.push_back(Json{{"polynomial", to_json(g.polynomial)}, {"keys", std::move(keys)}});
  }
  return Json{{"root_key", c.root_key}, {"size", c.members.size()},      {"complete", c.complete},
              {"members", std::move(members)}, {"edges", std::move(edges)}, {"cospectral_groups", std::move(groups)}};
}

}  // namespace quiverspec
