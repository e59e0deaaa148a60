#include "hyperent/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace hyperent {

namespace {

[[noreturn]] void syntax_fail(int line, const std::string& what) {
  std::ostringstream os;
  os << "line " << line << ": " << what;
  fail(Errc::SyntaxError, os.str());
}

bool parse_int(const std::string& tok, int& out) {
  try {
    size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) return false;
    if (v < -1000000000L || v > 1000000000L) return false;
    out = static_cast<int>(v);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

Hypergraph parse_hgr(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int k = 0, n = 0, m = 0;
  bool have_header = false;
  EdgeList edges;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line.substr(0, line.find('#'));
    std::istringstream ls(stripped);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    if (!have_header) {
      if (toks.size() != 3) syntax_fail(lineno, "expected header 'k n m'");
      if (!parse_int(toks[0], k) || !parse_int(toks[1], n) ||
          !parse_int(toks[2], m))
        syntax_fail(lineno, "header fields must be integers");
      if (k < 2 || n < 1 || m < 1)
        syntax_fail(lineno, "header fields out of range");
      have_header = true;
      continue;
    }

    if (static_cast<int>(edges.size()) == m)
      syntax_fail(lineno, "more edge lines than declared m");
    if (static_cast<int>(toks.size()) != k)
      syntax_fail(lineno, "expected " + std::to_string(k) + " vertex ids");
    Edge e;
    e.reserve(toks.size());
    for (const std::string& t : toks) {
      int v = 0;
      if (!parse_int(t, v) || v < 1)
        syntax_fail(lineno, "vertex ids must be positive integers");
      e.push_back(v);
    }
    edges.push_back(std::move(e));
  }

  if (!have_header) syntax_fail(lineno ? lineno : 1, "missing header line");
  if (static_cast<int>(edges.size()) != m)
    syntax_fail(lineno, "expected " + std::to_string(m) + " edge lines, got " +
                            std::to_string(edges.size()));

  Hypergraph h = Hypergraph::build(k, std::move(edges));
  if (h.n() != n) {
    std::ostringstream os;
    os << "header declares n=" << n << " but edges cover " << h.n()
       << " vertices";
    fail(Errc::SyntaxError, os.str());
  }
  return h;
}

std::string serialize_hgr(const Hypergraph& h) {
  std::ostringstream os;
  os << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const Edge& e : h.edges()) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << ' ';
      os << e[i];
    }
    os << '\n';
  }
  return os.str();
}

Hypergraph parse_hypergraph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("k") || !j.contains("edges"))
    fail(Errc::SyntaxError, "expected object with \"k\" and \"edges\"");
  if (!j["k"].is_number_integer())
    fail(Errc::SyntaxError, "\"k\" must be an integer");
  if (!j["edges"].is_array())
    fail(Errc::SyntaxError, "\"edges\" must be an array");

  EdgeList edges;
  for (const auto& je : j["edges"]) {
    if (!je.is_array()) fail(Errc::SyntaxError, "each edge must be an array");
    Edge e;
    for (const auto& jv : je) {
      if (!jv.is_number_integer())
        fail(Errc::SyntaxError, "vertex ids must be integers");
      e.push_back(jv.get<int>());
    }
    edges.push_back(std::move(e));
  }
  Hypergraph h = Hypergraph::build(j["k"].get<int>(), std::move(edges));
  if (j.contains("n") && j["n"].is_number_integer() &&
      j["n"].get<int>() != h.n()) {
    fail(Errc::SyntaxError, "declared n does not match edges");
  }
  return h;
}

std::string serialize_hypergraph_json(const Hypergraph& h) {
  nlohmann::ordered_json j;
  j["k"] = h.k();
  j["n"] = h.n();
  j["m"] = h.m();
  j["edges"] = h.edges();
  return j.dump();
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::SyntaxError, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Hypergraph load_hypergraph(const std::string& path) {
  std::string text = read_file(path);
  size_t at = text.find_first_not_of(" \t\r\n");
  if (at != std::string::npos && text[at] == '{')
    return parse_hypergraph_json(text);
  return parse_hgr(text);
}

}  // namespace hyperent
