#include "cctri/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

namespace cctri {

namespace detail {

bool is_comment(const std::string& line, char marker) {
  auto p = line.find_first_not_of(" \t\r");
  if (p == std::string::npos) return true;
  return line[p] == marker && (p + 1 == line.size() || std::isspace(static_cast<unsigned char>(line[p + 1])));
}

int parse_int(const std::string& tok, int line) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

namespace {

using detail::parse_int;

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string t;
  while (ss >> t) out.push_back(t);
  return out;
}

Vertex parse_vertex(const std::string& tok, int n, int line) {
  int v = parse_int(tok, line);
  if (v < 1 || v > n) throw ParseError(line, "vertex " + tok + " out of range 1.." + std::to_string(n));
  return v - 1;
}

// Decimal with at most 9 fractional digits as (integer part, digits).
std::pair<std::int64_t, std::string> parse_decimal(const std::string& tok, int line) {
  auto dot = tok.find('.');
  std::string ip = tok.substr(0, dot);
  std::string fp = dot == std::string::npos ? "" : tok.substr(dot + 1);
  auto digits = [](const std::string& s) { return std::all_of(s.begin(), s.end(), ::isdigit); };
  if ((ip.empty() && fp.empty()) || !digits(ip) || !digits(fp) || fp.size() > 9 || ip.size() > 12)
    throw ParseError(line, "expected a non-negative decimal weight, got '" + tok + "'");
  return {ip.empty() ? 0 : std::stoll(ip), fp};
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int ln = 0;
  int n = -1;
  std::size_t m = 0;
  std::vector<Edge> edges;
  Graph g;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::is_comment(line, 'c')) continue;
    auto t = tokens(line);
    if (n < 0) {
      if (t.size() != 4 || t[0] != "p" || t[1] != "tw") throw ParseError(ln, "expected header 'p tw <n> <m>'");
      n = parse_int(t[2], ln);
      int mm = parse_int(t[3], ln);
      if (n < 0 || mm < 0) throw ParseError(ln, "negative size in header");
      m = static_cast<std::size_t>(mm);
      g = Graph(n);
      continue;
    }
    if (t.size() != 2) throw ParseError(ln, "expected an edge 'u v'");
    Vertex u = parse_vertex(t[0], n, ln), v = parse_vertex(t[1], n, ln);
    if (u == v) throw ParseError(ln, "self-loop on vertex " + t[0]);
    if (g.adjacent(u, v)) throw ParseError(ln, "duplicate edge " + t[0] + " " + t[1]);
    g.add_edge(u, v);
  }
  if (n < 0) throw ParseError(ln, "missing header 'p tw <n> <m>'");
  if (g.m() != m) throw ParseError(ln, "header declares " + std::to_string(m) + " edges, found " + std::to_string(g.m()));
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p tw " << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

CliqueCover read_cover(std::istream& in, int n) {
  std::string line;
  int ln = 0;
  std::vector<VertexSet> cliques;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::is_comment(line, 'c')) continue;
    VertexSet k(n);
    for (const std::string& tok : tokens(line)) k.insert(parse_vertex(tok, n, ln));
    if (cliques.size() == static_cast<std::size_t>(Part::kMaxCliques))
      throw ParseError(ln, "more than 64 cliques");
    cliques.push_back(std::move(k));
  }
  return CliqueCover(n, std::move(cliques));
}

void write_cover(std::ostream& out, const CliqueCover& w) {
  for (const VertexSet& k : w.cliques()) {
    bool first = true;
    for (Vertex v : k) {
      out << (first ? "" : " ") << v + 1;
      first = false;
    }
    out << '\n';
  }
}

TreeDecomposition read_decomposition(std::istream& in) {
  std::string line;
  int ln = 0;
  int bags = -1, n = 0;
  TreeDecomposition td;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::is_comment(line, 'c')) continue;
    auto t = tokens(line);
    if (bags < 0) {
      if (t.size() != 5 || t[0] != "s" || t[1] != "td") throw ParseError(ln, "expected header 's td <bags> <width+1> <n>'");
      bags = parse_int(t[2], ln);
      parse_int(t[3], ln);
      n = parse_int(t[4], ln);
      if (bags < 0 || n < 0) throw ParseError(ln, "negative size in header");
      td.bags.assign(bags, VertexSet(n));
      seen.assign(bags, false);
      continue;
    }
    if (!t.empty() && t[0] == "b") {
      if (t.size() < 2) throw ParseError(ln, "bag line needs an index");
      int i = parse_int(t[1], ln);
      if (i < 1 || i > bags) throw ParseError(ln, "bag index out of range");
      if (seen[i - 1]) throw ParseError(ln, "bag " + t[1] + " listed twice");
      seen[i - 1] = true;
      for (std::size_t j = 2; j < t.size(); ++j) td.bags[i - 1].insert(parse_vertex(t[j], n, ln));
      continue;
    }
    if (t.size() != 2) throw ParseError(ln, "expected a tree edge 'i j'");
    int a = parse_int(t[0], ln), b = parse_int(t[1], ln);
    if (a < 1 || b < 1 || a > bags || b > bags) throw ParseError(ln, "tree edge endpoint out of range");
    td.edges.emplace_back(a - 1, b - 1);
  }
  if (bags < 0) throw ParseError(ln, "missing header 's td <bags> <width+1> <n>'");
  for (int i = 0; i < bags; ++i)
    if (!seen[i]) throw ParseError(ln, "bag " + std::to_string(i + 1) + " missing");
  return td;
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td, int n) {
  out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << n << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [a, b] : td.edges) out << a + 1 << ' ' << b + 1 << '\n';
}

WeightTable read_weights(std::istream& in, const Graph& g) {
  struct Entry {
    Vertex u, v;
    std::int64_t ip;
    std::string fp;
    int line;
  };
  std::vector<Entry> entries;
  std::size_t digits = 0;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::is_comment(line, 'c')) continue;
    auto t = tokens(line);
    if (t.size() != 3) throw ParseError(ln, "expected 'u v w'");
    Vertex u = parse_vertex(t[0], g.n(), ln), v = parse_vertex(t[1], g.n(), ln);
    if (u == v) throw ParseError(ln, "weight on a vertex pair with equal endpoints");
    if (g.adjacent(u, v)) throw ParseError(ln, "weight given for edge " + t[0] + " " + t[1]);
    auto [ip, fp] = parse_decimal(t[2], ln);
    digits = std::max(digits, fp.size());
    entries.push_back({u, v, ip, fp, ln});
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < digits; ++i) scale *= 10;
  WeightTable w(g.n(), scale);
  for (const Entry& e : entries) {
    std::string fp = e.fp + std::string(digits - e.fp.size(), '0');
    w.set(e.u, e.v, e.ip * scale + (fp.empty() ? 0 : std::stoll(fp)));
  }
  return w;
}

AdmissibleSet read_admissible(std::istream& in, const Graph& g) {
  AdmissibleSet f(g.n());
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (detail::is_comment(line, 'c')) continue;
    auto t = tokens(line);
    if (t.size() != 2) throw ParseError(ln, "expected 'u v'");
    Vertex u = parse_vertex(t[0], g.n(), ln), v = parse_vertex(t[1], g.n(), ln);
    if (u == v) throw ParseError(ln, "admissible pair with equal endpoints");
    if (!g.adjacent(u, v)) f.allow(u, v);
  }
  return f;
}

}  // namespace cctri
