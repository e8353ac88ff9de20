#include "cctri/phylo.hpp"

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cctri/btdp.hpp"
#include "cctri/fastconv.hpp"
#include "cctri/io.hpp"
#include "cctri/pmc.hpp"
#include "cctri/polyspace.hpp"

namespace cctri {

CharacterMatrix::CharacterMatrix(std::vector<std::string> taxa, std::vector<std::string> characters,
                                 std::vector<std::vector<std::optional<std::string>>> cells)
    : taxa_(std::move(taxa)), characters_(std::move(characters)), cells_(std::move(cells)) {
  if (taxa_.empty()) throw std::invalid_argument("a character matrix needs at least one taxon");
  if (characters_.empty()) throw std::invalid_argument("a character matrix needs at least one character");
  if (cells_.size() != taxa_.size()) throw std::invalid_argument("one row of states per taxon expected");
  for (const auto& row : cells_)
    if (row.size() != characters_.size()) throw std::invalid_argument("one state per character expected");
}

CharacterMatrix read_matrix(std::istream& in) {
  std::vector<std::string> characters, taxa;
  std::vector<std::vector<std::optional<std::string>>> cells;
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment(line, '#')) continue;
    std::istringstream ss(line);
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header) {
      characters = std::move(toks);
      header = true;
      continue;
    }
    if (toks.size() != characters.size() + 1)
      throw ParseError(lineno, "expected a taxon name and " + std::to_string(characters.size()) + " states, got " +
                                   std::to_string(toks.size()) + " tokens");
    taxa.push_back(toks[0]);
    std::vector<std::optional<std::string>> row;
    for (std::size_t i = 1; i < toks.size(); ++i)
      row.push_back(toks[i] == "?" ? std::nullopt : std::optional<std::string>(toks[i]));
    cells.push_back(std::move(row));
  }
  if (!header) throw ParseError(lineno, "missing header of character names");
  if (taxa.empty()) throw ParseError(lineno, "no taxa");
  return CharacterMatrix(std::move(taxa), std::move(characters), std::move(cells));
}

void write_matrix(std::ostream& out, const CharacterMatrix& m) {
  for (int c = 0; c < m.characters(); ++c) out << (c ? " " : "") << m.character_name(c);
  out << '\n';
  for (int t = 0; t < m.taxa(); ++t) {
    out << m.taxon_name(t);
    for (int c = 0; c < m.characters(); ++c) out << ' ' << (m.cell(t, c) ? *m.cell(t, c) : "?");
    out << '\n';
  }
}

AdmissibleSet PartitionIntersectionGraph::admissible() const {
  const int n = graph.n();
  AdmissibleSet out(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!graph.adjacent(u, v) && character_of[u] != character_of[v]) out.allow(u, v);
  return out;
}

PartitionIntersectionGraph build_pig(const CharacterMatrix& m) {
  PartitionIntersectionGraph pig;
  std::map<std::pair<int, std::string>, Vertex> index;
  for (int c = 0; c < m.characters(); ++c)
    for (int t = 0; t < m.taxa(); ++t)
      if (const auto& s = m.cell(t, c); s && !index.count({c, *s})) {
        index.emplace(std::make_pair(c, *s), static_cast<Vertex>(pig.states.size()));
        pig.states.emplace_back(c, *s);
        pig.character_of.push_back(c);
      }
  const int n = static_cast<int>(pig.states.size());
  pig.graph = Graph(n);
  std::vector<VertexSet> rows;
  for (int t = 0; t < m.taxa(); ++t) {
    VertexSet row(n);
    for (int c = 0; c < m.characters(); ++c)
      if (const auto& s = m.cell(t, c)) row.insert(index.at({c, *s}));
    for (Vertex u : row)
      for (Vertex v = row.next(u); v != -1; v = row.next(v))
        if (!pig.graph.adjacent(u, v)) pig.graph.add_edge(u, v);
    rows.push_back(std::move(row));
  }
  // Maximal taxon cliques with at least two states; a lone vertex is its own
  // clique.
  std::vector<VertexSet> cliques;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() < 2) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < rows.size() && !dominated; ++j)
      if (i != j && rows[i].is_subset_of(rows[j]) && (rows[i] != rows[j] || j < i)) dominated = true;
    if (!dominated) cliques.push_back(rows[i]);
  }
  if (n == 1) cliques.push_back(VertexSet(1, {0}));
  if (cliques.size() > static_cast<std::size_t>(Part::kMaxCliques))
    throw std::length_error("more than 64 distinct taxon cliques");
  pig.taxon_cover = CliqueCover(n, std::move(cliques));
  return pig;
}

PhylogenyResult perfect_phylogeny(const CharacterMatrix& m, PhyloAlgorithm algo) {
  PhylogenyResult out;
  out.pig = build_pig(m);
  const Graph& g = out.pig.graph;
  const AdmissibleSet admissible = out.pig.admissible();
  if (g.n() == 0) {
    out.compatible = true;
    return out;
  }
  TreeDecomposition td;
  switch (algo) {
    case PhyloAlgorithm::kBtdp: {
      Solution s = solve(g, &out.pig.taxon_cover, SandwichObjective{admissible}, enumerate_pmcs(g));
      out.compatible = s.value.has_value();
      td = std::move(s.witness);
      break;
    }
    case PhyloAlgorithm::kConv: {
      FastOptions opts;
      opts.witness = true;
      FastResult r = sandwich_fast_solve(g, out.pig.taxon_cover, admissible, opts);
      out.compatible = r.value.has_value();
      td = std::move(r.witness);
      break;
    }
    case PhyloAlgorithm::kPolyspace: {
      PolyspaceOptions opts;
      opts.witness = true;
      Solution s = solve_polyspace(g, out.pig.taxon_cover, WeightedFillObjective{admissible.as_weights(g)}, opts);
      out.compatible = s.value && *s.value == 0;
      td = std::move(s.witness);
      break;
    }
  }
  if (out.compatible) out.witness = clique_tree(triangulation_of(g, td));
  return out;
}

}  // namespace cctri
