#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/objective.hpp"
#include "cctri/tree_decomposition.hpp"

namespace cctri {

class CharacterMatrix {
 public:
  CharacterMatrix() = default;
  // cells[t][c]; std::nullopt marks a missing state.
  CharacterMatrix(std::vector<std::string> taxa, std::vector<std::string> characters,
                  std::vector<std::vector<std::optional<std::string>>> cells);

  int taxa() const { return static_cast<int>(taxa_.size()); }
  int characters() const { return static_cast<int>(characters_.size()); }
  const std::string& taxon_name(int t) const { return taxa_[t]; }
  const std::string& character_name(int c) const { return characters_[c]; }
  const std::optional<std::string>& cell(int t, int c) const { return cells_[t][c]; }

 private:
  std::vector<std::string> taxa_;
  std::vector<std::string> characters_;
  std::vector<std::vector<std::optional<std::string>>> cells_;
};

// Header line of character names, then per taxon its name and one state per
// character; "?" is missing; "#" starts a comment line.
CharacterMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const CharacterMatrix& m);

struct PartitionIntersectionGraph {
  Graph graph;
  // Vertex v stands for state `states[v].second` of character `states[v].first`,
  // ordered by character then by first appearance.
  std::vector<std::pair<int, std::string>> states;
  CliqueCover taxon_cover;
  std::vector<int> character_of;

  // Non-edges between vertices of different characters.
  AdmissibleSet admissible() const;
};

PartitionIntersectionGraph build_pig(const CharacterMatrix& m);

enum class PhyloAlgorithm { kBtdp, kConv, kPolyspace };

struct PhylogenyResult {
  bool compatible = false;
  TreeDecomposition witness;  // clique tree of the restricted triangulation
  PartitionIntersectionGraph pig;
};
PhylogenyResult perfect_phylogeny(const CharacterMatrix& m, PhyloAlgorithm algo = PhyloAlgorithm::kConv);

}  // namespace cctri
