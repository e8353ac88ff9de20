#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cctri/graph.hpp"

namespace cctri {

using VertexSetCallback = std::function<void(const VertexSet&)>;

// Components C of G[within] \ s with N(C) = s (neighbourhood inside `within`).
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s, const VertexSet& within);

// A set with at least two full components.
bool is_minimal_separator(const Graph& g, const VertexSet& s);
bool is_minimal_separator(const Graph& g, const VertexSet& s, const VertexSet& within);

// Streams every minimal separator of G[within] exactly once. Keeps a hash set
// of the separators found so far.
void for_each_minimal_separator(const Graph& g, const VertexSet& within, const VertexSetCallback& emit);
// Same output in polynomial working memory: for every non-adjacent pair a < b a
// branching search grows the a-side of a minimal a,b-separator; a separator is
// reported only from its canonical pair.
void for_each_minimal_separator_polyspace(const Graph& g, const VertexSet& within,
                                          const VertexSetCallback& emit);

// Minimal separators of G, sorted lexicographically.
std::vector<VertexSet> enumerate_minimal_separators(const Graph& g);

// Connected C with N(C) a minimal separator; `separator` is N(C).
struct Block {
  VertexSet vertices;
  VertexSet separator;
  Part key;  // W[C]; meaningful only when the index was built with a cover
};

// All blocks of G with id lookup. With a cover, lookups use the part key W[C],
// which identifies a block uniquely; otherwise the vertex set is hashed.
class BlockIndex {
 public:
  BlockIndex(const Graph& g, const std::vector<VertexSet>& separators, const CliqueCover* cover = nullptr);

  int size() const { return static_cast<int>(blocks_.size()); }
  const Block& block(int id) const { return blocks_[id]; }
  const std::vector<Block>& blocks() const { return blocks_; }

  // Id of the block with vertex set c, or -1.
  int find(const VertexSet& c) const;
  // Id of the block with key p, or -1. Requires a cover.
  int find_key(Part p) const;
  // Id of block c: by key when a cover is present (falling back to the vertex
  // set when keys collide across components), else by vertex set.
  int lookup(const VertexSet& c) const;

  const std::vector<VertexSet>& separators() const { return separators_; }
  // Separator index of a block.
  int separator_of(int id) const { return separator_of_[id]; }
  // Block ids of all components of G \ S, and of its full components.
  const std::vector<int>& separator_components(int sep) const { return sep_components_[sep]; }
  const std::vector<int>& separator_full_components(int sep) const { return sep_full_[sep]; }

  bool has_cover() const { return cover_ != nullptr; }

 private:
  const CliqueCover* cover_;
  std::vector<Block> blocks_;
  std::vector<VertexSet> separators_;
  std::vector<int> separator_of_;
  std::vector<std::vector<int>> sep_components_;
  std::vector<std::vector<int>> sep_full_;
  std::unordered_map<VertexSet, int> by_set_;
  std::unordered_map<std::uint64_t, int> by_key_;
};

// Plain block list, ordered by separator then by smallest vertex.
std::vector<Block> all_blocks(const Graph& g, const CliqueCover* cover = nullptr);

}  // namespace cctri
