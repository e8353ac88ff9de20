#include "cctri/separators.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace cctri {

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s, const VertexSet& within) {
  std::vector<VertexSet> out;
  for (VertexSet& c : components_of(g, within - s))
    if (neighborhood(g, c, within) == s) out.push_back(std::move(c));
  return out;
}

std::vector<VertexSet> full_components(const Graph& g, const VertexSet& s) {
  return full_components(g, s, g.vertices());
}

bool is_minimal_separator(const Graph& g, const VertexSet& s, const VertexSet& within) {
  if (!s.is_subset_of(within)) return false;
  int full = 0;
  for (const VertexSet& c : components_of(g, within - s))
    if (neighborhood(g, c, within) == s && ++full == 2) return true;
  return false;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  return is_minimal_separator(g, s, g.vertices());
}

void for_each_minimal_separator(const Graph& g, const VertexSet& within, const VertexSetCallback& emit) {
  std::unordered_set<VertexSet> seen;
  std::deque<VertexSet> queue;
  auto offer = [&](const VertexSet& rest) {
    for (const VertexSet& c : components_of(g, rest)) {
      VertexSet s = neighborhood(g, c, within);
      if (s.empty() || seen.contains(s)) continue;
      if (!is_minimal_separator(g, s, within)) continue;
      seen.insert(s);
      queue.push_back(std::move(s));
    }
  };
  for (Vertex v : within) {
    VertexSet nv = g.neighbors(v) & within;
    nv.insert(v);
    offer(within - nv);
  }
  while (!queue.empty()) {
    VertexSet s = std::move(queue.front());
    queue.pop_front();
    emit(s);
    for (Vertex x : s) offer(within - (s | g.neighbors(x)));
  }
}

namespace {

class PairSearch {
 public:
  PairSearch(const Graph& g, const VertexSet& within, const VertexSetCallback& emit)
      : g_(g), within_(within), emit_(emit) {}

  void run(Vertex a, Vertex b) {
    a_ = a;
    b_ = b;
    VertexSet in(g_.n(), {a});
    VertexSet out(g_.n());
    for (Vertex u : within_) {
      if (u >= a) break;
      out.insert(u);
    }
    out.insert(b);
    grow(in, out);
  }

 private:
  void grow(const VertexSet& in, VertexSet out) {
    VertexSet nin = closed_neighborhood(g_, in) & within_;
    VertexSet cb = component_containing(g_, within_ - nin, b_);
    VertexSet s = neighborhood(g_, cb, within_);
    VertexSet a_side = component_containing(g_, within_ - s, a_);
    if (a_side.intersects(out)) return;
    if (is_canonical(s)) emit_(s);
    for (Vertex x : s - out) {
      if (!g_.adjacent(x, b_)) {
        VertexSet next = a_side;
        next.insert(x);
        grow(next, out);
      }
      out.insert(x);
    }
  }

  bool is_canonical(const VertexSet& s) const {
    Vertex first = -1, second = -1;
    for (const VertexSet& c : components_of(g_, within_ - s)) {
      if (neighborhood(g_, c, within_) != s) continue;
      if (first == -1) {
        first = c.first();
      } else {
        second = c.first();
        break;
      }
    }
    return first == a_ && second == b_;
  }

  const Graph& g_;
  const VertexSet& within_;
  const VertexSetCallback& emit_;
  Vertex a_ = -1, b_ = -1;
};

}  // namespace

void for_each_minimal_separator_polyspace(const Graph& g, const VertexSet& within,
                                          const VertexSetCallback& emit) {
  PairSearch search(g, within, emit);
  for (Vertex a : within)
    for (Vertex b = within.next(a); b != -1; b = within.next(b))
      if (!g.adjacent(a, b)) search.run(a, b);
}

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g) {
  std::vector<VertexSet> out;
  for (const VertexSet& c : components(g, g.empty_set()))
    for_each_minimal_separator(g, c, [&](const VertexSet& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

BlockIndex::BlockIndex(const Graph& g, const std::vector<VertexSet>& separators, const CliqueCover* cover)
    : cover_(cover), separators_(separators) {
  std::sort(separators_.begin(), separators_.end());
  std::unordered_map<VertexSet, int> sep_id;
  for (std::size_t i = 0; i < separators_.size(); ++i) sep_id.emplace(separators_[i], static_cast<int>(i));
  sep_components_.resize(separators_.size());
  sep_full_.resize(separators_.size());
  for (std::size_t i = 0; i < separators_.size(); ++i) {
    const VertexSet& s = separators_[i];
    for (VertexSet& c : components(g, s)) {
      VertexSet nc = neighborhood(g, c);
      if (nc.empty()) continue;
      auto [it, inserted] = by_set_.emplace(c, static_cast<int>(blocks_.size()));
      if (inserted) {
        auto sit = sep_id.find(nc);
        if (sit == sep_id.end()) throw std::logic_error("block neighbourhood is not a listed separator");
        Part key = cover ? cliques_touching(*cover, c) : Part();
        if (cover) by_key_.emplace(key.bits(), it->second);
        separator_of_.push_back(sit->second);
        blocks_.push_back(Block{std::move(c), std::move(nc), key});
      }
      sep_components_[i].push_back(it->second);
      if (blocks_[it->second].separator == s) sep_full_[i].push_back(it->second);
    }
  }
}

int BlockIndex::find(const VertexSet& c) const {
  auto it = by_set_.find(c);
  return it == by_set_.end() ? -1 : it->second;
}

int BlockIndex::find_key(Part p) const {
  auto it = by_key_.find(p.bits());
  return it == by_key_.end() ? -1 : it->second;
}

int BlockIndex::lookup(const VertexSet& c) const {
  if (cover_) {
    int id = find_key(cliques_touching(*cover_, c));
    if (id >= 0 && blocks_[id].vertices == c) return id;
  }
  return find(c);
}

std::vector<Block> all_blocks(const Graph& g, const CliqueCover* cover) {
  BlockIndex index(g, enumerate_minimal_separators(g), cover);
  return index.blocks();
}

}  // namespace cctri
