#include "cctri/objective.hpp"

#include <stdexcept>

namespace cctri {

WeightTable::WeightTable(int n, std::int64_t scale)
    : n_(n), scale_(scale), w_(static_cast<std::size_t>(n) * n, scale) {
  if (scale <= 0) throw std::invalid_argument("weight scale must be positive");
}

void WeightTable::set(Vertex u, Vertex v, std::int64_t scaled) {
  if (scaled < 0) throw std::invalid_argument("negative weight");
  w_[static_cast<std::size_t>(u) * n_ + v] = scaled;
  w_[static_cast<std::size_t>(v) * n_ + u] = scaled;
}

std::int64_t WeightTable::fill_cost(const Graph& g, const VertexSet& s) const {
  std::int64_t total = 0;
  for (Vertex u : s) {
    VertexSet miss = s - g.neighbors(u);
    for (Vertex v = miss.next(u); v != -1; v = miss.next(v)) total += at(u, v);
  }
  return total;
}

std::int64_t WeightTable::fill_cost(const Graph& g, const VertexSet& s, const VertexSet& except) const {
  std::int64_t total = 0;
  for (Vertex u : s) {
    VertexSet miss = s - g.neighbors(u);
    if (except.contains(u)) miss -= except;
    for (Vertex v = miss.next(u); v != -1; v = miss.next(v)) total += at(u, v);
  }
  return total;
}

std::string WeightTable::format(std::int64_t scaled) const {
  if (scale_ == 1) return std::to_string(scaled);
  std::string frac = std::to_string(scaled % scale_);
  std::string digits = std::to_string(scale_).substr(1);
  frac = std::string(digits.size() - frac.size(), '0') + frac;
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = std::to_string(scaled / scale_);
  if (!frac.empty()) out += "." + frac;
  return out;
}

AdmissibleSet AdmissibleSet::from_pairs(int n, const std::vector<Edge>& pairs) {
  AdmissibleSet f(n);
  for (auto [u, v] : pairs) f.allow(u, v);
  return f;
}

AdmissibleSet AdmissibleSet::everything(int n) {
  AdmissibleSet f(n);
  for (Vertex v = 0; v < n; ++v) {
    f.allowed_[v] = VertexSet::full(n);
    f.allowed_[v].erase(v);
  }
  return f;
}

void AdmissibleSet::allow(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw std::out_of_range("invalid admissible pair");
  allowed_[u].insert(v);
  allowed_[v].insert(u);
}

bool AdmissibleSet::completable(const Graph& g, const VertexSet& s) const {
  for (Vertex u : s) {
    VertexSet miss = s - g.neighbors(u) - allowed_[u];
    miss.erase(u);
    if (!miss.empty()) return false;
  }
  return true;
}

WeightTable AdmissibleSet::as_weights(const Graph& g) const {
  WeightTable w(n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!g.adjacent(u, v)) w.set(u, v, admissible(u, v) ? 0 : 1);
  return w;
}

std::vector<Edge> AdmissibleSet::pairs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = allowed_[u].next(u); v != -1; v = allowed_[u].next(v)) out.emplace_back(u, v);
  return out;
}

}  // namespace cctri
