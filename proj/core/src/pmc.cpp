#include "cctri/pmc.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace cctri {

bool is_pmc(const Graph& g, const VertexSet& omega, const VertexSet& within) {
  if (omega.empty() || !omega.is_subset_of(within)) return false;
  std::vector<VertexSet> nbhds;
  for (const VertexSet& c : components_of(g, within - omega)) {
    VertexSet nc = neighborhood(g, c, within);
    if (nc == omega) return false;
    nbhds.push_back(std::move(nc));
  }
  for (Vertex u : omega) {
    VertexSet need = omega - g.neighbors(u);
    need.erase(u);
    if (need.empty()) continue;
    for (const VertexSet& nc : nbhds)
      if (nc.contains(u)) need -= nc;
    if (!need.empty()) return false;
  }
  return true;
}

bool is_pmc(const Graph& g, const VertexSet& omega) { return is_pmc(g, omega, g.vertices()); }

std::vector<VertexSet> type1_pmcs(const Graph& g) {
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet nv = g.neighbors(v);
    nv.insert(v);
    if (is_pmc(g, nv)) out.push_back(std::move(nv));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet lift_pmc(const Graph& g, Vertex v, const VertexSet& omega) {
  VertexSet with = omega;
  with.insert(v);
  bool a = is_pmc(g, omega);
  bool b = is_pmc(g, with);
  if (a == b) throw std::logic_error(a ? "both omega and omega+v are PMCs" : "neither omega nor omega+v is a PMC");
  return a ? omega : with;
}

namespace {

// Exactly one of omega and omega+v is a PMC of G[within]; omega+v is the one
// iff every vertex of omega is reachable from v through G[within] \ omega.
void lift_in_place(const Graph& g, Vertex v, VertexSet& omega, const VertexSet& within) {
  VertexSet d = component_containing(g, within - omega, v);
  if (omega.is_subset_of(neighborhood(g, d, within))) omega.insert(v);
}

using SepStream = void (*)(const Graph&, const VertexSet&, const VertexSetCallback&);

SepStream separator_stream(SeparatorEnumeration kind) {
  return kind == SeparatorEnumeration::kHashed ? &for_each_minimal_separator
                                               : &for_each_minimal_separator_polyspace;
}

// PMCs of G[{0..i}] that contain v_i, lifted to G; may repeat.
void enumerate_level(const Graph& g, Vertex i, SepStream seps, const VertexSetCallback& emit) {
  const int n = g.n();
  VertexSet prefix(n);
  for (Vertex u = 0; u <= i; ++u) prefix.insert(u);
  VertexSet h = component_containing(g, prefix, i);

  auto lift_and_emit = [&](VertexSet omega) {
    VertexSet within = prefix;
    for (Vertex j = i + 1; j < n; ++j) {
      within.insert(j);
      lift_in_place(g, j, omega, within);
    }
    emit(omega);
  };

  if (h.size() == 1) {
    lift_and_emit(VertexSet(n, {i}));
    return;
  }
  seps(g, h, [&](const VertexSet& s) {
    if (!s.contains(i)) {
      VertexSet cand = s;
      cand.insert(i);
      if (is_pmc(g, cand, h)) lift_and_emit(cand);
    }
    std::vector<Vertex> sv = s.to_vector();
    for (const VertexSet& c : full_components(g, s, h)) {
      for (std::size_t p = 0; p < sv.size(); ++p) {
        for (std::size_t q = p + 1; q < sv.size(); ++q) {
          Vertex x = sv[p], y = sv[q];
          if (g.adjacent(x, y)) continue;
          VertexSet inner = c;
          inner.insert(x);
          inner.insert(y);
          seps(g, inner, [&](const VertexSet& t) {
            VertexSet cand = s | t;
            if (is_pmc(g, cand, h)) lift_and_emit(cand);
          });
        }
      }
    }
  });
}

}  // namespace

void enumerate_pmcs_dupes(const Graph& g, const VertexSetCallback& emit, SeparatorEnumeration separators) {
  SepStream seps = separator_stream(separators);
  for (Vertex i = 0; i < g.n(); ++i) enumerate_level(g, i, seps, emit);
}

std::vector<VertexSet> enumerate_pmcs(const Graph& g, const PmcOptions& options) {
  SepStream seps = separator_stream(options.separators);
  std::unordered_set<VertexSet> found;
  const int threads = std::max(1, std::min(options.threads, g.n()));
  if (threads == 1) {
    for (Vertex i = 0; i < g.n(); ++i)
      enumerate_level(g, i, seps, [&](const VertexSet& p) { found.insert(p); });
  } else {
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        std::unordered_set<VertexSet> local;
        for (Vertex i = t; i < g.n(); i += threads)
          enumerate_level(g, i, seps, [&](const VertexSet& p) { local.insert(p); });
        std::lock_guard lock(mu);
        found.merge(local);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool enumerate_pmcs_polyspace_until(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                                    std::size_t buffer) {
  if (buffer == 0) buffer = std::max<std::size_t>(static_cast<std::size_t>(g.n()), 16);
  std::optional<VertexSet> last;
  std::vector<VertexSet> window;
  while (true) {
    window.clear();
    enumerate_pmcs_dupes(g, [&](const VertexSet& p) {
      if (last && !(*last < p)) return;
      if (window.size() == buffer && !(p < window.back())) return;
      auto it = std::lower_bound(window.begin(), window.end(), p);
      if (it != window.end() && *it == p) return;
      window.insert(it, p);
      if (window.size() > buffer) window.pop_back();
    });
    for (const VertexSet& p : window)
      if (!visit(p)) return false;
    if (window.size() < buffer) return true;
    last = window.back();
  }
}

void enumerate_pmcs_polyspace(const Graph& g, const VertexSetCallback& emit, std::size_t buffer) {
  enumerate_pmcs_polyspace_until(g, [&](const VertexSet& p) {
    emit(p);
    return true;
  }, buffer);
}

}  // namespace cctri
