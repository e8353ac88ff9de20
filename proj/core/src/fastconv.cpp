#include "cctri/fastconv.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <span>
#include <stdexcept>

#include "cctri/pmc.hpp"
#include "cctri/separators.hpp"

namespace cctri {

namespace {

constexpr std::uint32_t kMod = 998244353;
constexpr std::uint32_t kGenerator = 3;
constexpr int kMaxCliques = 28;

std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % kMod);
}
std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a + b >= kMod ? a + b - kMod : a + b; }
std::uint32_t sub(std::uint32_t a, std::uint32_t b) { return a >= b ? a - b : a + kMod - b; }
std::uint32_t power(std::uint32_t b, std::uint64_t e) {
  std::uint32_t r = 1;
  for (; e; e >>= 1, b = mul(b, b))
    if (e & 1) r = mul(r, b);
  return r;
}

void ntt(std::uint32_t* a, std::size_t len, bool invert) {
  for (std::size_t i = 1, j = 0; i < len; ++i) {
    std::size_t bit = len >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t half = 1; half < len; half <<= 1) {
    std::uint32_t w = power(kGenerator, (kMod - 1) / (2 * half));
    if (invert) w = power(w, kMod - 2);
    for (std::size_t i = 0; i < len; i += 2 * half) {
      std::uint32_t x = 1;
      for (std::size_t j = 0; j < half; ++j, x = mul(x, w)) {
        std::uint32_t u = a[i + j], v = mul(a[i + j + half], x);
        a[i + j] = add(u, v);
        a[i + j + half] = sub(u, v);
      }
    }
  }
  if (invert) {
    std::uint32_t inv = power(static_cast<std::uint32_t>(len % kMod), kMod - 2);
    for (std::size_t i = 0; i < len; ++i) a[i] = mul(a[i], inv);
  }
}

std::size_t transform_length(std::int64_t bound) {
  std::size_t len = 1;
  while (len < static_cast<std::size_t>(2 * bound + 1)) len <<= 1;
  return len;
}

double transform_cost(int cc, std::int64_t bound) {
  double len = static_cast<double>(transform_length(bound));
  double masks = static_cast<double>(std::size_t{1} << cc);
  return len * masks * (3.0 * (cc + 1) * (cc + 1) + std::log2(len));
}

double direct_cost(int cc) { return std::pow(3.0, cc); }

bool use_transform(ConvolutionMethod method, int cc, std::int64_t bound) {
  if (method == ConvolutionMethod::kAuto) return transform_cost(cc, bound) < direct_cost(cc);
  return method == ConvolutionMethod::kTransform;
}

void check_pair(const SetFunction& f, const SetFunction& g, std::int64_t bound) {
  if (f.cc != g.cc) throw std::invalid_argument("set functions over different ground sets");
  if (bound < 0) throw std::invalid_argument("negative value bound");
  for (const SetFunction* h : {&f, &g})
    for (std::int64_t v : h->values)
      if (v != SetFunction::kInfinity && (v < 0 || v > bound))
        throw std::invalid_argument("set function value outside [0, bound]");
}

SplitSums split_sums_direct(const SetFunction& f, const SetFunction& g, std::int64_t bound) {
  SplitSums out(f.cc, bound);
  const std::uint64_t masks = std::uint64_t{1} << f.cc;
  for (std::uint64_t y = 0; y < masks; ++y)
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      std::int64_t a = f[x], b = g[y ^ x];
      if (a != SetFunction::kInfinity && b != SetFunction::kInfinity) out.mark(y, a + b);
      if (x == 0) break;
    }
  return out;
}

SplitSums split_sums_transform(const SetFunction& f, const SetFunction& g, std::int64_t bound) {
  const int cc = f.cc;
  const std::size_t masks = std::size_t{1} << cc;
  const std::size_t len = transform_length(bound);
  const std::size_t ranks = static_cast<std::size_t>(cc) + 1;
  std::vector<std::uint32_t> values(masks * len);
  std::vector<std::uint32_t> fh(ranks * masks), gh(ranks * masks), hh(ranks * masks), pw(bound + 1);
  const std::uint32_t root = power(kGenerator, (kMod - 1) / len);
  auto rank_of = [](std::size_t y) { return static_cast<std::size_t>(std::popcount(y)); };
  auto zeta = [&](std::vector<std::uint32_t>& a, bool inverse) {
    for (std::size_t r = 0; r < ranks; ++r) {
      std::uint32_t* row = a.data() + r * masks;
      for (int i = 0; i < cc; ++i)
        for (std::size_t y = 0; y < masks; ++y)
          if (y >> i & 1U) row[y] = inverse ? sub(row[y], row[y ^ (std::size_t{1} << i)]) : add(row[y], row[y ^ (std::size_t{1} << i)]);
    }
  };
  for (std::size_t j = 0; j < len; ++j) {
    const std::uint32_t point = power(root, j);
    pw[0] = 1;
    for (std::int64_t e = 1; e <= bound; ++e) pw[e] = mul(pw[e - 1], point);
    std::fill(fh.begin(), fh.end(), 0);
    std::fill(gh.begin(), gh.end(), 0);
    for (std::size_t y = 0; y < masks; ++y) {
      if (f[y] != SetFunction::kInfinity) fh[rank_of(y) * masks + y] = pw[f[y]];
      if (g[y] != SetFunction::kInfinity) gh[rank_of(y) * masks + y] = pw[g[y]];
    }
    zeta(fh, false);
    zeta(gh, false);
    for (std::size_t r = 0; r < ranks; ++r)
      for (std::size_t y = 0; y < masks; ++y) {
        std::uint32_t acc = 0;
        for (std::size_t a = 0; a <= r; ++a) acc = add(acc, mul(fh[a * masks + y], gh[(r - a) * masks + y]));
        hh[r * masks + y] = acc;
      }
    zeta(hh, true);
    for (std::size_t y = 0; y < masks; ++y) values[y * len + j] = hh[rank_of(y) * masks + y];
  }
  SplitSums out(cc, bound);
  for (std::size_t y = 0; y < masks; ++y) {
    std::uint32_t* row = values.data() + y * len;
    ntt(row, len, true);
    // Coefficients count the splits reaching each sum, at most 2^cc < kMod.
    for (std::int64_t s = 0; s <= 2 * bound; ++s)
      if (row[s] != 0) out.mark(y, s);
  }
  return out;
}

}  // namespace

SplitSums split_sums(const SetFunction& f, const SetFunction& g, std::int64_t bound, ConvolutionMethod method) {
  check_pair(f, g, bound);
  if (f.cc > kMaxCliques) throw std::length_error("set functions over more than 28 elements");
  return use_transform(method, f.cc, bound) ? split_sums_transform(f, g, bound) : split_sums_direct(f, g, bound);
}

SetFunction min_plus_subset_convolution_naive(const SetFunction& f, const SetFunction& g) {
  if (f.cc != g.cc) throw std::invalid_argument("set functions over different ground sets");
  SetFunction out(f.cc);
  const std::uint64_t masks = std::uint64_t{1} << f.cc;
  for (std::uint64_t y = 0; y < masks; ++y)
    for (std::uint64_t x = y;; x = (x - 1) & y) {
      std::int64_t a = f[x], b = g[y ^ x];
      if (a != SetFunction::kInfinity && b != SetFunction::kInfinity) out[y] = std::min(out[y], a + b);
      if (x == 0) break;
    }
  return out;
}

SetFunction min_plus_subset_convolution(const SetFunction& f, const SetFunction& g, std::int64_t bound,
                                        ConvolutionMethod method) {
  check_pair(f, g, bound);
  if (!use_transform(method, f.cc, bound)) return min_plus_subset_convolution_naive(f, g);
  SplitSums sums = split_sums_transform(f, g, bound);
  SetFunction out(f.cc);
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << f.cc); ++y)
    for (std::int64_t s = 0; s <= 2 * bound; ++s)
      if (sums.achievable(y, s)) {
        out[y] = s;
        break;
      }
  return out;
}

namespace {

enum class Kind { kTreewidth, kFill, kSandwich };

std::int64_t pairs(std::int64_t k) { return k * (k - 1) / 2; }

// Per-block choice for the witness: type 1 is N[v]; type 2 is the part W_o
// with the convolution value used (vertex count p of W_1 + W_2 and, for
// fill-in, their block cost).
struct Choice {
  int type = 0;
  Vertex v = -1;
  std::uint64_t wo = 0;
  std::int64_t p = 0;
  std::int64_t cost = 0;
};

class PartDp {
 public:
  PartDp(const Graph& g, const CliqueCover& w, const AdmissibleSet* admissible)
      : g_(g),
        w_(w),
        n_(g.n()),
        cc_(w.size()),
        masks_(std::uint64_t{1} << w.size()),
        all_(masks_ - 1),
        index_(g, enumerate_minimal_separators(g), &w),
        admissible_(admissible) {
    if (cc_ > kMaxCliques) throw std::length_error("covers of more than 28 cliques are not supported");
    vcount_.assign(masks_, 0);
    good_.assign(masks_, 1);
    comp_off_.assign(masks_ + 1, 0);
    for (std::uint64_t y = 0; y < masks_; ++y) {
      VertexSet vy = vertices_of(y);
      vcount_[y] = vy.size();
      for (const VertexSet& d : components_of(g_, vy)) {
        int id = index_.find(d);
        if (id < 0) good_[y] = 0;
        else comp_ids_.push_back(id);
      }
      comp_off_[y + 1] = static_cast<std::uint32_t>(comp_ids_.size());
    }
    by_size_.assign(n_ + 1, {});
    for (int b = 0; b < index_.size(); ++b) by_size_[index_.block(b).vertices.size()].push_back(b);
    type1_.assign(index_.size(), {});
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet nv = closed_neighborhood(g_, VertexSet(n_, {v}));
      if (!is_pmc(g_, nv)) continue;
      std::vector<VertexSet> comps = components(g_, nv);
      for (int b = 0; b < index_.size(); ++b) {
        const Block& c = index_.block(b);
        if (!c.separator.is_subset_of(nv) || !nv.is_subset_of(c.vertices | c.separator)) continue;
        Type1 t{v, {}};
        for (const VertexSet& d : comps)
          if (d.is_subset_of(c.vertices)) t.children.push_back(index_.find(d));
        type1_[b].push_back(std::move(t));
      }
    }
    if (admissible_) {
      sfilter_.assign(masks_, 0);
      for (std::uint64_t y = 0; y < masks_; ++y) {
        VertexSet seen = g_.vertices() - (vertices_of(y) | vertices_of(all_ ^ y));
        sfilter_[y] = admissible_->completable(g_, seen);
      }
    }
  }

  int block_count() const { return index_.size(); }

  FastResult run(Kind kind, int k, const FastOptions& options) {
    kind_ = kind;
    k_ = k;
    method_ = options.method;
    FastResult out;
    out.blocks = index_.size();
    solved_.assign(index_.size(), 0);
    cost_.assign(index_.size(), SetFunction::kInfinity);
    choice_.assign(index_.size(), {});
    if (g_.is_complete()) {
      bool ok = kind == Kind::kTreewidth ? n_ - 1 <= k : kind == Kind::kFill || admissible_->completable(g_, g_.vertices());
      if (ok) {
        out.value = kind == Kind::kTreewidth ? k : 0;
        if (options.witness) out.witness.bags.push_back(g_.vertices());
      }
      return out;
    }
    for (int size = 1; size <= n_; ++size) {
      if (by_size_[size].empty()) continue;
      ++out.iterations;
      round(size);
    }
    for (int b = 0; b < index_.size(); ++b)
      if (solved_[b]) out.solved_blocks.push_back(index_.block(b).vertices);
    int best_sep = -1;
    std::int64_t best = SetFunction::kInfinity;
    for (int s = 0; s < static_cast<int>(index_.separators().size()); ++s) {
      std::int64_t total = pairs(index_.separators()[s].size());
      bool ok = true;
      for (int c : index_.separator_components(s)) {
        ok = ok && solved_[c];
        if (ok) total += cost_[c];
      }
      if (!ok) continue;
      if (kind != Kind::kFill) {
        best_sep = s;
        best = 0;
        break;
      }
      if (total < best) {
        best = total;
        best_sep = s;
      }
    }
    if (best_sep < 0) return out;
    out.value = kind == Kind::kTreewidth ? k : kind == Kind::kFill ? best - static_cast<std::int64_t>(g_.m()) : 0;
    if (options.witness) {
      std::vector<int> tops;
      for (int c : index_.separator_components(best_sep)) tops.push_back(build(c, out.witness));
      const auto& comps = index_.separator_components(best_sep);
      int anchor = index_.separator_full_components(best_sep).front();
      int anchor_top = tops[std::find(comps.begin(), comps.end(), anchor) - comps.begin()];
      for (int t : tops)
        if (t != anchor_top) out.witness.edges.emplace_back(anchor_top, t);
    }
    return out;
  }

 private:
  struct Type1 {
    Vertex v;
    std::vector<int> children;
  };

  VertexSet vertices_of(std::uint64_t y) const {
    VertexSet out(n_);
    for (Vertex v = 0; v < n_; ++v)
      if ((w_.member_mask(v).bits() & ~y) == 0) out.insert(v);
    return out;
  }

  std::span<const int> comps(std::uint64_t y) const {
    return {comp_ids_.data() + comp_off_[y], comp_ids_.data() + comp_off_[y + 1]};
  }

  // Available as W_1 or W_2: non-empty, good, every block solved.
  bool available(std::uint64_t y) const {
    if (y == 0 || !good_[y]) return false;
    if (kind_ == Kind::kSandwich && !sfilter_[y]) return false;
    for (int c : comps(y))
      if (!solved_[c]) return false;
    return true;
  }

  std::int64_t part_cost(std::uint64_t y) const {
    std::int64_t total = 0;
    for (int c : comps(y)) total += cost_[c];
    return total;
  }

  bool is_component_of(int d, const VertexSet& s) const {
    const Block& b = index_.block(d);
    return !b.vertices.intersects(s) && b.separator.is_subset_of(s);
  }

  // Blocks of W_o that are not components of G \ s, or false if one of them is
  // unsolved; adds their cost to *total.
  bool outer_children(std::uint64_t wo, const VertexSet& s, std::int64_t* total, std::vector<int>* list) const {
    for (int d : comps(wo)) {
      if (is_component_of(d, s)) continue;
      if (!solved_[d]) return false;
      if (total) *total += cost_[d];
      if (list) list->push_back(d);
    }
    return true;
  }

  void offer(int c, std::int64_t cost, const Choice& ch) {
    if (!solved_[c] || cost < cost_[c]) {
      solved_[c] = 1;
      cost_[c] = cost;
      choice_[c] = ch;
    }
  }

  void round(int size) {
    // Convolution of the available parts.
    std::vector<std::int64_t> conv;  // treewidth / sandwich: per mask; fill: per (mask, p)
    const std::size_t stride = static_cast<std::size_t>(n_) + 1;
    SetFunction f(cc_);
    std::int64_t max_cost = 0;
    for (std::uint64_t y = 0; y < masks_; ++y) {
      if (!available(y)) continue;
      if (kind_ == Kind::kTreewidth) f[y] = n_ - vcount_[y];
      else if (kind_ == Kind::kSandwich) f[y] = 0;
      else {
        std::int64_t c = part_cost(y);
        max_cost = std::max(max_cost, c);
        f[y] = c;
      }
    }
    if (kind_ == Kind::kFill) {
      conv.assign(masks_ * stride, SetFunction::kInfinity);
      const std::int64_t bound = (max_cost + 1) * static_cast<std::int64_t>(stride) - 1;
      if (use_transform(method_, cc_, bound)) {
        SetFunction packed(cc_);
        for (std::uint64_t y = 0; y < masks_; ++y)
          if (f[y] != SetFunction::kInfinity) packed[y] = f[y] * static_cast<std::int64_t>(stride) + vcount_[y];
        SplitSums sums = split_sums(packed, packed, bound, ConvolutionMethod::kTransform);
        for (std::uint64_t y = 0; y < masks_; ++y)
          for (std::int64_t s = 0; s <= 2 * bound; ++s)
            if (sums.achievable(y, s)) {
              std::int64_t p = s % static_cast<std::int64_t>(stride), c = s / static_cast<std::int64_t>(stride);
              if (p <= n_) conv[y * stride + p] = std::min(conv[y * stride + p], c);
            }
      } else {
        for (std::uint64_t y = 0; y < masks_; ++y)
          for (std::uint64_t x = (y - 1) & y; x != 0; x = (x - 1) & y) {
            std::uint64_t z = y ^ x;
            if (f[x] == SetFunction::kInfinity || f[z] == SetFunction::kInfinity) continue;
            std::int64_t& slot = conv[y * stride + vcount_[x] + vcount_[z]];
            slot = std::min(slot, f[x] + f[z]);
          }
      }
    } else {
      SetFunction h = min_plus_subset_convolution(f, f, kind_ == Kind::kTreewidth ? n_ : 0, method_);
      conv = std::move(h.values);
    }

    // Type-2 transitions, one W_o at a time.
    for (std::uint64_t wo = 1; wo < all_; ++wo) {
      if (!good_[wo]) continue;
      if (kind_ == Kind::kSandwich && !sfilter_[wo]) continue;
      const std::uint64_t y = all_ ^ wo;
      if (kind_ != Kind::kFill && conv[y] == SetFunction::kInfinity) continue;
      std::int64_t t = 0;
      if (kind_ == Kind::kTreewidth) {
        t = 2 * static_cast<std::int64_t>(n_) - conv[y];
        if (n_ - t - vcount_[wo] > k_ + 1) continue;
      }
      for (int cp : comps(wo)) {
        const int sep = index_.separator_of(cp);
        const VertexSet& s = index_.block(cp).separator;
        for (int c : index_.separator_full_components(sep)) {
          if (c == cp || static_cast<int>(index_.block(c).vertices.size()) != size) continue;
          if ((y & ~index_.block(c).key.bits()) != 0) continue;
          if (kind_ != Kind::kFill && solved_[c]) continue;
          std::int64_t outer = 0;
          if (!outer_children(wo, s, &outer, nullptr)) continue;
          if (kind_ != Kind::kFill) {
            offer(c, 0, Choice{2, -1, wo, t, 0});
            continue;
          }
          const std::int64_t base = outer - pairs(s.size());
          for (int p = 0; p <= n_; ++p) {
            std::int64_t inner = conv[y * stride + p];
            if (inner == SetFunction::kInfinity) continue;
            std::int64_t omega = n_ - p - vcount_[wo];
            offer(c, pairs(omega) + inner + base, Choice{2, -1, wo, p, inner});
          }
        }
      }
    }

    // Type-1 transitions.
    for (int c : by_size_[size])
      for (const Type1& t : type1_[c]) {
        const int nv = g_.degree(t.v) + 1;
        if (kind_ == Kind::kTreewidth && nv > k_ + 1) continue;
        if (kind_ == Kind::kSandwich &&
            !admissible_->completable(g_, closed_neighborhood(g_, VertexSet(n_, {t.v}))))
          continue;
        std::int64_t total = pairs(nv) - pairs(index_.block(c).separator.size());
        bool ok = true;
        for (int d : t.children) {
          ok = ok && solved_[d];
          if (ok) total += cost_[d];
        }
        if (!ok) continue;
        offer(c, kind_ == Kind::kFill ? total : 0, Choice{1, t.v, 0, 0, 0});
      }
  }

  int build(int c, TreeDecomposition& td) const {
    const Choice& ch = choice_[c];
    const Block& block = index_.block(c);
    VertexSet omega(n_);
    std::vector<int> children;
    if (ch.type == 1) {
      omega = closed_neighborhood(g_, VertexSet(n_, {ch.v}));
      for (const Type1& t : type1_[c])
        if (t.v == ch.v) children = t.children;
    } else {
      const std::uint64_t y = all_ ^ ch.wo;
      std::uint64_t x = (y - 1) & y;
      for (; x != 0; x = (x - 1) & y) {
        std::uint64_t z = y ^ x;
        if (!available(x) || !available(z)) continue;
        if (kind_ != Kind::kSandwich && vcount_[x] + vcount_[z] != ch.p) continue;
        if (kind_ == Kind::kFill && part_cost(x) + part_cost(z) != ch.cost) continue;
        break;
      }
      if (x == 0) throw std::logic_error("lost the split of a type-2 transition");
      omega = g_.vertices() - (vertices_of(x) | vertices_of(y ^ x) | vertices_of(ch.wo));
      for (int d : comps(x)) children.push_back(d);
      for (int d : comps(y ^ x)) children.push_back(d);
      outer_children(ch.wo, block.separator, nullptr, &children);
    }
    const int top = static_cast<int>(td.bags.size());
    td.bags.push_back(omega);
    for (int d : children) {
      int sub = build(d, td);
      td.edges.emplace_back(top, sub);
    }
    return top;
  }

  const Graph& g_;
  const CliqueCover& w_;
  int n_;
  int cc_;
  std::uint64_t masks_;
  std::uint64_t all_;
  BlockIndex index_;
  const AdmissibleSet* admissible_;
  std::vector<int> vcount_;
  std::vector<char> good_;
  std::vector<std::uint32_t> comp_off_;
  std::vector<int> comp_ids_;
  std::vector<std::vector<int>> by_size_;
  std::vector<std::vector<Type1>> type1_;
  std::vector<char> sfilter_;

  Kind kind_ = Kind::kTreewidth;
  int k_ = 0;
  ConvolutionMethod method_ = ConvolutionMethod::kAuto;
  std::vector<char> solved_;
  std::vector<std::int64_t> cost_;
  std::vector<Choice> choice_;
};

AdmissibleSet restrict_admissible(const AdmissibleSet& a, const std::vector<Vertex>& orig) {
  AdmissibleSet out(static_cast<int>(orig.size()));
  for (std::size_t i = 0; i < orig.size(); ++i)
    for (std::size_t j = i + 1; j < orig.size(); ++j)
      if (a.admissible(orig[i], orig[j])) out.allow(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

// Runs `solve` on every component and merges the results with `merge`
// (applied to the component values).
template <class Solve, class Merge>
FastResult per_component(const Graph& g, const CliqueCover& w, const AdmissibleSet* admissible, const Solve& solve,
                         const Merge& merge, std::int64_t identity) {
  if (auto bad = cover_violation(g, w)) throw std::invalid_argument("invalid cover: " + *bad);
  FastResult out;
  out.value = identity;
  int prev_top = -1;
  for (const VertexSet& k : components(g, g.empty_set())) {
    std::vector<Vertex> orig;
    Graph sub = g.induced(k, &orig);
    CliqueCover sub_w = restrict_cover(w, k);
    std::optional<AdmissibleSet> sub_a;
    if (admissible) sub_a = restrict_admissible(*admissible, orig);
    PartDp dp(sub, sub_w, sub_a ? &*sub_a : nullptr);
    FastResult r = solve(dp);
    out.iterations += r.iterations;
    out.blocks += r.blocks;
    auto lift = [&](const VertexSet& s) {
      VertexSet t(g.n());
      for (Vertex v : s) t.insert(orig[v]);
      return t;
    };
    for (const VertexSet& b : r.solved_blocks) out.solved_blocks.push_back(lift(b));
    if (!r.value) {
      out.value.reset();
      out.witness = {};
      continue;
    }
    if (!out.value) continue;
    out.value = merge(*out.value, *r.value);
    const int offset = static_cast<int>(out.witness.bags.size());
    for (const VertexSet& b : r.witness.bags) out.witness.bags.push_back(lift(b));
    for (auto [a, b] : r.witness.edges) out.witness.edges.emplace_back(a + offset, b + offset);
    if (!r.witness.bags.empty()) {
      if (prev_top >= 0) out.witness.edges.emplace_back(prev_top, offset);
      prev_top = offset;
    }
  }
  if (!out.value) out.witness = {};
  return out;
}

std::int64_t take_max(std::int64_t a, std::int64_t b) { return std::max(a, b); }
std::int64_t take_sum(std::int64_t a, std::int64_t b) { return a + b; }

}  // namespace

FastResult treewidth_fast_decide(const Graph& g, const CliqueCover& w, int k, const FastOptions& options) {
  FastResult r = per_component(
      g, w, nullptr, [&](PartDp& dp) { return dp.run(Kind::kTreewidth, k, options); }, take_max, 0);
  if (r.value) r.value = k;
  return r;
}

bool treewidth_fast(const Graph& g, const CliqueCover& w, int k) {
  return treewidth_fast_decide(g, w, k).value.has_value();
}

FastResult treewidth_fast_optimize(const Graph& g, const CliqueCover& w, const FastOptions& options) {
  return per_component(
      g, w, nullptr,
      [&](PartDp& dp) {
        int lo = 0, hi = 0;
        FastResult best = dp.run(Kind::kTreewidth, hi, options);
        // Exponential search for a feasible bound, then bisection.
        while (!best.value) {
          lo = hi + 1;
          hi = hi == 0 ? 1 : 2 * hi;
          best = dp.run(Kind::kTreewidth, hi, options);
        }
        std::size_t iterations = best.iterations;
        while (lo < hi) {
          int mid = lo + (hi - lo) / 2;
          FastResult r = dp.run(Kind::kTreewidth, mid, options);
          iterations += r.iterations;
          if (r.value) {
            hi = mid;
            best = std::move(r);
          } else {
            lo = mid + 1;
          }
        }
        best.value = hi;
        best.iterations = iterations;
        return best;
      },
      take_max, 0);
}

FastResult fillin_fast_solve(const Graph& g, const CliqueCover& w, const FastOptions& options) {
  return per_component(
      g, w, nullptr, [&](PartDp& dp) { return dp.run(Kind::kFill, 0, options); }, take_sum, 0);
}

std::int64_t fillin_fast(const Graph& g, const CliqueCover& w) { return *fillin_fast_solve(g, w).value; }

FastResult sandwich_fast_solve(const Graph& g, const CliqueCover& w, const AdmissibleSet& admissible,
                               const FastOptions& options) {
  if (admissible.n() != g.n()) throw std::invalid_argument("admissible set over the wrong vertex count");
  return per_component(
      g, w, &admissible, [&](PartDp& dp) { return dp.run(Kind::kSandwich, 0, options); }, take_sum, 0);
}

bool sandwich_fast(const Graph& g, const CliqueCover& w, const AdmissibleSet& admissible) {
  return sandwich_fast_solve(g, w, admissible).value.has_value();
}

}  // namespace cctri
