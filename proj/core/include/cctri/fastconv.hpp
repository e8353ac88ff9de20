#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cctri/graph.hpp"
#include "cctri/objective.hpp"
#include "cctri/tree_decomposition.hpp"

namespace cctri {

// Function from the subsets of {0..cc-1} to non-negative integers or
// infinity, indexed by bit mask.
struct SetFunction {
  static constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

  SetFunction() = default;
  explicit SetFunction(int cc) : cc(cc), values(std::size_t{1} << cc, kInfinity) {}

  std::int64_t& operator[](std::uint64_t mask) { return values[mask]; }
  std::int64_t operator[](std::uint64_t mask) const { return values[mask]; }

  int cc = 0;
  std::vector<std::int64_t> values;
};

// kTransform evaluates the ranked zeta/Moebius transforms at the roots of
// unity of an NTT prime and recovers the exact number of splits per sum;
// kDirect enumerates the 3^cc (subset, submask) pairs. kAuto picks the cheaper
// by operation count.
enum class ConvolutionMethod { kAuto, kTransform, kDirect };

// For every Y, which sums f(Y') + g(Y \ Y') over Y' subset of Y are
// achievable with both terms finite. Finite values must lie in [0, M]. Row Y
// of the result has 2M + 1 entries.
class SplitSums {
 public:
  SplitSums(int cc, std::int64_t bound) : bound_(bound), width_(2 * bound + 1), bits_((std::size_t{1} << cc) * width_) {}
  bool achievable(std::uint64_t mask, std::int64_t sum) const { return bits_[mask * width_ + sum]; }
  void mark(std::uint64_t mask, std::int64_t sum) { bits_[mask * width_ + sum] = 1; }
  std::int64_t bound() const { return bound_; }

 private:
  std::int64_t bound_;
  std::size_t width_;
  std::vector<std::uint8_t> bits_;
};

SplitSums split_sums(const SetFunction& f, const SetFunction& g, std::int64_t bound,
                     ConvolutionMethod method = ConvolutionMethod::kAuto);

// (f * g)(Y) = min over Y' subset of Y of f(Y') + g(Y \ Y').
SetFunction min_plus_subset_convolution(const SetFunction& f, const SetFunction& g, std::int64_t bound,
                                        ConvolutionMethod method = ConvolutionMethod::kAuto);
// Reference 3^cc evaluation.
SetFunction min_plus_subset_convolution_naive(const SetFunction& f, const SetFunction& g);

struct FastOptions {
  ConvolutionMethod method = ConvolutionMethod::kAuto;
  bool witness = false;
};

struct FastResult {
  // Treewidth: the bound k when deciding, the treewidth when optimising;
  // fill-in: the fill count; sandwich: 0.
  // Empty when infeasible.
  std::optional<std::int64_t> value;
  TreeDecomposition witness;
  std::size_t iterations = 0;  // main-loop rounds in total
  std::size_t blocks = 0;
  // Blocks whose realization was solved (treewidth within the bound, or
  // sandwich-feasible); for fill-in every block.
  std::vector<VertexSet> solved_blocks;
};

// Block dynamic program whose type-2 transitions are found by subset
// convolution over the parts of the cover. Disconnected graphs are solved per
// component of g with the restricted cover.
FastResult treewidth_fast_decide(const Graph& g, const CliqueCover& w, int k, const FastOptions& options = {});
bool treewidth_fast(const Graph& g, const CliqueCover& w, int k);
// Treewidth by binary search over the decision form.
FastResult treewidth_fast_optimize(const Graph& g, const CliqueCover& w, const FastOptions& options = {});

FastResult fillin_fast_solve(const Graph& g, const CliqueCover& w, const FastOptions& options = {});
std::int64_t fillin_fast(const Graph& g, const CliqueCover& w);

FastResult sandwich_fast_solve(const Graph& g, const CliqueCover& w, const AdmissibleSet& admissible,
                               const FastOptions& options = {});
bool sandwich_fast(const Graph& g, const CliqueCover& w, const AdmissibleSet& admissible);

}  // namespace cctri
