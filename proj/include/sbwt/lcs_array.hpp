#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sbwt {

// Longest-common-suffix array. Ranks are 1-based in the accessors; the
// underlying storage is exposed 0-based through values().
class LcsArray {
 public:
  using value_type = std::uint32_t;

  LcsArray() = default;
  explicit LcsArray(std::vector<value_type> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  value_type at_rank(std::size_t rank) const { return values_[rank - 1]; }

  const std::vector<value_type>& values() const { return values_; }
  std::vector<value_type>& values() { return values_; }

  friend bool operator==(const LcsArray&, const LcsArray&) = default;

 private:
  std::vector<value_type> values_;
};

// Counters reported by the construction algorithms. Deterministic for a
// given index; wall time is measured by callers.
struct ConstructionStats {
  // Basic: propagation rounds. Linear: traversal rounds that processed at
  // least one interval. Super: phase-1 basic rounds.
  std::size_t rounds = 0;
  // Super only: super-character propagation rounds, one per `width` symbols
  // of the k-mer beyond the first `width`.
  std::size_t phase2_rounds = 0;
  std::uint64_t rank_queries = 0;
  std::uint64_t intervals_pushed = 0;
  // Number of LCS slots assigned, including the definitional LCS[1].
  std::uint64_t lcs_writes = 0;
  // Writes into the scratch label array across all propagation rounds.
  std::uint64_t propagation_writes = 0;
  // Estimate of the working memory held by the algorithm.
  std::size_t working_bytes = 0;
};

}  // namespace sbwt
