#pragma once

#include <cstdint>
#include <vector>

#include "sbwt/alphabet.hpp"
#include "sbwt/lcs_array.hpp"
#include "sbwt/oracle.hpp"
#include "sbwt/sbwt_index.hpp"

namespace sbwt {

// Back-to-front decoding of the k-mers by label propagation over the matrix.
// After j rounds, labels()[i-1] is the symbol j positions from the end of the
// k-mer of rank i (for j < k), or $ once that k-mer is exhausted.
class LabelPropagator {
 public:
  explicit LabelPropagator(const SbwtIndex& index);

  const std::vector<Symbol>& labels() const { return labels_; }
  std::size_t rounds() const { return rounds_; }
  std::uint64_t writes() const { return writes_; }

  // One LF step: every k-mer takes the label of its predecessor column.
  void propagate();

  std::size_t working_bytes() const;

 private:
  const SbwtIndex& index_;
  // Column subsets as 4-bit masks, scanned once per round.
  std::vector<std::uint8_t> subsets_;
  std::vector<Symbol> labels_;
  std::vector<Symbol> scratch_;
  std::size_t rounds_ = 0;
  std::uint64_t writes_ = 0;
};

// Last symbol of every k-mer, read off the cumulative counts.
std::vector<Symbol> initial_labels(const SbwtIndex& index);

// O(nk) construction: compare adjacent labels, then propagate, k times.
LcsArray lcs_basic(const SbwtIndex& index, ConstructionStats* stats = nullptr);

// Recovers the full extended spectrum in colex order.
oracle::SortedSpectrum decode_spectrum(const SbwtIndex& index);

}  // namespace sbwt
