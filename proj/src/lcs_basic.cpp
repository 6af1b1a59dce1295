#include "sbwt/lcs_basic.hpp"

#include <array>

namespace sbwt {

std::vector<Symbol> initial_labels(const SbwtIndex& index) {
  const auto& counts = index.counts();
  std::vector<Symbol> labels(index.size(), kSentinel);
  for (Symbol c : kDnaSymbols) {
    for (std::size_t rank = counts[c] + 1; rank <= counts.block_end(c); ++rank) labels[rank - 1] = c;
  }
  return labels;
}

LabelPropagator::LabelPropagator(const SbwtIndex& index)
    : index_(index), subsets_(index.size()), labels_(initial_labels(index)), scratch_(index.size()) {
  for (std::size_t i = 0; i < index.size(); ++i) subsets_[i] = index.subset(i + 1).bits();
}

void LabelPropagator::propagate() {
  std::array<std::size_t, kCodes> next{};
  for (Symbol c : kDnaSymbols) next[c] = index_.counts()[c];
  std::fill(scratch_.begin(), scratch_.end(), kSentinel);
  const std::size_t n = subsets_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t mask = subsets_[i];
    if (mask == 0) continue;
    const Symbol label = labels_[i];
    for (Symbol c : kDnaSymbols) {
      if ((mask >> (c - 1)) & 1u) {
        // next[c] is a 1-based rank after the increment; storage is 0-based.
        scratch_[next[c]++] = label;
        ++writes_;
      }
    }
  }
  labels_.swap(scratch_);
  ++rounds_;
}

std::size_t LabelPropagator::working_bytes() const {
  return subsets_.capacity() + labels_.capacity() * sizeof(Symbol) + scratch_.capacity() * sizeof(Symbol);
}

LcsArray lcs_basic(const SbwtIndex& index, ConstructionStats* stats) {
  const std::size_t n = index.size();
  const std::size_t k = index.k();
  std::vector<LcsArray::value_type> lcs(n, 0);
  std::vector<bool> done(n, false);
  done[0] = true;
  std::uint64_t assigned = 1;

  LabelPropagator propagator(index);
  for (std::size_t round = 0; round < k; ++round) {
    const auto& labels = propagator.labels();
    for (std::size_t i = 1; i < n; ++i) {
      if (!done[i] && labels[i] != labels[i - 1]) {
        done[i] = true;
        lcs[i] = static_cast<LcsArray::value_type>(round);
        ++assigned;
      }
    }
    propagator.propagate();
  }

  if (stats != nullptr) {
    stats->rounds = propagator.rounds();
    stats->lcs_writes = assigned;
    stats->propagation_writes = propagator.writes();
    stats->working_bytes = propagator.working_bytes() + n * sizeof(LcsArray::value_type) + (n + 7) / 8;
  }
  return LcsArray(std::move(lcs));
}

oracle::SortedSpectrum decode_spectrum(const SbwtIndex& index) {
  const std::size_t n = index.size();
  const std::size_t k = index.k();
  oracle::SortedSpectrum out{k, std::vector<oracle::Kmer>(n, oracle::Kmer(k, '$'))};
  LabelPropagator propagator(index);
  for (std::size_t round = 0; round < k; ++round) {
    const auto& labels = propagator.labels();
    for (std::size_t i = 0; i < n; ++i) out.kmers[i][k - 1 - round] = to_char(labels[i]);
    if (round + 1 < k) propagator.propagate();
  }
  return out;
}

}  // namespace sbwt
