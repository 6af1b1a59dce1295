#include "sbwt/bit_vector.hpp"

#include <bit>

namespace sbwt {

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

RankedBitVector::RankedBitVector(BitVector bits) : bits_(std::move(bits)) {
  const auto& words = bits_.words();
  const std::size_t entries = words.size() + 1;
  super_.reserve(entries / kWordsPerSuperBlock + 1);
  block_.resize(entries);
  std::uint64_t absolute = 0;
  std::uint64_t relative = 0;
  for (std::size_t w = 0; w < entries; ++w) {
    if (w % kWordsPerSuperBlock == 0) {
      absolute += relative;
      relative = 0;
      super_.push_back(absolute);
    }
    block_[w] = static_cast<std::uint16_t>(relative);
    if (w < words.size()) relative += static_cast<std::uint64_t>(std::popcount(words[w]));
  }
  ones_ = static_cast<std::size_t>(absolute + relative);
}

std::size_t RankedBitVector::rank1(std::size_t i) const {
  const std::size_t w = i >> 6;
  std::uint64_t r = super_[w / kWordsPerSuperBlock] + block_[w];
  if (i & 63) {
    const std::uint64_t mask = (std::uint64_t{1} << (i & 63)) - 1;
    r += static_cast<std::uint64_t>(std::popcount(bits_.words()[w] & mask));
  }
  return static_cast<std::size_t>(r);
}

std::size_t RankedBitVector::size_in_bytes() const {
  return bits_.words().size() * sizeof(std::uint64_t) + super_.size() * sizeof(std::uint64_t) +
         block_.size() * sizeof(std::uint16_t);
}

}  // namespace sbwt
