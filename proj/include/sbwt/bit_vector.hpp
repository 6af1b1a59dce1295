#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sbwt {

// Plain growable bitvector, 0-based, LSB-first inside 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void push_back(bool value) {
    if ((size_ & 63) == 0) words_.push_back(0);
    ++size_;
    set(size_ - 1, value);
  }

  std::size_t count() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

// Immutable bitvector with constant-time rank. Two-level directory:
// absolute counts every 512 bits, 16-bit relative counts every 64 bits.
class RankedBitVector {
 public:
  RankedBitVector() : RankedBitVector(BitVector{}) {}
  explicit RankedBitVector(BitVector bits);

  std::size_t size() const { return bits_.size(); }
  bool get(std::size_t i) const { return bits_.get(i); }

  // Number of ones in positions [0, i). Requires i <= size().
  std::size_t rank1(std::size_t i) const;

  std::size_t count() const { return ones_; }
  const BitVector& bits() const { return bits_; }

  std::size_t size_in_bytes() const;

  friend bool operator==(const RankedBitVector& a, const RankedBitVector& b) {
    return a.bits_ == b.bits_;
  }

 private:
  static constexpr std::size_t kSuperBlockBits = 512;
  static constexpr std::size_t kWordsPerSuperBlock = kSuperBlockBits / 64;

  BitVector bits_;
  // Both directories have one entry past the last word so rank1(size()) is defined.
  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> block_;
  std::size_t ones_ = 0;
};

}  // namespace sbwt
