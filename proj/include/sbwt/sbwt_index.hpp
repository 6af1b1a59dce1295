#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sbwt/alphabet.hpp"
#include "sbwt/bit_vector.hpp"

namespace sbwt {

namespace oracle {
struct SortedSpectrum;
}

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed interval [left, right] of 1-based colexicographic ranks.
struct ColexInterval {
  std::size_t left = 0;
  std::size_t right = 0;

  std::size_t size() const { return right - left + 1; }
  friend bool operator==(const ColexInterval&, const ColexInterval&) = default;
};

// counts[c] = number of k-mers whose last symbol is smaller than c. The
// sentinel k-mer $^k is included, so counts[A] = 1 and the block of k-mers
// ending in c is (counts[c], counts[c] + popcount(row c)].
class CumulativeCounts {
 public:
  CumulativeCounts() = default;
  explicit CumulativeCounts(const std::array<std::size_t, kSigma>& row_popcounts);

  std::size_t operator[](Symbol c) const { return counts_[c]; }
  // One past the last rank of the c-block, i.e. counts[c+1] (n for T).
  std::size_t block_end(Symbol c) const { return counts_[c + 1]; }

  friend bool operator==(const CumulativeCounts&, const CumulativeCounts&) = default;

 private:
  // Indexed by code; counts_[kCodes] = n.
  std::array<std::size_t, kCodes + 1> counts_{};
};

// Plain-matrix SBWT: one ranked bitvector per DNA symbol, one column per
// k-mer of the extended spectrum in colex order. Immutable.
class SbwtIndex {
 public:
  // Throws std::invalid_argument unless the rows have equal length n >= 1,
  // k >= 1, and the rows hold exactly n - 1 set bits in total.
  SbwtIndex(std::size_t k, std::array<BitVector, kSigma> rows);

  std::size_t k() const { return k_; }
  std::size_t size() const { return n_; }

  const RankedBitVector& row(Symbol c) const { return rows_[c - 1]; }
  const CumulativeCounts& counts() const { return counts_; }

  // Subset of column `rank` (1-based).
  SymbolSet subset(std::size_t rank) const;

  // Set bits of row c among columns 1..i. Throws std::out_of_range if i > n.
  std::size_t char_rank(Symbol c, std::size_t i) const;

  // Unchecked variant for inner loops.
  std::size_t char_rank_unchecked(Symbol c, std::size_t i) const { return rows_[c - 1].rank1(i); }

  // Interval of αc from the interval of α, or nullopt if αc occurs nowhere.
  std::optional<ColexInterval> extend_right(ColexInterval interval, Symbol c) const;

  // All c whose right extension of `interval` is nonempty.
  SymbolSet enumerate_right(ColexInterval interval) const;

  std::size_t size_in_bytes() const;

  friend bool operator==(const SbwtIndex& a, const SbwtIndex& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t k_;
  std::size_t n_;
  std::array<RankedBitVector, kSigma> rows_;
  CumulativeCounts counts_;
};

// Builds the index from an oracle spectrum.
SbwtIndex build_index(const oracle::SortedSpectrum& spectrum);

// Concatenated representation: the subsets of all columns flattened into
// `chars`, with `boundaries` = 1 0^|X_1| 1 0^|X_2| ... 1 0^|X_n|. Each
// character is a super-character key of `width` symbols (see superchar.hpp);
// for width 1 the key is the symbol code.
struct ConcatRep {
  std::size_t width = 1;
  std::vector<std::uint32_t> chars;
  BitVector boundaries;

  // Number of columns (ones in `boundaries`).
  std::size_t columns() const;
  // Splits `chars` back into per-column lists.
  std::vector<std::vector<std::uint32_t>> column_chars() const;

  friend bool operator==(const ConcatRep&, const ConcatRep&) = default;
};

ConcatRep to_concat(const SbwtIndex& index);

// Inverse of to_concat for width 1. Throws std::invalid_argument for other
// widths or malformed input.
std::array<BitVector, kSigma> concat_to_rows(const ConcatRep& rep);

// Binary index format: "SBWTLCS1", k (u64 LE), n (u64 LE), then rows A, C, G, T
// as ceil(n/8) bytes each, LSB-first. Load throws FormatError.
void save_index(const SbwtIndex& index, std::ostream& out);
SbwtIndex load_index(std::istream& in);
void save_index(const SbwtIndex& index, const std::filesystem::path& path);
SbwtIndex load_index(const std::filesystem::path& path);

}  // namespace sbwt
