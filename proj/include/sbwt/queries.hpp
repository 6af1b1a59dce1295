#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sbwt/lcs_array.hpp"
#include "sbwt/sbwt_index.hpp"

namespace sbwt {

// All k-mers sharing a common suffix of length suffix_len.
struct SuffixInterval {
  ColexInterval interval;
  std::size_t suffix_len = 0;

  friend bool operator==(const SuffixInterval&, const SuffixInterval&) = default;
};

// Rank of `kmer` (ACGT, length k) or nullopt if it is not in the spectrum.
// Throws std::invalid_argument on a wrong length or a symbol outside ACGT.
std::optional<std::size_t> lookup(const SbwtIndex& index, std::string_view kmer);

// Widens the interval of a suffix X (|X| = suffix_len) to the interval of
// X[t..|X|], 1-based and inclusive, by scanning the LCS array outwards.
// Requires 1 <= t <= suffix_len; throws std::invalid_argument otherwise or if
// the interval does not fit the array.
SuffixInterval left_contract(const LcsArray& lcs, const SuffixInterval& from, std::size_t t);

}  // namespace sbwt
