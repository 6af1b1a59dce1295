#pragma once

// Brute-force reference implementations of the k-spectrum definitions.
// Everything here works on plain strings over "$ACGT" and favours obviously
// correct code over speed; intended for spectra up to ~1e5 k-mers.

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sbwt/alphabet.hpp"
#include "sbwt/lcs_array.hpp"

namespace sbwt::oracle {

// A k-mer as a string over "$ACGT"; '$' only appears as a left pad.
using Kmer = std::string;

// Strictly increasing colexicographic order, as used by std::set below.
struct ColexLess {
  bool operator()(const Kmer& x, const Kmer& y) const;
};

using KmerSet = std::set<Kmer, ColexLess>;

// Extended k-spectrum in colexicographic order. kmers[0] is $^k.
struct SortedSpectrum {
  std::size_t k = 0;
  std::vector<Kmer> kmers;

  std::size_t size() const { return kmers.size(); }
  friend bool operator==(const SortedSpectrum&, const SortedSpectrum&) = default;
};

// True iff reverse(x) < reverse(y) lexicographically. Throws
// std::invalid_argument if the lengths differ.
bool colex_less(std::string_view x, std::string_view y);

// Distinct length-k substrings over all inputs. Inputs must be ACGT only.
KmerSet k_spectrum(const std::vector<std::string>& strings, std::size_t k);

// k-mers of `kmers` with no y in `kmers` such that y[2..k] = x[1..k-1].
KmerSet source_set(const KmerSet& kmers, std::size_t k);

// Union over x of {$^(k-i) x[1..i] : i = 0..k-1}.
KmerSet k_prefix_set(const KmerSet& kmers, std::size_t k);

// S_k ∪ P_k(R_k(S_k)) ∪ {$^k}, colex sorted.
SortedSpectrum extended_spectrum(const std::vector<std::string>& strings, std::size_t k);

// Outgoing-edge label subsets, one per k-mer in colex order.
std::vector<SymbolSet> naive_subset_sequence(const SortedSpectrum& spectrum);

// Longest common suffix of adjacent k-mers by direct comparison.
LcsArray naive_lcs(const SortedSpectrum& spectrum);

// Length of the longest common suffix of two equal-length strings.
std::size_t common_suffix_length(std::string_view x, std::string_view y);

}  // namespace sbwt::oracle
