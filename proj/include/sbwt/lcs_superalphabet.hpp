#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sbwt/lcs_array.hpp"
#include "sbwt/sbwt_index.hpp"
#include "sbwt/superchar.hpp"

namespace sbwt {

// Width-w super-character key (SuperChar layout) of every k-mer, in rank
// order: its last w symbols, $-padded. Symbols further than k - 1 from the
// end follow the unique incoming path instead of being padded.
std::vector<std::uint32_t> suffix_keys(const SbwtIndex& index, std::size_t width);

// Dense cumulative table over width-w keys: entry u is the number of k-mers
// whose key is smaller than u. `keys` must be in rank order (hence sorted).
std::vector<std::size_t> super_counts(std::span<const std::uint32_t> keys, std::size_t width);

// Column i of the result lists u·d for every u in column i of `head` and
// every d in column dest(i, u) of `tail`, where dest(i, u) is the k-mer
// reached from column i along the edge path spelling u. `head_keys` are the
// width-head.width suffix keys of the k-mers (destinations are located by
// advancing a copy of their cumulative table; no rank queries).
ConcatRep compose_concat(const ConcatRep& head, std::span<const std::uint32_t> head_keys, const ConcatRep& tail);

// Width-2w representation from the width-w one. Throws std::invalid_argument
// if `rep` does not have one column per k-mer or 2w exceeds the maximum width.
ConcatRep expand_alphabet(const ConcatRep& rep, const SbwtIndex& index);

// Width-c representation built by doubling and then composing with width 1.
// `keys` are the width-c suffix keys.
ConcatRep concat_of_width(const SbwtIndex& index, std::span<const std::uint32_t> keys, std::size_t width);

// One super-step: out[dest] = labels[src] for every width-c edge path, all-$
// elsewhere. Equivalent to c consecutive basic propagation rounds.
void super_propagate(const ConcatRep& rep, std::span<const std::size_t> counts,
                     std::span<const std::uint32_t> labels, std::span<std::uint32_t> out);

// LCS construction with super-characters of `width` symbols (2..8).
LcsArray lcs_super(const SbwtIndex& index, std::size_t width = 2, ConstructionStats* stats = nullptr);

}  // namespace sbwt
