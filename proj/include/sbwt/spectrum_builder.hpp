#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sbwt/sbwt_index.hpp"

namespace sbwt {

// Builds the plain-matrix SBWT of the extended k-spectrum of `sequences`
// (ACGT only, throws std::invalid_argument otherwise) without materialising
// the k-mers: occurrences are sorted as references into the input and the
// subsets are filled by a merge of each last-symbol block against the
// (k-1)-suffix groups. Produces the same index as
// build_index(oracle::extended_spectrum(sequences, k)).
SbwtIndex build_index_from_sequences(const std::vector<std::string>& sequences, std::size_t k);

}  // namespace sbwt
