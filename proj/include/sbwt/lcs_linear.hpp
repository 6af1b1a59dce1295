#pragma once

#include "sbwt/lcs_array.hpp"
#include "sbwt/sbwt_index.hpp"

namespace sbwt {

// Breadth-first traversal of L-intervals by right extension. Round i assigns
// exactly the LCS values equal to i - 1, and each slot is written once; the
// total work is O(n) rank queries for the fixed DNA alphabet.
LcsArray lcs_linear(const SbwtIndex& index, ConstructionStats* stats = nullptr);

// Same traversal keeping only right endpoints: every entry tries all four
// extensions with a single rank query each.
LcsArray lcs_linear_endpoints(const SbwtIndex& index, ConstructionStats* stats = nullptr);

}  // namespace sbwt
