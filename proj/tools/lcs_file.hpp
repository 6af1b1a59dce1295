#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "sbwt/lcs_array.hpp"

namespace sbwt::cli {

// LCS file: "LCSARR01", n (u64 LE), value width w in {1, 2, 4} (one byte),
// then n little-endian w-byte values. w is the smallest width holding k - 1.
std::size_t lcs_value_width(std::size_t k);

void write_lcs(const LcsArray& lcs, std::size_t k, std::ostream& out);
void write_lcs(const LcsArray& lcs, std::size_t k, const std::filesystem::path& path);

// Throws sbwt::FormatError on any malformed input.
LcsArray read_lcs(std::istream& in);
LcsArray read_lcs(const std::filesystem::path& path);

}  // namespace sbwt::cli
