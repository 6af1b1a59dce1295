#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sbwt::cli {

struct FastaRecord {
  std::string header;
  std::string sequence;  // uppercased
};

// Records in file order; sequence lines are concatenated. Records whose
// sequence is empty are dropped. Throws sbwt::FormatError on sequence data
// before the first header.
std::vector<FastaRecord> read_fasta(std::istream& in);

// Maximal runs of ACGT; any other symbol splits the sequence.
std::vector<std::string> split_at_invalid(std::string_view sequence);

std::string reverse_complement(std::string_view sequence);

// The ACGT pieces of all records, optionally followed by their reverse
// complements.
std::vector<std::string> sequence_pieces(const std::vector<FastaRecord>& records, bool add_reverse_complements);

}  // namespace sbwt::cli
