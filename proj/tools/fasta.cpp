#include "fasta.hpp"

#include <algorithm>
#include <cctype>
#include <istream>

#include "sbwt/alphabet.hpp"
#include "sbwt/sbwt_index.hpp"

namespace sbwt::cli {

std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line;
  bool open = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      records.push_back(FastaRecord{line.substr(1), {}});
      open = true;
      continue;
    }
    if (!open) throw FormatError("FASTA: sequence data before the first header");
    auto& seq = records.back().sequence;
    for (char ch : line) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
      }
    }
  }
  std::erase_if(records, [](const FastaRecord& r) { return r.sequence.empty(); });
  return records;
}

std::vector<std::string> split_at_invalid(std::string_view sequence) {
  std::vector<std::string> pieces;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= sequence.size(); ++i) {
    if (i == sequence.size() || !is_dna(sequence[i])) {
      if (i > start) pieces.emplace_back(sequence.substr(start, i - start));
      start = i + 1;
    }
  }
  return pieces;
}

std::string reverse_complement(std::string_view sequence) {
  std::string out(sequence.rbegin(), sequence.rend());
  for (char& ch : out) {
    switch (ch) {
      case 'A': ch = 'T'; break;
      case 'C': ch = 'G'; break;
      case 'G': ch = 'C'; break;
      case 'T': ch = 'A'; break;
      default: break;
    }
  }
  return out;
}

std::vector<std::string> sequence_pieces(const std::vector<FastaRecord>& records, bool add_reverse_complements) {
  std::vector<std::string> pieces;
  for (const auto& record : records) {
    for (auto& piece : split_at_invalid(record.sequence)) pieces.push_back(std::move(piece));
  }
  if (add_reverse_complements) {
    const std::size_t forward = pieces.size();
    for (std::size_t i = 0; i < forward; ++i) pieces.push_back(reverse_complement(pieces[i]));
  }
  return pieces;
}

}  // namespace sbwt::cli
