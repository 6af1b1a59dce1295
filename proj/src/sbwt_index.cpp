#include "sbwt/sbwt_index.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "sbwt/oracle.hpp"

namespace sbwt {

namespace {

constexpr char kMagic[8] = {'S', 'B', 'W', 'T', 'L', 'C', 'S', '1'};

void write_u64(std::ostream& out, std::uint64_t v) {
  unsigned char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t read_u64(std::istream& in) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), 8)) throw FormatError("index file truncated in header");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{buf[i]} << (8 * i);
  return v;
}

}  // namespace

CumulativeCounts::CumulativeCounts(const std::array<std::size_t, kSigma>& row_popcounts) {
  counts_[kSentinel] = 0;
  counts_[kA] = 1;
  for (Symbol c : kDnaSymbols) counts_[c + 1] = counts_[c] + row_popcounts[c - 1];
}

SbwtIndex::SbwtIndex(std::size_t k, std::array<BitVector, kSigma> rows) : k_(k), n_(rows[0].size()) {
  if (k_ == 0) throw std::invalid_argument("k must be positive");
  if (n_ == 0) throw std::invalid_argument("index must have at least one column");
  std::array<std::size_t, kSigma> popcounts{};
  std::size_t total = 0;
  for (std::size_t c = 0; c < kSigma; ++c) {
    if (rows[c].size() != n_) throw std::invalid_argument("matrix rows differ in length");
    popcounts[c] = rows[c].count();
    total += popcounts[c];
    rows_[c] = RankedBitVector(std::move(rows[c]));
  }
  if (total != n_ - 1) {
    throw std::invalid_argument("matrix must hold exactly n - 1 set bits");
  }
  counts_ = CumulativeCounts(popcounts);
}

SymbolSet SbwtIndex::subset(std::size_t rank) const {
  SymbolSet s;
  for (Symbol c : kDnaSymbols) {
    if (rows_[c - 1].get(rank - 1)) s.insert(c);
  }
  return s;
}

std::size_t SbwtIndex::char_rank(Symbol c, std::size_t i) const {
  if (i > n_) throw std::out_of_range("char_rank: position beyond n");
  if (c < kA || c > kT) throw std::invalid_argument("char_rank: not a DNA symbol");
  return rows_[c - 1].rank1(i);
}

std::optional<ColexInterval> SbwtIndex::extend_right(ColexInterval interval, Symbol c) const {
  const std::size_t before = rows_[c - 1].rank1(interval.left - 1);
  const std::size_t upto = rows_[c - 1].rank1(interval.right);
  if (before == upto) return std::nullopt;
  return ColexInterval{counts_[c] + before + 1, counts_[c] + upto};
}

SymbolSet SbwtIndex::enumerate_right(ColexInterval interval) const {
  SymbolSet s;
  for (Symbol c : kDnaSymbols) {
    if (rows_[c - 1].rank1(interval.left - 1) != rows_[c - 1].rank1(interval.right)) s.insert(c);
  }
  return s;
}

std::size_t SbwtIndex::size_in_bytes() const {
  std::size_t total = sizeof(*this);
  for (const auto& row : rows_) total += row.size_in_bytes();
  return total;
}

SbwtIndex build_index(const oracle::SortedSpectrum& spectrum) {
  const auto subsets = oracle::naive_subset_sequence(spectrum);
  std::array<BitVector, kSigma> rows;
  for (auto& row : rows) row = BitVector(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Symbol c : kDnaSymbols) {
      if (subsets[i].contains(c)) rows[c - 1].set(i);
    }
  }
  return SbwtIndex(spectrum.k, std::move(rows));
}

std::size_t ConcatRep::columns() const { return boundaries.count(); }

std::vector<std::vector<std::uint32_t>> ConcatRep::column_chars() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (boundaries.get(i)) {
      out.emplace_back();
    } else {
      if (out.empty() || next >= chars.size()) throw std::invalid_argument("malformed concatenated representation");
      out.back().push_back(chars[next++]);
    }
  }
  if (next != chars.size()) throw std::invalid_argument("malformed concatenated representation");
  return out;
}

ConcatRep to_concat(const SbwtIndex& index) {
  ConcatRep rep;
  rep.width = 1;
  rep.chars.reserve(index.size());
  for (std::size_t i = 1; i <= index.size(); ++i) {
    rep.boundaries.push_back(true);
    for (Symbol c : kDnaSymbols) {
      if (index.row(c).get(i - 1)) {
        rep.chars.push_back(c);
        rep.boundaries.push_back(false);
      }
    }
  }
  return rep;
}

std::array<BitVector, kSigma> concat_to_rows(const ConcatRep& rep) {
  if (rep.width != 1) throw std::invalid_argument("concat_to_rows requires width 1");
  const auto columns = rep.column_chars();
  std::array<BitVector, kSigma> rows;
  for (auto& row : rows) row = BitVector(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::uint32_t c : columns[i]) {
      if (c < kA || c > kT) throw std::invalid_argument("width-1 character is not a DNA symbol");
      rows[c - 1].set(i);
    }
  }
  return rows;
}

void save_index(const SbwtIndex& index, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  write_u64(out, index.k());
  write_u64(out, index.size());
  const std::size_t bytes = (index.size() + 7) / 8;
  std::vector<char> buf(bytes);
  for (Symbol c : kDnaSymbols) {
    const auto& words = index.row(c).bits().words();
    for (std::size_t b = 0; b < bytes; ++b) {
      buf[b] = static_cast<char>(static_cast<unsigned char>(words[b / 8] >> (8 * (b % 8))));
    }
    out.write(buf.data(), static_cast<std::streamsize>(bytes));
  }
  if (!out) throw std::runtime_error("failed to write index");
}

SbwtIndex load_index(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic))) throw FormatError("index file truncated in header");
  if (std::memcmp(magic, kMagic, 7) != 0) throw FormatError("not an index file (bad magic)");
  if (magic[7] != kMagic[7]) throw FormatError("unsupported index format version");
  const std::uint64_t k = read_u64(in);
  const std::uint64_t n = read_u64(in);
  if (k == 0) throw FormatError("index header has k = 0");
  if (n == 0) throw FormatError("index header has n = 0");
  if (n > (std::uint64_t{1} << 48)) throw FormatError("index header declares an implausible n");
  const std::uint64_t bytes = (n + 7) / 8;
  const auto here = in.tellg();
  if (here != std::istream::pos_type(-1)) {
    in.seekg(0, std::ios::end);
    const auto end = in.tellg();
    in.seekg(here);
    if (static_cast<std::uint64_t>(end - here) < kSigma * bytes) {
      throw FormatError("index file truncated in matrix rows");
    }
  }
  std::array<BitVector, kSigma> rows;
  std::vector<unsigned char> buf(bytes);
  for (auto& row : rows) {
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes))) {
      throw FormatError("index file truncated in matrix rows");
    }
    row = BitVector(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((buf[i / 8] >> (i % 8)) & 1u) row.set(i);
    }
    if (n % 8 != 0 && (buf[bytes - 1] >> (n % 8)) != 0) throw FormatError("nonzero padding bits in index row");
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing data after index");
  try {
    return SbwtIndex(k, std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("inconsistent index: ") + e.what());
  }
}

void save_index(const SbwtIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  save_index(index, out);
}

SbwtIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return load_index(in);
}

}  // namespace sbwt
