#include "lcs_file.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "sbwt/sbwt_index.hpp"

namespace sbwt::cli {

namespace {

constexpr char kMagic[8] = {'L', 'C', 'S', 'A', 'R', 'R', '0', '1'};

}  // namespace

std::size_t lcs_value_width(std::size_t k) {
  const std::size_t max_value = k == 0 ? 0 : k - 1;
  if (max_value <= 0xFF) return 1;
  if (max_value <= 0xFFFF) return 2;
  return 4;
}

void write_lcs(const LcsArray& lcs, std::size_t k, std::ostream& out) {
  const std::size_t width = lcs_value_width(k);
  out.write(kMagic, sizeof(kMagic));
  std::vector<unsigned char> buf(8 + 1);
  const std::uint64_t n = lcs.size();
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(n >> (8 * i));
  buf[8] = static_cast<unsigned char>(width);
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  buf.assign(lcs.size() * width, 0);
  for (std::size_t i = 0; i < lcs.size(); ++i) {
    const auto v = lcs.values()[i];
    if (width < 4 && (v >> (8 * width)) != 0) throw std::invalid_argument("LCS value does not fit the value width");
    for (std::size_t b = 0; b < width; ++b) buf[i * width + b] = static_cast<unsigned char>(v >> (8 * b));
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
  if (!out) throw std::runtime_error("failed to write LCS file");
}

void write_lcs(const LcsArray& lcs, std::size_t k, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_lcs(lcs, k, out);
}

LcsArray read_lcs(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic))) throw FormatError("LCS file truncated in header");
  if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw FormatError("not an LCS file (bad magic)");
  unsigned char header[9];
  if (!in.read(reinterpret_cast<char*>(header), sizeof(header))) throw FormatError("LCS file truncated in header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i) n |= std::uint64_t{header[i]} << (8 * i);
  const std::size_t width = header[8];
  if (width != 1 && width != 2 && width != 4) throw FormatError("LCS file has an invalid value width");
  if (n > (std::uint64_t{1} << 48)) throw FormatError("LCS file declares an implausible length");

  std::vector<unsigned char> buf;
  std::vector<LcsArray::value_type> values;
  values.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(n, std::uint64_t{1} << 24)));
  constexpr std::size_t kChunk = 1 << 16;
  std::uint64_t remaining = n;
  while (remaining > 0) {
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kChunk));
    buf.resize(count * width);
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()))) {
      throw FormatError("LCS file truncated");
    }
    for (std::size_t i = 0; i < count; ++i) {
      LcsArray::value_type v = 0;
      for (std::size_t b = 0; b < width; ++b) v |= LcsArray::value_type{buf[i * width + b]} << (8 * b);
      values.push_back(v);
    }
    remaining -= count;
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing data after LCS values");
  return LcsArray(std::move(values));
}

LcsArray read_lcs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_lcs(in);
}

}  // namespace sbwt::cli
