#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "sbwt/bit_vector.hpp"
#include "sbwt/lcs_basic.hpp"
#include "sbwt/oracle.hpp"
#include "sbwt/sbwt_index.hpp"
#include "sbwt/spectrum_builder.hpp"
#include "test_support.hpp"

using namespace sbwt;
using sbwt::testing::kExampleStrings;

namespace {

SbwtIndex example_index() { return build_index(oracle::extended_spectrum(kExampleStrings, 4)); }

std::string row_string(const SbwtIndex& index, Symbol c) {
  std::string s;
  for (std::size_t i = 0; i < index.size(); ++i) s.push_back(index.row(c).get(i) ? '1' : '0');
  return s;
}

std::string serialize(const SbwtIndex& index) {
  std::ostringstream out;
  save_index(index, out);
  return out.str();
}

SbwtIndex deserialize(const std::string& bytes) {
  std::istringstream in(bytes);
  return load_index(in);
}

}  // namespace

TEST(BitVector, PushSetCount) {
  BitVector bv;
  for (int i = 0; i < 130; ++i) bv.push_back(i % 3 == 0);
  EXPECT_EQ(bv.size(), 130u);
  EXPECT_EQ(bv.count(), 44u);
  bv.set(1);
  EXPECT_TRUE(bv.get(1));
  bv.set(0, false);
  EXPECT_FALSE(bv.get(0));
  EXPECT_EQ(bv.count(), 44u);
}

TEST(RankedBitVector, MatchesNaiveRank) {
  std::mt19937_64 rng(3);
  for (std::size_t size : {0u, 1u, 63u, 64u, 65u, 511u, 512u, 513u, 4096u, 100000u}) {
    for (double density : {0.0, 0.03, 0.5, 1.0}) {
      std::bernoulli_distribution bit(density);
      BitVector bv(size);
      for (std::size_t i = 0; i < size; ++i) bv.set(i, bit(rng));
      const RankedBitVector ranked(bv);
      std::size_t ones = 0;
      for (std::size_t i = 0; i <= size; ++i) {
        ASSERT_EQ(ranked.rank1(i), ones) << "size " << size << " i " << i;
        if (i < size && bv.get(i)) ++ones;
      }
      EXPECT_EQ(ranked.count(), ones);
    }
  }
}

TEST(SbwtIndex, ExampleMatrix) {
  const auto index = example_index();
  ASSERT_EQ(index.size(), 18u);
  EXPECT_EQ(row_string(index, kA), "100011011100010001");
  EXPECT_EQ(row_string(index, kC), "010000000000000000");
  EXPECT_EQ(row_string(index, kG), "001000101011100000");
  EXPECT_EQ(row_string(index, kT), "000000000010010000");
  const auto& C = index.counts();
  EXPECT_EQ(C[kA], 1u);
  EXPECT_EQ(C[kC], 9u);
  EXPECT_EQ(C[kG], 10u);
  EXPECT_EQ(C[kT], 16u);
  EXPECT_EQ(C.block_end(kT), 18u);
}

TEST(SbwtIndex, SingleColumn) {
  const auto index = build_index(oracle::SortedSpectrum{4, {"$$$$"}});
  EXPECT_EQ(index.size(), 1u);
  for (Symbol c : kDnaSymbols) {
    EXPECT_EQ(index.counts()[c], 1u);
    EXPECT_EQ(index.row(c).count(), 0u);
  }
}

TEST(SbwtIndex, CharRank) {
  const auto index = example_index();
  EXPECT_EQ(index.char_rank(kG, 9), 3u);
  EXPECT_EQ(index.char_rank(kA, 18), 8u);
  for (Symbol c : kDnaSymbols) EXPECT_EQ(index.char_rank(c, 0), 0u);
  EXPECT_THROW(index.char_rank(kA, 19), std::out_of_range);
}

TEST(SbwtIndex, ExtendRight) {
  const auto index = example_index();
  EXPECT_EQ(index.extend_right({1, 18}, kA), (ColexInterval{2, 9}));
  EXPECT_EQ(index.extend_right({2, 9}, kG), (ColexInterval{11, 13}));
  EXPECT_FALSE(index.extend_right({1, 1}, kT).has_value());
}

TEST(SbwtIndex, EnumerateRight) {
  const auto index = example_index();
  EXPECT_EQ(index.enumerate_right({1, 18}), SymbolSet(0xF));
  EXPECT_EQ(index.enumerate_right({1, 1}), SymbolSet(1));
  EXPECT_TRUE(index.enumerate_right({17, 17}).empty());
}

TEST(SbwtIndex, ConstructorValidation) {
  std::array<BitVector, kSigma> rows{BitVector(3), BitVector(3), BitVector(3), BitVector(3)};
  EXPECT_THROW(SbwtIndex(2, rows), std::invalid_argument);  // zero ones, need two
  rows[0].set(0);
  rows[0].set(1);
  EXPECT_NO_THROW(SbwtIndex(2, rows));
  EXPECT_THROW(SbwtIndex(0, rows), std::invalid_argument);
  auto uneven = rows;
  uneven[3] = BitVector(4);
  EXPECT_THROW(SbwtIndex(2, uneven), std::invalid_argument);
  std::array<BitVector, kSigma> empty{};
  EXPECT_THROW(SbwtIndex(2, empty), std::invalid_argument);
}

TEST(ConcatRep, Example) {
  const auto rep = to_concat(example_index());
  std::string b;
  for (std::size_t i = 0; i < rep.boundaries.size(); ++i) b.push_back(rep.boundaries.get(i) ? '1' : '0');
  EXPECT_EQ(b, "10101011010101010010100101010011110");
  std::string v;
  for (auto ch : rep.chars) v.push_back(to_char(static_cast<Symbol>(ch)));
  EXPECT_EQ(v, "ACGAAGAAGAGTGGATA");
  EXPECT_EQ(rep.columns(), 18u);
  const std::vector<std::size_t> sizes = {1, 1, 1, 0, 1, 1, 1, 1, 2, 1, 2, 1, 1, 2, 0, 0, 0, 1};
  const auto columns = rep.column_chars();
  ASSERT_EQ(columns.size(), sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) EXPECT_EQ(columns[i].size(), sizes[i]);
}

TEST(ConcatRep, SingleColumnAndRoundTrip) {
  const auto single = to_concat(build_index(oracle::SortedSpectrum{3, {"$$$"}}));
  EXPECT_TRUE(single.chars.empty());
  EXPECT_EQ(single.boundaries.size(), 1u);
  EXPECT_TRUE(single.boundaries.get(0));

  const auto index = example_index();
  const auto rows = concat_to_rows(to_concat(index));
  EXPECT_EQ(SbwtIndex(4, rows), index);

  ConcatRep wide = to_concat(index);
  wide.width = 2;
  EXPECT_THROW(concat_to_rows(wide), std::invalid_argument);
}

TEST(IndexFile, RoundTrip) {
  const auto index = example_index();
  const std::string bytes = serialize(index);
  EXPECT_EQ(bytes.size(), 8u + 16u + 4u * 3u);
  EXPECT_EQ(bytes.substr(0, 8), "SBWTLCS1");
  EXPECT_EQ(deserialize(bytes), index);
}

TEST(IndexFile, Errors) {
  const std::string bytes = serialize(example_index());
  EXPECT_THROW(deserialize(bytes.substr(0, bytes.size() - 1)), FormatError);
  EXPECT_THROW(deserialize(bytes.substr(0, 12)), FormatError);
  EXPECT_THROW(deserialize(""), FormatError);
  EXPECT_THROW(deserialize(bytes + "x"), FormatError);

  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(deserialize(bad_magic), FormatError);
  std::string bad_version = bytes;
  bad_version[7] = '9';
  EXPECT_THROW(deserialize(bad_version), FormatError);

  // Flipping a bit breaks the n - 1 ones invariant.
  std::string bad_counts = bytes;
  bad_counts[24] ^= 0x02;
  EXPECT_THROW(deserialize(bad_counts), FormatError);

  // n = 18 leaves six padding bits in the last byte of each row.
  std::string bad_padding = bytes;
  bad_padding[24 + 2] |= static_cast<char>(0x80);
  EXPECT_THROW(deserialize(bad_padding), FormatError);

  std::string huge = bytes;
  huge[23] = 0x01;
  EXPECT_THROW(deserialize(huge), FormatError);
}

TEST(SpectrumBuilder, ExampleMatchesOracleRoute) {
  EXPECT_EQ(build_index_from_sequences(kExampleStrings, 4), example_index());
}

TEST(SpectrumBuilder, MatchesOracleRouteOnRandomInputs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const auto strings = trial % 2 == 0 ? sbwt::testing::random_strings(rng, 6, 60)
                                        : sbwt::testing::repetitive_strings(rng, 6, 60);
    const std::size_t k = 1 + trial % 13;
    const auto expected = build_index(oracle::extended_spectrum(strings, k));
    ASSERT_EQ(build_index_from_sequences(strings, k), expected) << "trial " << trial << " k " << k;
  }
}

TEST(SpectrumBuilder, EdgeCases) {
  EXPECT_EQ(build_index_from_sequences({}, 3).size(), 1u);
  EXPECT_EQ(build_index_from_sequences({"AAA"}, 2), build_index(oracle::extended_spectrum({"AAA"}, 2)));
  EXPECT_THROW(build_index_from_sequences({"ANA"}, 2), std::invalid_argument);
  EXPECT_THROW(build_index_from_sequences({"ACA"}, 0), std::invalid_argument);
}

TEST(DecodeSpectrum, RoundTrips) {
  EXPECT_EQ(decode_spectrum(example_index()), oracle::extended_spectrum(kExampleStrings, 4));
  EXPECT_EQ(decode_spectrum(build_index(oracle::SortedSpectrum{4, {"$$$$"}})).kmers,
            std::vector<std::string>{"$$$$"});
  std::mt19937_64 rng(5);
  const auto kmers = sbwt::testing::random_kmers(rng, 200, 6);
  const auto spectrum = oracle::extended_spectrum(kmers, 6);
  EXPECT_EQ(decode_spectrum(build_index(spectrum)), spectrum);
}
