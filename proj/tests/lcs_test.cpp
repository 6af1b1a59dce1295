#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "sbwt/lcs_basic.hpp"
#include "sbwt/lcs_linear.hpp"
#include "sbwt/lcs_superalphabet.hpp"
#include "sbwt/oracle.hpp"
#include "sbwt/superchar.hpp"
#include "test_support.hpp"

using namespace sbwt;
using sbwt::testing::kExampleLcs;
using sbwt::testing::kExampleStrings;

namespace {

SbwtIndex example_index() { return build_index(oracle::extended_spectrum(kExampleStrings, 4)); }
SbwtIndex single_index() { return build_index(oracle::SortedSpectrum{4, {"$$$$"}}); }
oracle::SortedSpectrum tiny_spectrum() { return oracle::SortedSpectrum{2, {"$$", "$A", "AA"}}; }

std::string label_string(const std::vector<Symbol>& labels) {
  std::string s;
  for (Symbol c : labels) s.push_back(to_char(c));
  return s;
}

// Sorted width-w path-label keys leaving each column, by walking w edges
// through the decoded k-mers.
std::vector<std::vector<std::uint32_t>> brute_path_labels(const oracle::SortedSpectrum& s, std::size_t width) {
  std::map<std::string, std::size_t> rank_of;
  for (std::size_t i = 0; i < s.size(); ++i) rank_of[s.kmers[i]] = i;
  const auto subsets = oracle::naive_subset_sequence(s);
  std::vector<std::vector<std::uint32_t>> out(s.size());
  for (std::size_t start = 0; start < s.size(); ++start) {
    // (current column, label so far)
    std::vector<std::pair<std::size_t, std::string>> frontier{{start, ""}};
    for (std::size_t step = 0; step < width; ++step) {
      std::vector<std::pair<std::size_t, std::string>> next;
      for (const auto& [col, label] : frontier) {
        for (Symbol c : kDnaSymbols) {
          if (!subsets[col].contains(c)) continue;
          const std::string dest = s.kmers[col].substr(1) + to_char(c);
          next.emplace_back(rank_of.at(dest), label + to_char(c));
        }
      }
      frontier = std::move(next);
    }
    for (const auto& [col, label] : frontier) out[start].push_back(SuperChar::from_string(label).key());
    std::sort(out[start].begin(), out[start].end());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> sorted_columns(const ConcatRep& rep) {
  auto columns = rep.column_chars();
  for (auto& c : columns) std::sort(c.begin(), c.end());
  return columns;
}

}  // namespace

TEST(InitialLabels, Examples) {
  EXPECT_EQ(label_string(initial_labels(example_index())), "$AAAAAAAACGGGGGGTT");
  EXPECT_EQ(label_string(initial_labels(single_index())), "$");
  EXPECT_EQ(label_string(initial_labels(build_index(tiny_spectrum()))), "$AA");
}

TEST(LabelPropagator, OneRound) {
  const auto index = example_index();
  LabelPropagator p(index);
  p.propagate();
  const auto& labels = p.labels();
  EXPECT_EQ(to_char(labels[3]), 'A');
  EXPECT_EQ(to_char(labels[16]), 'G');
  for (std::size_t i = 0; i < index.size(); ++i) EXPECT_EQ(to_char(labels[i]), sbwt::testing::kExampleKmers[i][2]);
}

TEST(LabelPropagator, SingleColumnIsFixedPoint) {
  const auto index = single_index();
  LabelPropagator p(index);
  for (int i = 0; i < 5; ++i) {
    p.propagate();
    EXPECT_EQ(label_string(p.labels()), "$");
  }
}

// After j < k rounds every label is the symbol j positions from the end.
TEST(LabelPropagator, LabelsFollowKmerCharacters) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + trial % 10;
    const auto spectrum = oracle::extended_spectrum(sbwt::testing::repetitive_strings(rng, 4, 50), k);
    const auto index = build_index(spectrum);
    LabelPropagator p(index);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i < index.size(); ++i) {
        ASSERT_EQ(to_char(p.labels()[i]), spectrum.kmers[i][k - 1 - j]) << "round " << j << " rank " << i + 1;
      }
      p.propagate();
    }
    EXPECT_EQ(p.rounds(), k);
  }
}

TEST(LcsBasic, Examples) {
  ConstructionStats stats;
  EXPECT_EQ(lcs_basic(example_index(), &stats).values(), kExampleLcs);
  EXPECT_EQ(stats.rounds, 4u);
  EXPECT_EQ(stats.lcs_writes, 18u);
  EXPECT_EQ(lcs_basic(single_index()).values(), std::vector<LcsArray::value_type>{0});
  EXPECT_EQ(lcs_basic(build_index(tiny_spectrum())).values(), (std::vector<LcsArray::value_type>{0, 0, 1}));
}

TEST(SuperChar, KeyLayout) {
  const auto ag = SuperChar::from_string("AG");
  EXPECT_EQ(ag.width(), 2u);
  EXPECT_EQ(ag.component(0), kG);
  EXPECT_EQ(ag.component(1), kA);
  EXPECT_EQ(ag.to_string(), "AG");
  EXPECT_EQ(ag.suffix(1), SuperChar::from_string("G"));
  EXPECT_EQ(SuperChar::concat(SuperChar::from_string("A"), SuperChar::from_string("G")), ag);
  EXPECT_EQ(SuperChar::concat(SuperChar::from_string("$AC"), SuperChar::from_string("GT")).to_string(), "$ACGT");
  // Key order is colex order.
  EXPECT_LT(SuperChar::from_string("TA"), SuperChar::from_string("AC"));
  EXPECT_LT(SuperChar::from_string("$G"), SuperChar::from_string("AG"));
  EXPECT_THROW(SuperChar::from_string(""), std::invalid_argument);
  EXPECT_THROW(SuperChar::from_string("ACGTACGTA"), std::invalid_argument);
  EXPECT_THROW(SuperChar::from_string("AN"), std::invalid_argument);
}

TEST(SuperChar, KeyOrderMatchesColex) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> sym(0, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string x(4, '$'), y(4, '$');
    for (auto& ch : x) ch = "$ACGT"[sym(rng)];
    for (auto& ch : y) ch = "$ACGT"[sym(rng)];
    EXPECT_EQ(SuperChar::from_string(x) < SuperChar::from_string(y), oracle::colex_less(x, y));
  }
}

TEST(SuffixKeys, MatchKmerSuffixes) {
  const auto spectrum = oracle::extended_spectrum(kExampleStrings, 4);
  const auto index = build_index(spectrum);
  for (std::size_t w : {1u, 2u, 3u, 4u}) {
    const auto keys = suffix_keys(index, w);
    ASSERT_EQ(keys.size(), index.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      EXPECT_EQ(SuperChar(keys[i], w).to_string(), spectrum.kmers[i].substr(4 - w));
    }
    EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
    const auto counts = super_counts(keys, w);
    ASSERT_EQ(counts.size(), SuperChar::key_space(w) + 1);
    for (std::uint32_t u = 0; u <= SuperChar::key_space(w); ++u) {
      const auto expected = std::count_if(keys.begin(), keys.end(), [u](std::uint32_t key) { return key < u; });
      EXPECT_EQ(counts[u], static_cast<std::size_t>(expected));
    }
  }
}

TEST(ExpandAlphabet, ExamplePathLabels) {
  const auto spectrum = oracle::extended_spectrum(kExampleStrings, 4);
  const auto index = build_index(spectrum);
  const auto wide = expand_alphabet(to_concat(index), index);
  EXPECT_EQ(wide.width, 2u);
  EXPECT_EQ(wide.columns(), index.size());
  EXPECT_EQ(sorted_columns(wide), brute_path_labels(spectrum, 2));
  const auto wider = expand_alphabet(wide, index);
  EXPECT_EQ(sorted_columns(wider), brute_path_labels(spectrum, 4));
}

TEST(ExpandAlphabet, SmallCases) {
  const auto single = single_index();
  const auto rep = expand_alphabet(to_concat(single), single);
  EXPECT_TRUE(rep.chars.empty());
  EXPECT_EQ(rep.boundaries.size(), 1u);

  const auto tiny = build_index(tiny_spectrum());
  const auto columns = expand_alphabet(to_concat(tiny), tiny).column_chars();
  ASSERT_EQ(columns.size(), 3u);
  EXPECT_EQ(columns[0], std::vector<std::uint32_t>{SuperChar::from_string("AA").key()});
  EXPECT_TRUE(columns[1].empty());
  EXPECT_TRUE(columns[2].empty());
}

TEST(ExpandAlphabet, Errors) {
  const auto index = example_index();
  EXPECT_THROW(expand_alphabet(to_concat(single_index()), index), std::invalid_argument);
  auto rep = to_concat(index);
  rep.width = 5;
  EXPECT_THROW(expand_alphabet(rep, index), std::invalid_argument);
}

TEST(ConcatOfWidth, MatchesBrutePaths) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + trial % 7;
    const auto spectrum = oracle::extended_spectrum(sbwt::testing::random_strings(rng, 4, 40), k);
    const auto index = build_index(spectrum);
    for (std::size_t width : {1u, 2u, 3u, 5u}) {
      const auto rep = concat_of_width(index, suffix_keys(index, width), width);
      EXPECT_EQ(rep.width, width);
      EXPECT_EQ(sorted_columns(rep), brute_path_labels(spectrum, width)) << "trial " << trial << " width " << width;
    }
  }
}

TEST(LcsSuper, Examples) {
  ConstructionStats stats;
  EXPECT_EQ(lcs_super(example_index(), 2, &stats).values(), kExampleLcs);
  EXPECT_EQ(stats.rounds, 2u);
  EXPECT_EQ(stats.phase2_rounds, 1u);
  EXPECT_EQ(lcs_super(single_index()).values(), std::vector<LcsArray::value_type>{0});
  EXPECT_THROW(lcs_super(example_index(), 1), std::invalid_argument);
  EXPECT_THROW(lcs_super(example_index(), 9), std::invalid_argument);
}

TEST(LcsSuper, OddKAndAllWidths) {
  std::mt19937_64 rng(41);
  const auto index7 = build_index(oracle::extended_spectrum(sbwt::testing::random_kmers(rng, 500, 7), 7));
  EXPECT_EQ(lcs_super(index7, 2), lcs_basic(index7));
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t k = 1 + trial % 20;
    const auto index = build_index(oracle::extended_spectrum(sbwt::testing::repetitive_strings(rng, 5, 80), k));
    const auto expected = lcs_basic(index);
    for (std::size_t width = 2; width <= SuperChar::kMaxWidth; ++width) {
      ConstructionStats stats;
      ASSERT_EQ(lcs_super(index, width, &stats), expected) << "k " << k << " width " << width;
      EXPECT_EQ(stats.phase2_rounds, k > width ? (k - width + width - 1) / width : 0u);
    }
  }
}

TEST(LcsLinear, Examples) {
  ConstructionStats stats;
  EXPECT_EQ(lcs_linear(example_index(), &stats).values(), kExampleLcs);
  EXPECT_EQ(stats.lcs_writes, 18u);
  EXPECT_LE(stats.intervals_pushed, 18u);
  EXPECT_EQ(lcs_linear(single_index(), &stats).values(), std::vector<LcsArray::value_type>{0});
  EXPECT_EQ(stats.lcs_writes, 1u);
  EXPECT_EQ(lcs_linear(build_index(tiny_spectrum())).values(), (std::vector<LcsArray::value_type>{0, 0, 1}));
}

TEST(LcsLinearEndpoints, MatchesOtherAlgorithms) {
  ConstructionStats two_sided, endpoints;
  const auto index = example_index();
  EXPECT_EQ(lcs_linear_endpoints(index, &endpoints), lcs_linear(index, &two_sided));
  EXPECT_EQ(endpoints.rank_queries * 2, two_sided.rank_queries);

  std::mt19937_64 rng(43);
  const auto index8 = build_index(oracle::extended_spectrum(sbwt::testing::random_kmers(rng, 500, 8), 8));
  EXPECT_EQ(lcs_linear_endpoints(index8), lcs_basic(index8));
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 1 + trial % 16;
    const auto strings = trial % 2 == 0 ? sbwt::testing::random_strings(rng, 6, 100)
                                        : sbwt::testing::repetitive_strings(rng, 6, 100);
    const auto spectrum = oracle::extended_spectrum(strings, k);
    const auto index_t = build_index(spectrum);
    const auto expected = oracle::naive_lcs(spectrum);
    ASSERT_EQ(lcs_linear(index_t), expected) << "trial " << trial;
    ASSERT_EQ(lcs_linear_endpoints(index_t), expected) << "trial " << trial;
  }
}
