#include "sbwt/spectrum_builder.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sbwt {

namespace {

// A k-mer (or (k-1)-mer) given by its last `real` characters, which end just
// before `end`; the remaining positions on the left are '$'.
struct KmerRef {
  const char* end = nullptr;
  std::uint32_t real = 0;
};

// Colex comparison of two length-`len` padded strings.
int compare_colex(const KmerRef& a, const KmerRef& b, std::size_t len) {
  const std::size_t common = std::min<std::size_t>({a.real, b.real, len});
  for (std::size_t d = 0; d < common; ++d) {
    const char ca = a.end[-1 - static_cast<std::ptrdiff_t>(d)];
    const char cb = b.end[-1 - static_cast<std::ptrdiff_t>(d)];
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  // Past `common` at least one side is padding; '$' sorts before any base.
  if (common == len || a.real == b.real) return 0;
  return a.real < b.real ? -1 : 1;
}

KmerRef suffix_of(const KmerRef& x, std::size_t k) {
  return KmerRef{x.end, static_cast<std::uint32_t>(std::min<std::size_t>(x.real, k - 1))};
}

// (k-1)-prefix of a k-mer that is not $^k.
KmerRef prefix_of(const KmerRef& x) { return KmerRef{x.end - 1, x.real - 1}; }

void sort_unique(std::vector<KmerRef>& refs, std::size_t len) {
  std::sort(refs.begin(), refs.end(),
            [len](const KmerRef& a, const KmerRef& b) { return compare_colex(a, b, len) < 0; });
  refs.erase(std::unique(refs.begin(), refs.end(),
                         [len](const KmerRef& a, const KmerRef& b) { return compare_colex(a, b, len) == 0; }),
             refs.end());
}

// Ranks (0-based) at which a new (k-1)-suffix group starts.
std::vector<std::size_t> group_starts(const std::vector<KmerRef>& sorted, std::size_t k) {
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || compare_colex(suffix_of(sorted[i - 1], k), suffix_of(sorted[i], k), k - 1) != 0) {
      starts.push_back(i);
    }
  }
  return starts;
}

std::vector<KmerRef> source_kmers(const std::vector<KmerRef>& spectrum, std::size_t k) {
  const auto starts = group_starts(spectrum, k);
  std::vector<std::size_t> by_prefix(spectrum.size());
  for (std::size_t i = 0; i < by_prefix.size(); ++i) by_prefix[i] = i;
  std::sort(by_prefix.begin(), by_prefix.end(), [&](std::size_t a, std::size_t b) {
    return compare_colex(prefix_of(spectrum[a]), prefix_of(spectrum[b]), k - 1) < 0;
  });
  std::vector<KmerRef> sources;
  std::size_t g = 0;
  for (std::size_t idx : by_prefix) {
    const KmerRef prefix = prefix_of(spectrum[idx]);
    int cmp = 1;
    while (g < starts.size() && (cmp = compare_colex(suffix_of(spectrum[starts[g]], k), prefix, k - 1)) < 0) ++g;
    if (g == starts.size() || cmp != 0) sources.push_back(spectrum[idx]);
  }
  return sources;
}

}  // namespace

SbwtIndex build_index_from_sequences(const std::vector<std::string>& sequences, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > UINT32_MAX) throw std::invalid_argument("k too large");

  std::vector<KmerRef> spectrum;
  for (const auto& s : sequences) {
    if (!is_dna(s)) throw std::invalid_argument("input contains a symbol outside ACGT");
    for (std::size_t e = k; e <= s.size(); ++e) {
      spectrum.push_back(KmerRef{s.data() + e, static_cast<std::uint32_t>(k)});
    }
  }
  sort_unique(spectrum, k);

  std::vector<KmerRef> all = spectrum;
  for (const KmerRef& x : source_kmers(spectrum, k)) {
    const char* begin = x.end - k;
    for (std::size_t i = 1; i < k; ++i) all.push_back(KmerRef{begin + i, static_cast<std::uint32_t>(i)});
  }
  all.push_back(KmerRef{nullptr, 0});
  sort_unique(all, k);

  const std::size_t n = all.size();
  const auto starts = group_starts(all, k);
  std::array<BitVector, kSigma> rows;
  for (auto& row : rows) row = BitVector(n);

  // Every k-mer but $^k has exactly one incoming edge: from the first member
  // of the group whose (k-1)-suffix equals its (k-1)-prefix. Within a block
  // of equal last symbol both sequences are colex sorted, so one forward
  // sweep over the groups suffices.
  std::size_t i = 1;
  while (i < n) {
    const char last = all[i].end[-1];
    std::size_t g = 0;
    for (; i < n && all[i].end[-1] == last; ++i) {
      const KmerRef prefix = prefix_of(all[i]);
      while (g < starts.size() && compare_colex(suffix_of(all[starts[g]], k), prefix, k - 1) < 0) ++g;
      if (g == starts.size() || compare_colex(suffix_of(all[starts[g]], k), prefix, k - 1) != 0) {
        throw std::logic_error("spectrum builder: k-mer without a predecessor group");
      }
      rows[from_char(last) - 1].set(starts[g]);
    }
  }
  return SbwtIndex(k, std::move(rows));
}

}  // namespace sbwt
