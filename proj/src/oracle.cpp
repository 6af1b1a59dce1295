#include "sbwt/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sbwt::oracle {

namespace {

void require_length(const KmerSet& kmers, std::size_t k) {
  for (const auto& x : kmers) {
    if (x.size() != k) throw std::invalid_argument("k-mer length differs from k");
  }
}

}  // namespace

bool colex_less(std::string_view x, std::string_view y) {
  if (x.size() != y.size()) throw std::invalid_argument("colex_less: length mismatch");
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

bool ColexLess::operator()(const Kmer& x, const Kmer& y) const { return colex_less(x, y); }

std::size_t common_suffix_length(std::string_view x, std::string_view y) {
  std::size_t len = 0;
  while (len < x.size() && len < y.size() && x[x.size() - 1 - len] == y[y.size() - 1 - len]) ++len;
  return len;
}

KmerSet k_spectrum(const std::vector<std::string>& strings, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  KmerSet result;
  for (const auto& s : strings) {
    if (!is_dna(s)) throw std::invalid_argument("input contains a symbol outside ACGT");
    for (std::size_t i = 0; i + k <= s.size(); ++i) result.insert(s.substr(i, k));
  }
  return result;
}

KmerSet source_set(const KmerSet& kmers, std::size_t k) {
  require_length(kmers, k);
  std::unordered_set<std::string> suffixes;
  for (const auto& y : kmers) suffixes.insert(y.substr(1));
  KmerSet result;
  for (const auto& x : kmers) {
    if (!suffixes.contains(x.substr(0, k - 1))) result.insert(x);
  }
  return result;
}

KmerSet k_prefix_set(const KmerSet& kmers, std::size_t k) {
  require_length(kmers, k);
  KmerSet result;
  for (const auto& x : kmers) {
    for (std::size_t i = 0; i < k; ++i) result.insert(std::string(k - i, '$') + x.substr(0, i));
  }
  return result;
}

SortedSpectrum extended_spectrum(const std::vector<std::string>& strings, std::size_t k) {
  KmerSet all = k_spectrum(strings, k);
  const KmerSet padded = k_prefix_set(source_set(all, k), k);
  all.insert(padded.begin(), padded.end());
  all.insert(std::string(k, '$'));
  return SortedSpectrum{k, std::vector<Kmer>(all.begin(), all.end())};
}

std::vector<SymbolSet> naive_subset_sequence(const SortedSpectrum& spectrum) {
  const auto& xs = spectrum.kmers;
  const std::set<Kmer> members(xs.begin(), xs.end());
  std::vector<SymbolSet> subsets(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::string tail = xs[i].substr(1);
    if (i > 0 && xs[i - 1].substr(1) == tail) continue;
    for (Symbol c : kDnaSymbols) {
      if (members.contains(tail + to_char(c))) subsets[i].insert(c);
    }
  }
  return subsets;
}

LcsArray naive_lcs(const SortedSpectrum& spectrum) {
  const auto& xs = spectrum.kmers;
  std::vector<LcsArray::value_type> values(xs.size(), 0);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    values[i] = static_cast<LcsArray::value_type>(common_suffix_length(xs[i - 1], xs[i]));
  }
  return LcsArray(std::move(values));
}

}  // namespace sbwt::oracle
