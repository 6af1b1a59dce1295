#include "sbwt/queries.hpp"

#include <stdexcept>

namespace sbwt {

std::optional<std::size_t> lookup(const SbwtIndex& index, std::string_view kmer) {
  if (kmer.size() != index.k()) throw std::invalid_argument("query length differs from k");
  if (!is_dna(kmer)) throw std::invalid_argument("query contains a symbol outside ACGT");
  ColexInterval interval{1, index.size()};
  for (char ch : kmer) {
    const auto next = index.extend_right(interval, from_char(ch));
    if (!next) return std::nullopt;
    interval = *next;
  }
  // Distinct k-mers: a full-length match is a single rank.
  if (interval.left != interval.right) throw std::logic_error("lookup ended on a non-singleton interval");
  return interval.left;
}

SuffixInterval left_contract(const LcsArray& lcs, const SuffixInterval& from, std::size_t t) {
  const std::size_t n = lcs.size();
  const auto& iv = from.interval;
  if (iv.left < 1 || iv.left > iv.right || iv.right > n) throw std::invalid_argument("interval outside the LCS array");
  if (t < 1 || t > from.suffix_len) throw std::invalid_argument("contraction point out of range");
  const std::size_t m = from.suffix_len - t + 1;

  std::size_t left = iv.left;
  while (left > 1 && lcs.at_rank(left) >= m) --left;
  std::size_t right = iv.right;
  while (right < n && lcs.at_rank(right + 1) >= m) ++right;
  return SuffixInterval{ColexInterval{left, right}, m};
}

}  // namespace sbwt
