#include "sbwt/lcs_linear.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace sbwt {

namespace {

constexpr LcsArray::value_type kUnset = std::numeric_limits<LcsArray::value_type>::max();

// Shared driver. `Entry` is ColexInterval or a bare right endpoint; `expand`
// calls claim(r', entry') for every candidate extension of an entry and
// returns the number of rank queries it issued.
template <typename Entry, typename Expand>
LcsArray traverse(const SbwtIndex& index, Entry whole, Entry sentinel, Expand expand, ConstructionStats* stats) {
  const std::size_t n = index.size();
  std::vector<LcsArray::value_type> lcs(n, kUnset);
  lcs[0] = 0;
  std::uint64_t writes = 1;
  std::uint64_t pushed = 0;
  std::uint64_t queries = 0;
  std::size_t rounds = 0;
  std::size_t peak_entries = 0;

  std::vector<Entry> current{whole};
  std::vector<Entry> next;
  // The $^k k-mer stands for the interval of $; its right neighbour never
  // shares a symbol with it, so LCS[2] = 0 is claimed together with it.
  if (n >= 2) {
    lcs[1] = 0;
    ++writes;
    next.push_back(sentinel);
    ++pushed;
  }

  for (std::size_t i = 1; i <= index.k() && !current.empty(); ++i) {
    const auto value = static_cast<LcsArray::value_type>(i - 1);
    auto claim = [&](std::size_t right, const Entry& entry) {
      // right is a 1-based rank; slot right + 1 lives at index right.
      if (right < n && lcs[right] == kUnset) {
        lcs[right] = value;
        ++writes;
        next.push_back(entry);
        ++pushed;
      }
    };
    for (const Entry& entry : current) queries += expand(entry, claim);
    peak_entries = std::max(peak_entries, current.size() + next.size());
    current.swap(next);
    next.clear();
    ++rounds;
  }

  for (auto v : lcs) {
    if (v == kUnset) throw std::logic_error("linear LCS traversal left a slot unassigned");
  }
  if (stats != nullptr) {
    stats->rounds = rounds;
    stats->rank_queries = queries;
    stats->intervals_pushed = pushed;
    stats->lcs_writes = writes;
    stats->working_bytes = n * sizeof(LcsArray::value_type) + peak_entries * sizeof(Entry);
  }
  return LcsArray(std::move(lcs));
}

}  // namespace

LcsArray lcs_linear(const SbwtIndex& index, ConstructionStats* stats) {
  const auto& counts = index.counts();
  auto expand = [&](const ColexInterval& iv, auto& claim) -> std::uint64_t {
    for (Symbol c : kDnaSymbols) {
      const std::size_t before = index.char_rank_unchecked(c, iv.left - 1);
      const std::size_t upto = index.char_rank_unchecked(c, iv.right);
      if (before == upto) continue;
      claim(counts[c] + upto, ColexInterval{counts[c] + before + 1, counts[c] + upto});
    }
    return 2 * kSigma;
  };
  return traverse(index, ColexInterval{1, index.size()}, ColexInterval{1, 1}, expand, stats);
}

LcsArray lcs_linear_endpoints(const SbwtIndex& index, ConstructionStats* stats) {
  const auto& counts = index.counts();
  auto expand = [&](std::size_t right, auto& claim) -> std::uint64_t {
    for (Symbol c : kDnaSymbols) {
      const std::size_t r = counts[c] + index.char_rank_unchecked(c, right);
      claim(r, r);
    }
    return kSigma;
  };
  return traverse(index, index.size(), std::size_t{1}, expand, stats);
}

}  // namespace sbwt
