#include "sbwt/lcs_superalphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "sbwt/lcs_basic.hpp"

namespace sbwt {

namespace {

void check_width(std::size_t width) {
  if (width == 0 || width > SuperChar::kMaxWidth) throw std::invalid_argument("super-character width out of range");
}

// Start offset of every column's characters, plus a final sentinel.
std::vector<std::size_t> column_offsets(const ConcatRep& rep) {
  std::vector<std::size_t> offsets;
  offsets.reserve(rep.chars.size() + 1);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < rep.boundaries.size(); ++i) {
    if (rep.boundaries.get(i)) {
      offsets.push_back(pos);
    } else {
      ++pos;
    }
  }
  offsets.push_back(pos);
  return offsets;
}

std::vector<std::uint32_t> truncate_keys(std::span<const std::uint32_t> keys, std::size_t from, std::size_t to) {
  const std::uint32_t div = SuperChar::pow5(from - to);
  std::vector<std::uint32_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = keys[i] / div;
  return out;
}

}  // namespace

std::vector<std::uint32_t> suffix_keys(const SbwtIndex& index, std::size_t width) {
  check_width(width);
  std::vector<std::uint32_t> keys(index.size(), 0);
  LabelPropagator propagator(index);
  for (std::size_t j = 0; j < width; ++j) {
    const std::uint32_t weight = SuperChar::pow5(width - 1 - j);
    const auto& labels = propagator.labels();
    for (std::size_t i = 0; i < keys.size(); ++i) keys[i] += labels[i] * weight;
    if (j + 1 < width) propagator.propagate();
  }
  return keys;
}

std::vector<std::size_t> super_counts(std::span<const std::uint32_t> keys, std::size_t width) {
  check_width(width);
  const std::uint32_t space = SuperChar::key_space(width);
  std::vector<std::size_t> counts(space + 1, 0);
  for (std::uint32_t key : keys) {
    if (key >= space) throw std::invalid_argument("super-character key exceeds its width");
    ++counts[key + 1];
  }
  for (std::size_t u = 1; u <= space; ++u) counts[u] += counts[u - 1];
  return counts;
}

ConcatRep compose_concat(const ConcatRep& head, std::span<const std::uint32_t> head_keys, const ConcatRep& tail) {
  check_width(head.width + tail.width);
  const auto tail_offsets = column_offsets(tail);
  const std::size_t n = tail_offsets.size() - 1;
  if (head_keys.size() != n) throw std::invalid_argument("suffix keys do not match the representation");
  std::vector<std::size_t> next = super_counts(head_keys, head.width);

  ConcatRep out;
  out.width = head.width + tail.width;
  const std::uint32_t shift = SuperChar::pow5(head.width);
  std::vector<std::uint32_t> column;
  std::size_t pos = 0;
  std::size_t columns = 0;
  auto flush = [&]() {
    std::sort(column.begin(), column.end());
    out.boundaries.push_back(true);
    for (std::uint32_t key : column) {
      out.chars.push_back(key);
      out.boundaries.push_back(false);
    }
    column.clear();
  };
  for (std::size_t b = 0; b < head.boundaries.size(); ++b) {
    if (head.boundaries.get(b)) {
      if (columns++ > 0) flush();
      continue;
    }
    const std::uint32_t u = head.chars[pos++];
    // 0-based rank of the destination k-mer.
    const std::size_t dest = next[u]++;
    if (dest >= n) throw std::invalid_argument("representation inconsistent with suffix keys");
    for (std::size_t t = tail_offsets[dest]; t < tail_offsets[dest + 1]; ++t) {
      column.push_back(u + tail.chars[t] * shift);
    }
  }
  if (columns > 0) flush();
  if (columns != n) throw std::invalid_argument("head and tail representations differ in column count");
  return out;
}

ConcatRep expand_alphabet(const ConcatRep& rep, const SbwtIndex& index) {
  if (rep.columns() != index.size()) throw std::invalid_argument("representation does not belong to this index");
  if (2 * rep.width > SuperChar::kMaxWidth) throw std::invalid_argument("expanded width exceeds the maximum");
  const auto keys = suffix_keys(index, rep.width);
  return compose_concat(rep, keys, rep);
}

ConcatRep concat_of_width(const SbwtIndex& index, std::span<const std::uint32_t> keys, std::size_t width) {
  check_width(width);
  const ConcatRep base = to_concat(index);
  ConcatRep rep = base;
  while (2 * rep.width <= width) rep = compose_concat(rep, truncate_keys(keys, width, rep.width), rep);
  while (rep.width < width) rep = compose_concat(rep, truncate_keys(keys, width, rep.width), base);
  return rep;
}

void super_propagate(const ConcatRep& rep, std::span<const std::size_t> counts,
                     std::span<const std::uint32_t> labels, std::span<std::uint32_t> out) {
  std::vector<std::size_t> next(counts.begin(), counts.end());
  std::fill(out.begin(), out.end(), 0u);
  const auto& words = rep.boundaries.words();
  const std::size_t bits = rep.boundaries.size();
  std::size_t column = 0;
  std::size_t pos = 0;
  std::uint32_t label = 0;
  for (std::size_t b = 0; b < bits; ++b) {
    if ((words[b >> 6] >> (b & 63)) & 1u) {
      label = labels[column++];
    } else {
      out[next[rep.chars[pos++]]++] = label;
    }
  }
}

LcsArray lcs_super(const SbwtIndex& index, std::size_t width, ConstructionStats* stats) {
  if (width < 2) throw std::invalid_argument("super-character width must be at least 2");
  check_width(width);
  const std::size_t n = index.size();
  const std::size_t k = index.k();
  std::vector<LcsArray::value_type> lcs(n, 0);
  std::vector<bool> done(n, false);
  done[0] = true;
  std::size_t unset = n - 1;

  // Phase 1: plain rounds fill every value below `width` and assemble the
  // last `width` symbols of each k-mer.
  std::vector<std::uint32_t> labels(n, 0);
  LabelPropagator propagator(index);
  for (std::size_t j = 0; j < width; ++j) {
    const auto& current = propagator.labels();
    if (j < k) {
      for (std::size_t i = 1; i < n; ++i) {
        if (!done[i] && current[i] != current[i - 1]) {
          done[i] = true;
          lcs[i] = static_cast<LcsArray::value_type>(j);
          --unset;
        }
      }
    }
    const std::uint32_t weight = SuperChar::pow5(width - 1 - j);
    for (std::size_t i = 0; i < n; ++i) labels[i] += current[i] * weight;
    if (j + 1 < width) propagator.propagate();
  }
  std::size_t working = propagator.working_bytes() + labels.capacity() * sizeof(std::uint32_t);

  // Phase 2: one super-step per `width` symbols. Components at distance >= k
  // from the end lie outside the k-mer and are masked.
  std::size_t phase2_rounds = 0;
  if (k > width) {
    const ConcatRep rep = concat_of_width(index, labels, width);
    const auto counts = super_counts(labels, width);
    std::vector<std::uint32_t> scratch(n);
    std::uint32_t divisor[SuperChar::kMaxWidth];
    for (std::size_t d = 0; d < width; ++d) divisor[d] = SuperChar::pow5(width - 1 - d);
    working += rep.chars.capacity() * sizeof(std::uint32_t) + rep.boundaries.words().capacity() * 8 +
               counts.capacity() * sizeof(std::size_t) * 2 + scratch.capacity() * sizeof(std::uint32_t);

    for (std::size_t r = width; r < k; r += width) {
      super_propagate(rep, counts, labels, scratch);
      labels.swap(scratch);
      ++phase2_rounds;
      const std::size_t usable = std::min(width, k - r);
      if (unset == 0) continue;
      for (std::size_t i = 1; i < n; ++i) {
        if (done[i]) continue;
        const std::uint32_t a = labels[i];
        const std::uint32_t b = labels[i - 1];
        if (a == b && usable == width) continue;
        for (std::size_t d = 0; d < usable; ++d) {
          if ((a / divisor[d]) % 5 != (b / divisor[d]) % 5) {
            done[i] = true;
            lcs[i] = static_cast<LcsArray::value_type>(r + d);
            --unset;
            break;
          }
        }
      }
    }
  }
  if (unset != 0) throw std::logic_error("lcs_super left LCS entries unassigned");

  if (stats != nullptr) {
    stats->rounds = width;
    stats->phase2_rounds = phase2_rounds;
    stats->lcs_writes = n;
    stats->propagation_writes = propagator.writes();
    stats->working_bytes = working + n * sizeof(LcsArray::value_type) + (n + 7) / 8;
  }
  return LcsArray(std::move(lcs));
}

}  // namespace sbwt
