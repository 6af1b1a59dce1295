#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>

#include "fasta.hpp"
#include "lcs_file.hpp"
#include "sbwt/lcs_basic.hpp"
#include "sbwt/lcs_linear.hpp"
#include "sbwt/lcs_superalphabet.hpp"
#include "sbwt/oracle.hpp"
#include "sbwt/queries.hpp"
#include "sbwt/spectrum_builder.hpp"

namespace sbwt::cli {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::kBasic, Algorithm::kSuper, Algorithm::kLinear,
                                        Algorithm::kLinearEndpoints};

bool valid_k(std::size_t k) { return k >= 1 && k <= kMaxK; }

bool has_kmer(const std::vector<std::string>& pieces, std::size_t k) {
  return std::any_of(pieces.begin(), pieces.end(), [k](const std::string& p) { return p.size() >= k; });
}

// Reads the ACGT pieces of a FASTA file; reports and returns nullopt on I/O errors.
std::optional<std::vector<std::string>> load_pieces(const std::filesystem::path& path, bool add_rc, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path.string() << "\n";
    return std::nullopt;
  }
  try {
    return sequence_pieces(read_fasta(in), add_rc);
  } catch (const FormatError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<SbwtIndex> load_index_reporting(const std::filesystem::path& path, std::ostream& err) {
  try {
    return load_index(path);
  } catch (const FormatError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

std::optional<LcsArray> load_lcs_reporting(const std::filesystem::path& path, std::size_t n, std::ostream& err) {
  try {
    LcsArray lcs = read_lcs(path);
    if (lcs.size() != n) {
      err << "error: LCS file has " << lcs.size() << " entries but the index has " << n << " k-mers\n";
      return std::nullopt;
    }
    return lcs;
  } catch (const FormatError& e) {
    err << "error: " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string subset_string(SymbolSet s) {
  std::string out;
  for (Symbol c : kDnaSymbols) {
    if (!s.contains(c)) continue;
    if (!out.empty()) out.push_back(',');
    out.push_back(to_char(c));
  }
  return out.empty() ? "-" : out;
}

// Runs every construction path against the oracle. Returns false and
// describes the first disagreement on mismatch.
bool verify_instance(const std::vector<std::string>& pieces, std::size_t k, const VerifyOptions& options,
                     std::ostream& out) {
  const auto spectrum = oracle::extended_spectrum(pieces, k);
  const SbwtIndex index = build_index(spectrum);
  if (!(build_index_from_sequences(pieces, k) == index)) {
    out << "mismatch: scalable builder disagrees with the oracle index (k=" << k << ")\n";
    return false;
  }
  const LcsArray expected = oracle::naive_lcs(spectrum);
  std::vector<LcsArray> results;
  for (Algorithm a : kAllAlgorithms) {
    results.push_back(run_algorithm(a, index, 2));
    if (options.tamper) options.tamper(a, results.back());
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const bool agree = std::all_of(results.begin(), results.end(), [&](const LcsArray& r) {
      return r.size() == expected.size() && r.values()[i] == expected.values()[i];
    });
    if (agree) continue;
    const std::size_t rank = i + 1;
    out << "mismatch at rank " << rank << " (k=" << k << ", n=" << expected.size() << "): naive=" << expected.values()[i];
    for (std::size_t a = 0; a < results.size(); ++a) {
      out << " " << algorithm_name(kAllAlgorithms[a]) << "=";
      if (i < results[a].size()) {
        out << results[a].values()[i];
      } else {
        out << "missing";
      }
    }
    out << "\n";
    if (rank > 1) out << "  rank " << rank - 1 << ": " << spectrum.kmers[i - 1] << "\n";
    out << "  rank " << rank << ": " << spectrum.kmers[i] << "\n";
    return false;
  }
  return true;
}

bool parse_interval(const std::string& text, ColexInterval& interval) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return false;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [p1, e1] = std::from_chars(begin, begin + comma, interval.left);
  auto [p2, e2] = std::from_chars(begin + comma + 1, end, interval.right);
  return e1 == std::errc{} && e2 == std::errc{} && p1 == begin + comma && p2 == end;
}

}  // namespace

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  return std::nullopt;
}

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kBasic: return "basic";
    case Algorithm::kSuper: return "super";
    case Algorithm::kLinear: return "linear";
    case Algorithm::kLinearEndpoints: return "linear-endpoints";
  }
  return "unknown";
}

LcsArray run_algorithm(Algorithm algorithm, const SbwtIndex& index, std::size_t super_width,
                       ConstructionStats* stats) {
  switch (algorithm) {
    case Algorithm::kBasic: return lcs_basic(index, stats);
    case Algorithm::kSuper: return lcs_super(index, super_width, stats);
    case Algorithm::kLinear: return lcs_linear(index, stats);
    case Algorithm::kLinearEndpoints: return lcs_linear_endpoints(index, stats);
  }
  throw std::invalid_argument("unknown algorithm");
}

int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err) {
  if (!valid_k(options.k)) {
    err << "error: k must be in 1.." << kMaxK << "\n";
    return kExitUsage;
  }
  const auto pieces = load_pieces(options.input, options.add_reverse_complements, err);
  if (!pieces) return kExitIo;
  if (!has_kmer(*pieces, options.k)) {
    err << "error: no " << options.k << "-mers in " << options.input.string() << "\n";
    return kExitIo;
  }
  const SbwtIndex index = build_index_from_sequences(*pieces, options.k);
  try {
    save_index(index, options.output);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  out << "n=" << index.size() << " k=" << index.k() << "\n";
  return kExitOk;
}

int cmd_lcs(const LcsOptions& options, std::ostream& out, std::ostream& err) {
  const auto algorithm = parse_algorithm(options.algorithm);
  if (!algorithm) {
    err << "error: unknown algorithm '" << options.algorithm << "'\n";
    return kExitUsage;
  }
  if (options.super_width < 2 || options.super_width > SuperChar::kMaxWidth) {
    err << "error: super width must be in 2.." << SuperChar::kMaxWidth << "\n";
    return kExitUsage;
  }
  const auto index = load_index_reporting(options.index, err);
  if (!index) return kExitIo;
  ConstructionStats stats;
  const auto start = std::chrono::steady_clock::now();
  const LcsArray lcs = run_algorithm(*algorithm, *index, options.super_width, &stats);
  const double ms = elapsed_ms(start);
  try {
    write_lcs(lcs, index->k(), options.output);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  out << "algo=" << algorithm_name(*algorithm) << " ms=" << std::fixed << std::setprecision(3) << ms
      << " bytes=" << stats.working_bytes + index->size_in_bytes() << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  if (options.k && !valid_k(*options.k)) {
    err << "error: k must be in 1.." << kMaxK << "\n";
    return kExitUsage;
  }
  if (options.input) {
    if (!options.k) {
      err << "error: verify on a FASTA file needs -k\n";
      return kExitUsage;
    }
    const auto pieces = load_pieces(*options.input, false, err);
    if (!pieces) return kExitIo;
    if (!has_kmer(*pieces, *options.k)) {
      err << "error: no " << *options.k << "-mers in " << options.input->string() << "\n";
      return kExitIo;
    }
    if (!verify_instance(*pieces, *options.k, options, out)) return kExitVerifyFailed;
    out << "ok: 1 instance\n";
    return kExitOk;
  }

  if (options.max_length == 0 || options.max_count == 0) {
    err << "error: random mode needs len >= 1 and count >= 1\n";
    return kExitUsage;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_k(1, 12);
  std::uniform_int_distribution<std::size_t> pick_count(1, options.max_count);
  std::uniform_int_distribution<std::size_t> pick_length(1, options.max_length);
  std::uniform_int_distribution<int> pick_base(0, 3);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t k = options.k ? *options.k : pick_k(rng);
    std::vector<std::string> pieces(pick_count(rng));
    for (auto& p : pieces) {
      p.resize(pick_length(rng));
      for (char& ch : p) ch = "ACGT"[pick_base(rng)];
    }
    if (!verify_instance(pieces, k, options, out)) {
      out << "  trial " << trial << " of seed " << options.seed << "\n";
      return kExitVerifyFailed;
    }
  }
  out << "ok: " << options.trials << " instances\n";
  return kExitOk;
}

int cmd_dump(const DumpOptions& options, std::ostream& out, std::ostream& err) {
  const auto index = load_index_reporting(options.index, err);
  if (!index) return kExitIo;
  std::optional<LcsArray> lcs;
  if (options.lcs) {
    lcs = load_lcs_reporting(*options.lcs, index->size(), err);
    if (!lcs) return kExitIo;
  }
  const auto spectrum = decode_spectrum(*index);
  for (std::size_t rank = 1; rank <= index->size(); ++rank) {
    out << rank << '\t' << spectrum.kmers[rank - 1] << '\t' << subset_string(index->subset(rank));
    if (lcs) out << '\t' << lcs->at_rank(rank);
    out << '\n';
  }
  return kExitOk;
}

int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err) {
  const auto index = load_index_reporting(options.index, err);
  if (!index) return kExitIo;

  if (!options.contract) {
    for (const auto& kmer : options.kmers) {
      if (kmer.size() != index->k() || !is_dna(kmer)) {
        err << "error: '" << kmer << "' is not an ACGT " << index->k() << "-mer\n";
        return kExitUsage;
      }
    }
    for (const auto& kmer : options.kmers) {
      const auto rank = lookup(*index, kmer);
      out << kmer << '\t';
      if (rank) {
        out << *rank;
      } else {
        out << "absent";
      }
      out << '\n';
    }
    return kExitOk;
  }

  if (!options.lcs) {
    err << "error: contract needs an LCS file\n";
    return kExitUsage;
  }
  ColexInterval interval;
  if (!parse_interval(options.interval, interval) || interval.left < 1 || interval.left > interval.right ||
      interval.right > index->size()) {
    err << "error: interval must be l,r with 1 <= l <= r <= " << index->size() << "\n";
    return kExitUsage;
  }
  if (options.suffix_len < 1 || options.suffix_len > index->k()) {
    err << "error: suffix length must be in 1.." << index->k() << "\n";
    return kExitUsage;
  }
  if (options.point < 1 || options.point > options.suffix_len) {
    err << "error: contraction point must be in 1.." << options.suffix_len << "\n";
    return kExitUsage;
  }
  const auto lcs = load_lcs_reporting(*options.lcs, index->size(), err);
  if (!lcs) return kExitIo;
  const auto result = left_contract(*lcs, SuffixInterval{interval, options.suffix_len}, options.point);
  out << result.interval.left << '\t' << result.interval.right << '\t' << result.suffix_len << '\n';
  return kExitOk;
}

int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<Algorithm> algorithms;
  for (const auto& name : options.algorithms) {
    const auto a = parse_algorithm(name);
    if (!a) {
      err << "error: unknown algorithm '" << name << "'\n";
      return kExitUsage;
    }
    algorithms.push_back(*a);
  }
  if (options.repeats < 1) {
    err << "error: repeats must be at least 1\n";
    return kExitUsage;
  }
  if (options.super_width < 2 || options.super_width > SuperChar::kMaxWidth) {
    err << "error: super width must be in 2.." << SuperChar::kMaxWidth << "\n";
    return kExitUsage;
  }
  const auto index = load_index_reporting(options.index, err);
  if (!index) return kExitIo;

  out << "algorithm\tk\tn\tmedian_ms\trank_queries\trounds\tphase2_rounds\tintervals_pushed\n";
  for (Algorithm a : algorithms) {
    std::vector<double> times;
    ConstructionStats stats;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      stats = ConstructionStats{};
      const auto start = std::chrono::steady_clock::now();
      const LcsArray lcs = run_algorithm(a, *index, options.super_width, &stats);
      times.push_back(elapsed_ms(start));
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median = times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
    out << algorithm_name(a) << '\t' << index->k() << '\t' << index->size() << '\t' << std::fixed
        << std::setprecision(3) << median << '\t' << stats.rank_queries << '\t' << stats.rounds << '\t'
        << stats.phase2_rounds << '\t' << stats.intervals_pushed << '\n';
  }
  return kExitOk;
}

}  // namespace sbwt::cli
