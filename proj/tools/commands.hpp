#pragma once

// Subcommands of the sbwt-lcs tool. Each returns a process exit code and
// writes to the given streams, so tests can drive them without a process.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbwt/lcs_array.hpp"
#include "sbwt/sbwt_index.hpp"

namespace sbwt::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitVerifyFailed = 3,
};

inline constexpr std::size_t kMaxK = 4096;

enum class Algorithm { kBasic, kSuper, kLinear, kLinearEndpoints };

std::optional<Algorithm> parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm algorithm);

LcsArray run_algorithm(Algorithm algorithm, const SbwtIndex& index, std::size_t super_width,
                       ConstructionStats* stats = nullptr);

struct BuildOptions {
  std::filesystem::path input;
  std::size_t k = 0;
  std::filesystem::path output;
  bool add_reverse_complements = false;
};
int cmd_build(const BuildOptions& options, std::ostream& out, std::ostream& err);

struct LcsOptions {
  std::filesystem::path index;
  std::filesystem::path output;
  std::string algorithm = "linear";
  std::size_t super_width = 2;
};
int cmd_lcs(const LcsOptions& options, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  // FASTA mode when set, synthetic mode otherwise.
  std::optional<std::filesystem::path> input;
  // Fixed k; in synthetic mode a missing k is drawn from 1..12 per trial.
  std::optional<std::size_t> k;
  std::size_t max_length = 200;
  std::size_t max_count = 10;
  std::size_t trials = 1;
  std::uint64_t seed = 42;
  // Test hook: may alter an algorithm's output before the comparison.
  std::function<void(Algorithm, LcsArray&)> tamper;
};
int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err);

struct DumpOptions {
  std::filesystem::path index;
  std::optional<std::filesystem::path> lcs;
};
int cmd_dump(const DumpOptions& options, std::ostream& out, std::ostream& err);

struct QueryOptions {
  std::filesystem::path index;
  std::optional<std::filesystem::path> lcs;
  // lookup
  std::vector<std::string> kmers;
  // contract
  bool contract = false;
  std::string interval;  // "l,r"
  std::size_t suffix_len = 0;
  std::size_t point = 0;
};
int cmd_query(const QueryOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::filesystem::path index;
  std::vector<std::string> algorithms = {"basic", "super", "linear", "linear-endpoints"};
  std::size_t repeats = 3;
  std::size_t super_width = 2;
};
int cmd_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace sbwt::cli
