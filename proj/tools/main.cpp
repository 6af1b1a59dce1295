#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>

#include "commands.hpp"

namespace {

using namespace sbwt::cli;

// Parses "len=<L>" / "count=<m>" pairs for synthetic verification.
bool parse_random_spec(const std::vector<std::string>& parts, VerifyOptions& options) {
  bool have_len = false;
  bool have_count = false;
  for (const auto& part : parts) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) return false;
    const std::string key = part.substr(0, eq);
    std::size_t value = 0;
    const char* first = part.data() + eq + 1;
    const char* last = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) return false;
    if (key == "len") {
      options.max_length = value;
      have_len = true;
    } else if (key == "count") {
      options.max_count = value;
      have_count = true;
    } else {
      return false;
    }
  }
  return have_len && have_count;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SBWT construction and LCS arrays for DNA k-mer spectra"};
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build an index from a FASTA file");
  build_cmd->add_option("-i,--input", build.input, "FASTA file")->required();
  build_cmd->add_option("-k", build.k, "k-mer length")->required();
  build_cmd->add_option("-o,--output", build.output, "index file")->required();
  build_cmd->add_flag("--rc", build.add_reverse_complements, "also index reverse complements");

  LcsOptions lcs;
  auto* lcs_cmd = app.add_subcommand("lcs", "Compute the LCS array of an index");
  lcs_cmd->add_option("-x,--index", lcs.index, "index file")->required();
  lcs_cmd->add_option("-o,--output", lcs.output, "LCS file")->required();
  lcs_cmd->add_option("-a,--algorithm", lcs.algorithm, "basic, super, linear or linear-endpoints");
  lcs_cmd->add_option("-w,--super-width", lcs.super_width, "symbols per super-character");

  VerifyOptions verify;
  std::string verify_input;
  std::size_t verify_k = 0;
  std::vector<std::string> random_spec;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all LCS algorithms against the naive one");
  auto* verify_input_opt = verify_cmd->add_option("-i,--input", verify_input, "FASTA file");
  auto* verify_k_opt = verify_cmd->add_option("-k", verify_k, "k-mer length (random k in 1..12 if omitted)");
  auto* random_opt = verify_cmd->add_option("--random", random_spec, "synthetic mode: len=<L> count=<m>")
                         ->expected(2);
  verify_cmd->add_option("--trials", verify.trials, "synthetic instances");
  verify_cmd->add_option("--seed", verify.seed, "random seed");
  verify_input_opt->excludes(random_opt);

  DumpOptions dump;
  std::string dump_lcs;
  auto* dump_cmd = app.add_subcommand("dump", "Print the index as a table");
  dump_cmd->add_option("-x,--index", dump.index, "index file")->required();
  auto* dump_lcs_opt = dump_cmd->add_option("-l,--lcs", dump_lcs, "LCS file");

  QueryOptions query;
  std::string query_lcs;
  auto* query_cmd = app.add_subcommand("query", "Run lookup or left-contraction queries");
  query_cmd->require_subcommand(1);
  query_cmd->add_option("-x,--index", query.index, "index file")->required();
  auto* query_lcs_opt = query_cmd->add_option("-l,--lcs", query_lcs, "LCS file");
  auto* lookup_cmd = query_cmd->add_subcommand("lookup", "Colex rank of each k-mer");
  lookup_cmd->add_option("kmers", query.kmers, "k-mers")->required();
  auto* contract_cmd = query_cmd->add_subcommand("contract", "Drop leading symbols of a suffix interval");
  contract_cmd->add_option("--interval", query.interval, "l,r")->required();
  contract_cmd->add_option("--suffix-len", query.suffix_len, "current suffix length")->required();
  contract_cmd->add_option("--point", query.point, "new suffix starts at this position")->required();

  BenchOptions bench;
  std::string bench_algorithms;
  auto* bench_cmd = app.add_subcommand("bench", "Time the LCS algorithms on an index");
  bench_cmd->add_option("-x,--index", bench.index, "index file")->required();
  auto* bench_alg_opt = bench_cmd->add_option("-a,--algorithms", bench_algorithms, "comma-separated list");
  bench_cmd->add_option("-r,--repeats", bench.repeats, "runs per algorithm");
  bench_cmd->add_option("-w,--super-width", bench.super_width, "symbols per super-character");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  try {
    if (*build_cmd) return cmd_build(build, out, err);
    if (*lcs_cmd) return cmd_lcs(lcs, out, err);
    if (*verify_cmd) {
      if (*verify_input_opt) verify.input = verify_input;
      if (*verify_k_opt) verify.k = verify_k;
      if (*random_opt && !parse_random_spec(random_spec, verify)) {
        err << "error: --random expects len=<L> count=<m>\n";
        return kExitUsage;
      }
      if (!verify.input && !*random_opt) {
        err << "error: verify needs --input or --random\n";
        return kExitUsage;
      }
      return cmd_verify(verify, out, err);
    }
    if (*dump_cmd) {
      if (*dump_lcs_opt) dump.lcs = dump_lcs;
      return cmd_dump(dump, out, err);
    }
    if (*query_cmd) {
      if (*query_lcs_opt) query.lcs = query_lcs;
      query.contract = static_cast<bool>(*contract_cmd);
      return cmd_query(query, out, err);
    }
    if (*bench_cmd) {
      if (*bench_alg_opt) {
        bench.algorithms.clear();
        std::size_t start = 0;
        while (start <= bench_algorithms.size()) {
          const auto comma = bench_algorithms.find(',', start);
          const auto end = comma == std::string::npos ? bench_algorithms.size() : comma;
          bench.algorithms.push_back(bench_algorithms.substr(start, end - start));
          start = end + 1;
        }
      }
      return cmd_bench(bench, out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
