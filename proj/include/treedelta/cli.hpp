#ifndef TREEDELTA_CLI_HPP_
#define TREEDELTA_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treedelta/query.hpp"
#include "treedelta/tree.hpp"

namespace treedelta::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kDisagreement = 3,
  kResourceGuard = 4,
};

// Thrown for flag combinations that make no sense.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { kCsv, kJson };

struct GeneratorSpec {
  TreeKind kind = TreeKind::kRandom;
  VertexId n = 0;
};

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input_path;
  std::optional<GeneratorSpec> generator;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::kCsv;
  Metric metric = Metric::kDprime;
  std::optional<std::string> target;
  std::optional<std::size_t> top;
  Direction direction = Direction::kMax;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  bool count_ops = false;
  VertexId oracle_bound = 500;
  // bench only
  std::vector<std::string> families;
  std::vector<VertexId> sizes;
};

// Inset-edge count above which analyze and query refuse to run.
inline constexpr Count kMaxRecords = 50'000'000;

// Each command writes results to `out` (or config.output_path) and
// diagnostics to `err`. Errors come back as exit codes, never exceptions.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_query(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Tree named by the config: exactly one of input_path / generator.
Tree load_input(const RunConfig& config);

}  // namespace treedelta::cli

#endif  // TREEDELTA_CLI_HPP_
