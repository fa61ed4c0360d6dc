// treedelta: Wiener-index decrease of every inset edge of a tree.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "treedelta/cli.hpp"

namespace {

using treedelta::cli::RunConfig;

struct InputFlags {
  std::string file;
  std::string generate;
  int n = 0;
};

void add_input(CLI::App& cmd, InputFlags& flags, RunConfig& config) {
  cmd.add_option("input", flags.file, "Tree edge-list file");
  cmd.add_option("--generate", flags.generate,
                 "Generate the input instead: path|star|caterpillar|random");
  cmd.add_option("--n", flags.n, "Vertex count for --generate");
  cmd.add_option("--seed", config.seed, "Generator seed");
}

void resolve_input(const InputFlags& flags, RunConfig& config) {
  if (!flags.file.empty()) config.input_path = flags.file;
  if (!flags.generate.empty()) {
    config.generator = treedelta::cli::GeneratorSpec{
        treedelta::parse_tree_kind(flags.generate), flags.n};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Wiener-index decrease for every inset edge of a tree"};
  app.require_subcommand(1);

  RunConfig config;
  InputFlags input;
  std::string output;
  std::string format = "csv";
  std::string metric = "dprime";
  std::string target;
  std::size_t top = 0;
  bool want_max = false;
  bool want_min = false;
  std::string gen_kind;
  int gen_n = 0;

  auto* analyze = app.add_subcommand("analyze", "D' and AD' for every inset edge");
  add_input(*analyze, input, config);
  analyze->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("-o,--output", output, "Output file (default stdout)");
  analyze->add_option("--workers", config.workers, "Sweep threads");
  analyze->add_flag("--count-ops", config.count_ops, "Report basic op count");

  auto* query = app.add_subcommand("query", "Closest-to-target or top-k lookup");
  add_input(*query, input, config);
  query->add_option("--target", target, "Target value: integer, p/q or decimal");
  query->add_option("--metric", metric, "dprime|adprime")
      ->check(CLI::IsMember({"dprime", "adprime"}));
  query->add_option("--top", top, "Return this many records from one end");
  auto* max_flag = query->add_flag("--max", want_max, "Largest values (default)");
  query->add_flag("--min", want_min, "Smallest values")->excludes(max_flag);
  query->add_option("-o,--output", output, "Output file (default stdout)");
  query->add_option("--workers", config.workers, "Sweep threads");

  auto* oracle = app.add_subcommand("oracle", "Cross-check the sweep four ways");
  add_input(*oracle, input, config);
  oracle->add_option("--oracle-bound", config.oracle_bound,
                     "Largest n accepted (all-pairs distances)");

  auto* gen = app.add_subcommand("gen", "Write a generated tree");
  gen->add_option("kind", gen_kind, "path|star|caterpillar|random")->required();
  gen->add_option("n", gen_n, "Vertex count")->required();
  gen->add_option("--seed", config.seed, "Generator seed");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Operation counts versus D(T)");
  bench->add_option("--families", config.families, "Tree families")
      ->delimiter(',');
  bench->add_option("--sizes", config.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--seed", config.seed, "Generator seed");
  bench->add_option("-o,--output", output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return treedelta::cli::kUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    resolve_input(input, config);
    if (config.subcommand == "gen") {
      config.generator = treedelta::cli::GeneratorSpec{
          treedelta::parse_tree_kind(gen_kind), gen_n};
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return treedelta::cli::kUsage;
  }
  if (!output.empty()) config.output_path = output;
  config.format = format == "json" ? treedelta::cli::OutputFormat::kJson
                                   : treedelta::cli::OutputFormat::kCsv;
  config.metric = treedelta::parse_metric(metric);
  if (!target.empty()) config.target = target;
  if (top > 0) config.top = top;
  config.direction =
      want_min ? treedelta::Direction::kMin : treedelta::Direction::kMax;

  return treedelta::cli::run(config, std::cout, std::cerr);
}
