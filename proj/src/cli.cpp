#include "treedelta/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "treedelta/delta.hpp"
#include "treedelta/io.hpp"
#include "treedelta/splits.hpp"
#include "treedelta/sweep.hpp"

namespace treedelta::cli {

namespace {

// Writes to config.output_path when set, otherwise to `fallback`.
void with_output(const RunConfig& config, std::ostream& fallback,
                 const std::function<void(std::ostream&)>& body) {
  if (!config.output_path) {
    body(fallback);
    return;
  }
  std::ostringstream buffer;
  body(buffer);
  std::ofstream file(*config.output_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << buffer.str()) || !file.flush()) {
    throw std::ios_base::failure("cannot write " + *config.output_path);
  }
}

void require_record_guard(const Tree& tree) {
  const Count m = inset_edge_count(tree.size());
  if (m > kMaxRecords) {
    throw GuardError("tree has " + std::to_string(m) +
                     " inset edges; the in-memory limit is " +
                     std::to_string(kMaxRecords));
  }
}

std::string pair_text(const Tree& tree, const InsetRecord& r) {
  return "(" + tree.label(r.x) + "," + tree.label(r.y) + ")";
}

// Runs a command body and maps exceptions onto exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardError& e) {
    err << "resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

struct Analysis {
  Tree tree;
  Count wiener = 0;
  std::vector<InsetRecord> records;  // sorted by (x, y)
  SweepStats stats;
};

Analysis analyze_tree(const RunConfig& config) {
  Analysis a{load_input(config), 0, {}, {}};
  require_record_guard(a.tree);
  const SplitTable splits = edge_splits(a.tree);
  a.wiener = wiener_from_splits(splits);
  a.records = sweep_parallel(a.tree, splits, std::max(1u, config.workers),
                             &a.stats, {config.count_ops});
  return a;
}

void print_summary(std::ostream& err, const Analysis& a) {
  const Count n = a.tree.size();
  const Rational ad = average_distance(a.wiener, n);
  err << "n=" << n << " m=" << a.records.size() << " D(T)=" << a.wiener
      << " AD(T)=" << ad.str() << " (" << ad.decimal() << ")";
  if (!a.records.empty()) {
    Count lo = a.records.front().dprime;
    Count hi = lo;
    for (const auto& r : a.records) {
      lo = std::min(lo, r.dprime);
      hi = std::max(hi, r.dprime);
    }
    err << " max_dprime=" << hi << " min_dprime=" << lo;
  }
  if (a.stats.basic_ops > 0) err << " basic_ops=" << a.stats.basic_ops;
  err << '\n';
  if (a.records.empty()) err << "warning: no inset edges\n";
}

void print_matches(std::ostream& out, const Tree& tree, const DeltaIndex& index,
                   const std::vector<InsetRecord>& records, Metric metric,
                   const Rational* target) {
  out << "x,y,k,dprime,adprime";
  if (target) out << ",deviation";
  out << '\n';
  for (const auto& r : records) {
    const Rational ad = adprime(r.dprime, index.n());
    out << tree.label(r.x) << ',' << tree.label(r.y) << ',' << r.k << ','
        << r.dprime << ',' << ad.str();
    if (target) {
      out << ',' << abs_difference(index.value(r, metric), *target).str();
    }
    out << '\n';
  }
}

}  // namespace

Tree load_input(const RunConfig& config) {
  if (config.input_path.has_value() == config.generator.has_value()) {
    throw UsageError("give exactly one input: a tree file or --generate");
  }
  if (config.input_path) return read_tree_file(*config.input_path);
  return generate(config.generator->kind, config.generator->n, config.seed);
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Analysis a = analyze_tree(config);
    const auto rows = to_rows(a.tree, a.records);
    with_output(config, out, [&](std::ostream& os) {
      if (config.format == OutputFormat::kJson) {
        write_analyze_json(os, {a.tree.size(),
                                static_cast<Count>(a.records.size()), a.wiener},
                           rows);
      } else {
        write_analyze_csv(os, rows);
      }
    });
    print_summary(err, a);
    return kOk;
  });
}

int cmd_query(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (config.target.has_value() == config.top.has_value()) {
      throw UsageError("query needs exactly one of --target or --top");
    }
    std::optional<Rational> target;
    if (config.target) target = Rational::parse(*config.target);

    Analysis a = analyze_tree(config);
    const DeltaIndex index = build_index(std::move(a.records), a.tree.size());
    if (index.empty()) {
      err << "invalid input: no inset edges to query\n";
      return static_cast<int>(kInvalidInput);
    }
    with_output(config, out, [&](std::ostream& os) {
      if (target) {
        const QueryResult q = closest(index, *target, config.metric);
        print_matches(os, a.tree, index, q.matches, config.metric, &*target);
        err << "matches=" << q.matches.size()
            << " deviation=" << q.deviation.str() << '\n';
      } else {
        const auto picked = top_k(index, *config.top, config.direction);
        print_matches(os, a.tree, index, picked, config.metric, nullptr);
      }
    });
    return kOk;
  });
}

int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    const Tree tree = load_input(config);
    if (tree.size() > config.oracle_bound) {
      throw GuardError("oracle check limited to n <= " +
                       std::to_string(config.oracle_bound));
    }
    const SplitTable splits = edge_splits(tree);
    const ShortcutOracle shortcut(tree);
    const auto records = sweep_records(tree, splits);
    const double bound = cubic_dprime_bound(tree.size());
    std::size_t above_bound = 0;

    for (const auto& r : records) {
      const Count lemma2 = evaluate_dprime(DeltaMethod::kLemma2, tree, splits,
                                           r.x, r.y);
      const Count lemma1 = dprime_lemma1(tree, r.x, r.y);
      const Count brute = shortcut.dprime(r.x, r.y);
      if (lemma2 != r.dprime || lemma1 != r.dprime || brute != r.dprime) {
        out << "MISMATCH " << pair_text(tree, r) << " k=" << r.k
            << " sweep=" << r.dprime << " lemma2=" << lemma2
            << " lemma1=" << lemma1 << " shortcut=" << brute << '\n';
        return static_cast<int>(kDisagreement);
      }
      if (static_cast<double>(r.dprime) > bound) ++above_bound;
    }
    if (static_cast<Count>(records.size()) != inset_edge_count(tree.size())) {
      out << "MISMATCH record count " << records.size() << " expected "
          << inset_edge_count(tree.size()) << '\n';
      return static_cast<int>(kDisagreement);
    }
    out << "OK m=" << records.size() << '\n';
    if (above_bound > 0) {
      err << "note: " << above_bound
          << " records exceed n^3/16 - n^2/32 - 9n/8 + 2\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    if (!config.generator) throw UsageError("gen needs a kind and a size");
    const Tree tree =
        generate(config.generator->kind, config.generator->n, config.seed);
    with_output(config, out, [&](std::ostream& os) { write_tree(os, tree); });
    return kOk;
  });
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&]() -> int {
    std::vector<std::string> families = config.families;
    if (families.empty()) families = {"path", "star", "random"};
    std::vector<VertexId> sizes = config.sizes;
    if (sizes.empty()) sizes = {125, 250, 500, 1000, 2000};

    std::ostringstream table;
    table << kBenchCsvHeader << '\n';
    for (const auto& family : families) {
      const TreeKind kind = parse_tree_kind(family);
      for (VertexId n : sizes) {
        if (inset_edge_count(n) > kMaxRecords) {
          throw GuardError("bench size " + std::to_string(n) + " too large");
        }
        const Tree tree = generate(kind, n, config.seed);
        const SplitTable splits = edge_splits(tree);
        const Count wiener = wiener_from_splits(splits);

        std::int64_t records = 0;
        auto count_only = [&records](const Emission&) { ++records; };
        const SweepStats counted =
            sweep_all(tree, splits, count_only, {.count_ops = true});
        // Timed pass with counting off.
        const auto start = std::chrono::steady_clock::now();
        sweep_all(tree, splits, count_only, {.count_ops = false});
        const double wall_ms = std::chrono::duration<double, std::milli>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f",
                      static_cast<double>(counted.basic_ops) /
                          static_cast<double>(wiener));
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", wall_ms);
        table << family << ',' << n << ',' << counted.records << ',' << wiener
              << ',' << counted.basic_ops << ',' << ratio << ',' << wall
              << '\n';
      }
    }
    with_output(config, out, [&](std::ostream& os) { os << table.str(); });
    return kOk;
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "analyze") return cmd_analyze(config, out, err);
  if (config.subcommand == "query") return cmd_query(config, out, err);
  if (config.subcommand == "oracle") return cmd_oracle(config, out, err);
  if (config.subcommand == "gen") return cmd_gen(config, out, err);
  if (config.subcommand == "bench") return cmd_bench(config, out, err);
  err << "usage error: unknown subcommand '" << config.subcommand << "'\n";
  return kUsage;
}

}  // namespace treedelta::cli
