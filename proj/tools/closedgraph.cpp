// closedgraph: command-line front end for the closed-graph library.

#include "closed_graph/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace cg = closed_graph;
namespace cli = closed_graph::cli;

namespace {

struct InputOptions {
  std::string path;
  std::string edges;
};

void add_input_options(CLI::App *cmd, InputOptions &in) {
  auto *file = cmd->add_option("--input,-i", in.path, "edge-list file ('-' for stdin)");
  auto *inline_edges =
      cmd->add_option("--edges", in.edges, "inline edge list, lines separated by ';'");
  file->excludes(inline_edges);
}

cg::Graph load(const InputOptions &in) {
  if (!in.edges.empty())
    return cli::parse_inline_edges(in.edges);
  if (in.path.empty())
    throw cg::DomainError("no input: pass --input FILE or --edges TEXT");
  return cli::load_graph_file(in.path);
}

int emit(const cli::CommandOutput &out, cli::Format format) {
  if (format == cli::Format::human && !out.records.empty() &&
      out.records.back().value("record", "") == "error") {
    std::cerr << "error: " << out.records.back().value("message", "") << '\n';
    return out.exit_code;
  }
  std::cout << cli::render(out, format);
  return out.exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Closed labelings, layer census and clustering bounds for simple graphs"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
  app.add_option("--oracle-bound", cfg.oracle_bound, "largest n for brute-force cross-checks")
      ->check(CLI::Range(std::size_t{1}, cli::max_oracle_bound))
      ->capture_default_str();
  app.add_option("--page", cfg.page, "maximum records per enumeration page")
      ->check(CLI::Range(std::size_t{1}, static_cast<std::size_t>(-1)))
      ->capture_default_str();
  app.add_option("--offset", cfg.offset, "index of the first enumerated item")->capture_default_str();

  InputOptions check_in, label_in, cluster_in, oracle_in;

  auto *check = app.add_subcommand("check", "closedness, layers and diameter of the identity labeling");
  add_input_options(check, check_in);

  std::string label_mode;
  auto *label = app.add_subcommand("label", "find, count or enumerate closed labelings");
  label->add_option("mode", label_mode, "find | count | enumerate")
      ->required()
      ->check(CLI::IsMember({"find", "count", "enumerate"}));
  add_input_options(label, label_in);

  std::string census_mode;
  std::string partition_text;
  std::optional<std::size_t> census_n;
  auto *census = app.add_subcommand("census", "closed graphs with a given layer partition");
  census->add_option("mode", census_mode, "count | enumerate")
      ->required()
      ->check(CLI::IsMember({"count", "enumerate"}));
  auto *partition_opt =
      census->add_option("--partition,-p", partition_text, "layer sizes, e.g. 1,2,1 or 2,1");
  auto *n_opt = census->add_option("--n,-n", census_n, "all partitions of n")
                    ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  partition_opt->excludes(n_opt);

  auto *cluster = app.add_subcommand("cluster", "clustering coefficients and their lower bounds");
  add_input_options(cluster, cluster_in);

  std::optional<std::size_t> oracle_n;
  auto *oracle = app.add_subcommand("oracle", "cross-check formulas against brute force");
  add_input_options(oracle, oracle_in);
  oracle->add_option("--n,-n", oracle_n, "census cross-check over all graphs on n vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? cli::exit_ok : cli::exit_usage;
  }
  cfg.format = format == "records" ? cli::Format::records : cli::Format::human;

  auto out = cli::guarded([&]() -> cli::CommandOutput {
    cfg.validate();
    if (*check)
      return cli::cmd_check(load(check_in));
    if (*label) {
      auto mode = label_mode == "find"    ? cli::LabelMode::find
                  : label_mode == "count" ? cli::LabelMode::count
                                          : cli::LabelMode::enumerate;
      return cli::cmd_label(load(label_in), mode, cfg);
    }
    if (*census) {
      auto mode = census_mode == "count" ? cli::CensusMode::count : cli::CensusMode::enumerate;
      if (census_n)
        return cli::cmd_census(*census_n, mode, cfg);
      if (partition_text.empty())
        throw cg::DomainError("census needs --partition or --n");
      return cli::cmd_census(cg::LayerPartition::parse(partition_text), mode, cfg);
    }
    if (*cluster)
      return cli::cmd_cluster(load(cluster_in));
    if (oracle_n)
      return cli::cmd_oracle_census(*oracle_n);
    return cli::cmd_oracle(load(oracle_in), cfg);
  });
  return emit(out, cfg.format);
}
