#pragma once

// Golden-file cases for the closedgraph tool: each case runs the binary on
// the committed corpus and its standard output must match tests/golden.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace closed_graph::testing {

struct GoldenCase {
  std::string name;
  /// Arguments; "@" is replaced by the corpus directory.
  std::string args;
  int exit_code;
};

inline std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  const std::vector<std::pair<std::string, int>> closed{{"kite", 0},        {"path5", 0},
                                                        {"complete4", 0},   {"scrambled_path", 0},
                                                        {"two_cliques", 0}, {"fan_tail", 0}};
  for (const auto &[file, code] : closed) {
    const std::string in = " -i @/" + file + ".edges";
    cases.push_back({file + ".check", "--format records check" + in, code});
    cases.push_back({file + ".label_find", "--format records label find" + in, 0});
    cases.push_back({file + ".label_count", "--format records label count" + in, 0});
    cases.push_back({file + ".label_enumerate", "--format records --page 10 label enumerate" + in, 0});
    cases.push_back({file + ".cluster", "--format records cluster" + in, 0});
  }
  cases.push_back({"kite.check.human", "check -i @/kite.edges", 0});
  cases.push_back({"kite.cluster.human", "cluster -i @/kite.edges", 0});
  cases.push_back({"kite.label_enumerate.human", "label enumerate -i @/kite.edges", 0});
  cases.push_back({"kite.oracle", "--format records oracle -i @/kite.edges", 0});
  cases.push_back({"claw.check", "--format records check -i @/claw.edges", 0});
  cases.push_back({"claw.label_find", "--format records label find -i @/claw.edges", 0});
  cases.push_back({"claw.label_count", "--format records label count -i @/claw.edges", 2});
  cases.push_back({"claw.cluster", "--format records cluster -i @/claw.edges", 0});
  cases.push_back({"claw.oracle", "--format records oracle -i @/claw.edges", 0});
  cases.push_back({"cycle5.check", "--format records check -i @/cycle5.edges", 0});
  cases.push_back({"cycle5.label_find", "--format records label find -i @/cycle5.edges", 0});
  cases.push_back({"disconnected.check", "--format records check -i @/disconnected.edges", 0});
  cases.push_back({"disconnected.label_find", "--format records label find -i @/disconnected.edges", 0});
  cases.push_back({"disconnected.label_count", "--format records label count -i @/disconnected.edges", 2});
  cases.push_back({"disconnected.cluster", "--format records cluster -i @/disconnected.edges", 0});
  cases.push_back({"single.check", "--format records check -i @/single.edges", 0});
  cases.push_back({"single.cluster", "--format records cluster -i @/single.edges", 0});
  cases.push_back({"malformed.check", "--format records check -i @/malformed.edges", 1});
  cases.push_back({"census.count_n8", "--format records census count -n 8", 0});
  cases.push_back({"census.count_partition", "--format records census count -p 2,3,1", 0});
  cases.push_back({"census.enumerate_partition", "--format records census enumerate -p 2,1", 0});
  cases.push_back({"census.enumerate_page", "--format records --page 5 --offset 3 census enumerate -n 5", 0});
  cases.push_back({"census.enumerate.human", "census enumerate -p 1,2", 0});
  cases.push_back({"oracle.census_n6", "--format records oracle -n 6", 0});
  return cases;
}

struct CliRun {
  std::string output;
  int exit_code = -1;
};

inline CliRun run_cli(const std::string &exe, const std::string &corpus, const std::string &args) {
  std::string expanded;
  for (char c : args)
    expanded += c == '@' ? corpus : std::string(1, c);
  std::string command = "'" + exe + "' " + expanded + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  if (!pipe)
    throw std::runtime_error("cannot run " + command);
  CliRun run;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    run.output.append(buf.data(), got);
  int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("missing golden file " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string golden_path(const std::string &dir, const GoldenCase &c) { return dir + "/" + c.name + ".out"; }

} // namespace closed_graph::testing
