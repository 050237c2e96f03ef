#pragma once

// Command layer behind the closedgraph tool. Every command returns a list of
// records (ordered JSON objects with stable field names) plus an exit code;
// the human format is a rendering of the same records.

#include "closed_graph/closedness.hpp"
#include "closed_graph/clustering.hpp"
#include "closed_graph/edge_list.hpp"
#include "closed_graph/errors.hpp"
#include "closed_graph/exact.hpp"
#include "closed_graph/exchange.hpp"
#include "closed_graph/graph.hpp"
#include "closed_graph/labeling_search.hpp"
#include "closed_graph/layer_census.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace closed_graph::cli {

using Record = nlohmann::ordered_json;

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_precondition = 2,
  exit_verdict_failure = 3,
};

enum class Format { human, records };

inline constexpr std::size_t max_oracle_bound = 10;

struct RunConfig {
  std::size_t oracle_bound = default_oracle_bound;
  std::size_t page = 100;
  std::size_t offset = 0;
  Format format = Format::human;

  void validate() const {
    if (oracle_bound > max_oracle_bound)
      throw DomainError("oracle bound must be at most " + std::to_string(max_oracle_bound));
    if (page < 1)
      throw DomainError("page limit must be at least 1");
  }
};

struct CommandOutput {
  std::vector<Record> records;
  int exit_code = exit_ok;
};

enum class LabelMode { find, count, enumerate };
enum class CensusMode { count, enumerate };

/// Either an explicit layer partition or a vertex count.
using CensusTarget = std::variant<LayerPartition, std::size_t>;

namespace detail {

inline Record vertex_set_json(const VertexSet &s) { return Record(s.members()); }

inline Record labeling_json(const Labeling &lab) {
  return Record(std::vector<Vertex>(lab.labels().begin(), lab.labels().end()));
}

inline Record layers_json(const LayerDecomposition &layers) {
  Record out = Record::array();
  for (const auto &l : layers.layers)
    out.push_back(vertex_set_json(l));
  return out;
}

inline Record graph_json(const Graph &g) {
  return Record{{"record", "graph"}, {"n", g.order()}, {"m", g.size()}, {"connected", is_connected(g)}};
}

inline Record page_json(std::size_t offset, std::size_t emitted, const BigInt &total, bool complete) {
  return Record{{"record", "page"},
                {"offset", offset},
                {"emitted", emitted},
                {"total", to_string(total)},
                {"complete", complete}};
}

inline std::string error_kind(const Error &e) {
  if (dynamic_cast<const ParseError *>(&e))
    return "parse";
  if (dynamic_cast<const NotConnected *>(&e))
    return "not-connected";
  if (dynamic_cast<const NotClosed *>(&e))
    return "not-closed";
  if (dynamic_cast<const PreconditionError *>(&e))
    return "precondition";
  if (dynamic_cast<const OracleLimit *>(&e))
    return "oracle-limit";
  if (dynamic_cast<const InvalidSequence *>(&e))
    return "invalid-sequence";
  if (dynamic_cast<const InvalidLabeling *>(&e))
    return "invalid-labeling";
  if (dynamic_cast<const ExchangeabilityError *>(&e))
    return "exchangeability";
  if (dynamic_cast<const EmptyLink *>(&e))
    return "empty-link";
  return "domain";
}

} // namespace detail

inline int exit_code_for(const Error &e) {
  if (dynamic_cast<const PreconditionError *>(&e) || dynamic_cast<const OracleLimit *>(&e))
    return exit_precondition;
  return exit_usage;
}

/// Runs a command body, turning library errors into an error record.
template <class Body> CommandOutput guarded(Body &&body) {
  try {
    return body();
  } catch (const Error &e) {
    CommandOutput out;
    out.records.push_back(
        Record{{"record", "error"}, {"kind", detail::error_kind(e)}, {"message", e.what()}});
    out.exit_code = exit_code_for(e);
    return out;
  }
}

/// Reads an edge list from a path ("-" for standard input).
inline Graph load_graph_file(const std::string &path) {
  if (path == "-")
    return parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open input file '" + path + "'");
  return parse_edge_list(in);
}

/// Inline edge list; ';' separates lines, e.g. "4 4; 1 2; 1 3; 2 3; 3 4".
inline Graph parse_inline_edges(std::string text) {
  std::replace(text.begin(), text.end(), ';', '\n');
  return parse_edge_list(std::string_view(text));
}

inline CommandOutput cmd_check(const Graph &g) {
  CommandOutput out;
  const bool connected = is_connected(g);
  out.records.push_back(detail::graph_json(g));

  Record closed{{"record", "closedness"}};
  closed["closed_by_definition"] = is_closed_by_definition(g);
  closed["closed_by_intervals"] = connected ? Record(is_closed_by_intervals(g)) : Record(nullptr);
  if (auto v = find_closedness_violation(g))
    closed["violation"] = Record{{"center", v->center}, {"j", v->j}, {"k", v->k}};
  else
    closed["violation"] = nullptr;
  out.records.push_back(closed);

  if (!connected) {
    out.records.push_back(
        Record{{"record", "note"}, {"message", "graph is not connected; layers and diameter skipped"}});
    return out;
  }
  auto layers = layer_decomposition(g);
  out.records.push_back(
      Record{{"record", "layers"}, {"h", layers.top()}, {"layers", detail::layers_json(layers)}});
  out.records.push_back(Record{{"record", "diameter"}, {"value", diameter(g)}});
  if (is_closed_by_definition(g)) {
    auto t = verify_layer_theorems(g);
    out.records.push_back(Record{{"record", "layer_theorems"},
                                 {"layers_complete_intervals", t.layers_complete_intervals},
                                 {"next_layer_is_upper_of_max", t.next_layer_is_upper_of_max},
                                 {"diameter_equals_h", t.diameter_equals_h},
                                 {"edges_span_adjacent_layers", t.edges_span_adjacent},
                                 {"longest_path_endpoints", t.longest_path_endpoints},
                                 {"longest_paths", to_string(t.longest_paths)},
                                 {"all", t.all_true()}});
    if (!t.all_true())
      out.exit_code = exit_verdict_failure;
  }
  return out;
}

inline CommandOutput cmd_label(const Graph &g, LabelMode mode, const RunConfig &cfg) {
  CommandOutput out;
  switch (mode) {
  case LabelMode::find: {
    auto lab = find_closed_labeling(g);
    out.records.push_back(Record{{"record", "labeling"},
                                 {"mode", "find"},
                                 {"labeling", lab ? detail::labeling_json(*lab) : Record(nullptr)}});
    break;
  }
  case LabelMode::count: {
    BigInt formula = count_closed_labelings(g);
    Record rec{{"record", "count"}, {"formula", to_string(formula)}};
    if (g.order() <= cfg.oracle_bound) {
      BigInt oracle = all_closed_labelings_bruteforce(g, cfg.oracle_bound).size();
      rec["oracle"] = to_string(oracle);
      rec["agree"] = oracle == formula;
      if (oracle != formula)
        out.exit_code = exit_verdict_failure;
    } else {
      rec["oracle"] = nullptr;
      rec["agree"] = nullptr;
    }
    out.records.push_back(rec);
    break;
  }
  case LabelMode::enumerate: {
    BigInt total = count_closed_labelings(g);
    auto stream = enumerate_closed_labelings(g);
    std::size_t index = 0;
    std::size_t emitted = 0;
    bool complete = true;
    while (auto lab = stream.next()) {
      if (index >= cfg.offset) {
        if (emitted == cfg.page) {
          complete = false;
          break;
        }
        out.records.push_back(
            Record{{"record", "labeling"}, {"index", index}, {"labeling", detail::labeling_json(*lab)}});
        ++emitted;
      }
      ++index;
    }
    out.records.push_back(detail::page_json(cfg.offset, emitted, total, complete));
    break;
  }
  }
  return out;
}

inline CommandOutput cmd_census(const CensusTarget &target, CensusMode mode, const RunConfig &cfg) {
  CommandOutput out;
  std::vector<LayerPartition> partitions;
  if (const auto *p = std::get_if<LayerPartition>(&target))
    partitions.push_back(*p);

  if (mode == CensusMode::count) {
    if (!partitions.empty()) {
      const auto &p = partitions.front();
      out.records.push_back(Record{{"record", "census"},
                                   {"partition", p.sizes()},
                                   {"n", p.order()},
                                   {"count", to_string(count_closed_graphs(p))}});
    } else {
      std::size_t n = std::get<std::size_t>(target);
      out.records.push_back(
          Record{{"record", "census"}, {"n", n}, {"count", to_string(census_total(n))}});
    }
    return out;
  }

  BigInt total;
  if (partitions.empty()) {
    std::size_t n = std::get<std::size_t>(target);
    partitions = layer_partitions(n);
    total = census_total(n);
  } else {
    total = count_closed_graphs(partitions.front());
  }
  std::size_t index = 0;
  std::size_t emitted = 0;
  bool complete = true;
  for (const auto &p : partitions) {
    if (!complete)
      break;
    BigInt here = count_closed_graphs(p);
    if (BigInt(index) + here <= cfg.offset) {
      index += static_cast<std::size_t>(here);
      continue;
    }
    auto stream = enumerate_closed_graphs(p);
    while (auto item = stream.next()) {
      if (index >= cfg.offset) {
        if (emitted == cfg.page) {
          complete = false;
          break;
        }
        out.records.push_back(Record{{"record", "closed_graph"},
                                     {"index", index},
                                     {"partition", p.sizes()},
                                     {"sequences", item->family.sequences},
                                     {"edge_list", format_edge_list(item->graph)}});
        ++emitted;
      }
      ++index;
    }
  }
  out.records.push_back(detail::page_json(cfg.offset, emitted, total, complete));
  return out;
}

inline CommandOutput cmd_cluster(const Graph &g) {
  CommandOutput out;
  std::string skipped;
  if (g.order() < 2)
    skipped = "skipped (n = 1)";
  else if (!is_connected(g))
    skipped = "skipped (input not connected)";
  else if (!is_closed_graph(g))
    skipped = "skipped (input not closed)";

  ClusteringReport r = skipped.empty() ? verify_clustering_bounds(g) : measure_clustering(g);
  for (const auto &pv : r.per_vertex)
    out.records.push_back(Record{{"record", "vertex"},
                                 {"vertex", pv.vertex},
                                 {"degree", pv.degree},
                                 {"c_v", to_string(pv.coefficient)},
                                 {"c_v_decimal", to_decimal(pv.coefficient)}});
  out.records.push_back(Record{{"record", "clustering"},
                               {"n", g.order()},
                               {"cws", to_string(r.cws)},
                               {"cws_decimal", to_decimal(r.cws)},
                               {"degree_ge_3", r.high_degree},
                               {"degree_2_closed", r.closed_wedges},
                               {"degree_2_open", r.open_wedges},
                               {"leaves", r.leaves},
                               {"isolated", r.isolated}});
  if (!skipped.empty()) {
    out.records.push_back(Record{{"record", "bounds"}, {"status", skipped}});
    return out;
  }
  const auto &v = *r.verdicts;
  out.records.push_back(Record{{"record", "bounds"},
                               {"status", "checked"},
                               {"h", *r.h},
                               {"c", r.c()},
                               {"leaf_count", r.leaves},
                               {"cws_lower_bound", to_string(*r.cws_lower_bound)},
                               {"cws_lower_bound_decimal", to_decimal(*r.cws_lower_bound)},
                               {"degree_bound", v.degree_bound},
                               {"third_bound", v.third_bound},
                               {"open_wedges_bound", v.open_wedges_bound},
                               {"leaf_bound", v.leaf_bound},
                               {"global_bound", v.global_bound},
                               {"all", v.all_true()}});
  if (!v.all_true())
    out.exit_code = exit_verdict_failure;
  return out;
}

/// Cross-checks the search and counting routes for one graph against the
/// brute-force oracle.
inline CommandOutput cmd_oracle(const Graph &g, const RunConfig &cfg) {
  CommandOutput out;
  auto brute = all_closed_labelings_bruteforce(g, cfg.oracle_bound);
  auto found = find_closed_labeling(g);
  Record rec{{"record", "oracle"}, {"n", g.order()}};
  rec["bruteforce_count"] = to_string(BigInt(brute.size()));
  rec["search_closed"] = found.has_value();
  bool agree = found.has_value() == !brute.empty();
  bool least = brute.empty() ? !found.has_value() : (found && *found == brute.front());
  rec["find_is_least"] = least;
  agree = agree && least;
  if (is_connected(g) && !brute.empty()) {
    BigInt formula = count_closed_labelings(g);
    auto streamed = collect_closed_labelings(g);
    std::set<Labeling> streamed_set(streamed.begin(), streamed.end());
    std::set<Labeling> brute_set(brute.begin(), brute.end());
    bool same = streamed_set == brute_set && streamed_set.size() == streamed.size();
    rec["formula_count"] = to_string(formula);
    rec["enumeration_matches"] = same;
    agree = agree && same && formula == BigInt(brute.size());
  } else {
    rec["formula_count"] = nullptr;
    rec["enumeration_matches"] = nullptr;
  }
  rec["agree"] = agree;
  out.records.push_back(rec);
  if (!agree)
    out.exit_code = exit_verdict_failure;
  return out;
}

/// Census formula against the brute-force filter of all graphs on {1..n}.
inline CommandOutput cmd_oracle_census(std::size_t n) {
  CommandOutput out;
  BigInt formula = census_total(n);
  BigInt brute = brute_force_census(n);
  out.records.push_back(Record{{"record", "census_oracle"},
                               {"n", n},
                               {"formula", to_string(formula)},
                               {"bruteforce", to_string(brute)},
                               {"agree", formula == brute}});
  if (formula != brute)
    out.exit_code = exit_verdict_failure;
  return out;
}

/// One JSON object per line.
inline std::string render_records(const std::vector<Record> &records) {
  std::string out;
  for (const auto &r : records)
    out += r.dump() + '\n';
  return out;
}

namespace detail {

inline std::string human_value(const Record &value) {
  if (value.is_null())
    return "none";
  if (value.is_string())
    return value.get<std::string>();
  return value.dump();
}

} // namespace detail

/// Aligned key/value blocks, one per record; multi-line strings are
/// indented beneath their key.
inline std::string render_human(const std::vector<Record> &records) {
  std::ostringstream out;
  for (const auto &r : records) {
    out << r.value("record", std::string("record")) << '\n';
    std::size_t width = 0;
    for (const auto &[key, value] : r.items())
      if (key != "record")
        width = std::max(width, key.size());
    for (const auto &[key, value] : r.items()) {
      if (key == "record")
        continue;
      std::string text = detail::human_value(value);
      if (text.find('\n') != std::string::npos) {
        out << "  " << key << ":\n";
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);)
          out << "    " << line << '\n';
      } else {
        out << "  " << key << std::string(width - key.size() + 2, ' ') << text << '\n';
      }
    }
  }
  return out.str();
}

inline std::string render(const CommandOutput &output, Format format) {
  return format == Format::records ? render_records(output.records) : render_human(output.records);
}

} // namespace closed_graph::cli
