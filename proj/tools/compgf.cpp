// Command-line front end for the component-weighted enumeration engine.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error (bad flags,
// malformed weights/forbid specs, enumeration cap exceeded), 3 malformed
// input table, 4 internal consistency failure.

#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "compgf/enumeration.hpp"
#include "compgf/errors.hpp"
#include "compgf/io.hpp"
#include "compgf/oracle.hpp"

namespace {

using namespace compgf;

struct CommonOpts {
  int max_order = 10;
  std::string weights;
  std::string fill = "1";
  std::string weight_mode = "per-component";
  std::string format = "csv";
  std::string output;
  bool emit_zeros = false;
  std::vector<std::string> forbid;
};

void add_weight_options(CLI::App& cmd, CommonOpts& opts) {
  cmd.add_option("--max-order", opts.max_order, "Largest order to compute")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  cmd.add_option("--weights", opts.weights,
                 "Comma-separated component weights by order, e.g. 1,1/2,1/3");
  cmd.add_option("--fill", opts.fill,
                 "Weight of orders past the explicit --weights entries")
      ->capture_default_str();
  cmd.add_option("--weight-mode", opts.weight_mode,
                 "How a component of order i contributes to nu")
      ->check(CLI::IsMember({"per-component", "size-weighted"}))
      ->capture_default_str();
  cmd.add_option("--forbid", opts.forbid,
                 "Component shape n:k to exclude (repeatable)");
}

void add_output_options(CLI::App& cmd, CommonOpts& opts) {
  cmd.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "jsonl"}))
      ->capture_default_str();
  cmd.add_option("--output", opts.output, "Output file (default stdout)");
  cmd.add_flag("--emit-zeros", opts.emit_zeros,
               "Also write zero-count rows over the natural key grid");
}

WeightVector make_weights(const CommonOpts& opts) {
  Rational fill = parse_rational(opts.fill);
  if (opts.weights.empty()) {
    WeightVector w;
    w.fill = fill;
    return w;
  }
  return parse_weights(opts.weights, fill);
}

WeightMode make_mode(const CommonOpts& opts) {
  return opts.weight_mode == "size-weighted" ? WeightMode::size_weighted
                                             : WeightMode::per_component;
}

ForbiddenComponentSet make_forbidden(const CommonOpts& opts) {
  ForbiddenComponentSet forbidden;
  for (const std::string& spec : opts.forbid) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--forbid expects n:k, got '" + spec + "'");
    }
    int n = 0;
    int k = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(spec);
      std::string rest = spec.substr(colon + 1);
      k = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw std::invalid_argument("--forbid expects n:k, got '" + spec + "'");
    }
    if (n < 1 || k < 0) {
      throw std::invalid_argument("--forbid needs n >= 1 and k >= 0");
    }
    forbidden.insert(TableKey{n, {k}});
  }
  return forbidden;
}

// Inserts explicit zero rows: for each order, every statistic in
// [0, kmax(n)] crossed with every nu value already present at that order.
void expand_zeros(CountTable& table, int max_order,
                  const std::function<int(int)>& kmax) {
  for (int n = 1; n <= max_order; ++n) {
    std::set<Rational> nus;
    int max_stat = kmax ? kmax(n) : -1;
    for (const auto& [key, count] : table.counts) {
      if (key.n != n) continue;
      nus.insert(key.nu);
      if (!kmax && key.k > max_stat) max_stat = key.k;
    }
    for (int k = 0; k <= max_stat; ++k) {
      for (const Rational& nu : nus) {
        table.counts.try_emplace(WeightedKey{n, k, nu}, 0);
      }
    }
  }
}

int bipartite_kmax(int n) { return n * n / 4; }

void write_table(const CommonOpts& opts, const CountTable& table) {
  auto writer = [&](std::ostream& out) {
    if (opts.format == "jsonl") {
      write_count_table_jsonl(out, table);
    } else {
      write_count_table_csv(out, table);
    }
  };
  if (opts.output.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(opts.output);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + opts.output);
  }
  writer(out);
}

int cmd_bipartite_table(const CommonOpts& opts) {
  CountTable table = bipartite_component_table(
      opts.max_order, make_weights(opts), make_forbidden(opts),
      make_mode(opts));
  if (opts.emit_zeros) expand_zeros(table, opts.max_order, bipartite_kmax);
  write_table(opts, table);
  return 0;
}

int cmd_generic_pipeline(const CommonOpts& opts, const std::string& input) {
  ConnectedCountTable connected;
  if (input == "-") {
    connected = read_connected_table_jsonl(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file: " + input);
    connected = read_connected_table_jsonl(in);
  }
  for (const TableKey& key : make_forbidden(opts)) connected.set(key, 0);
  WeightVector w = make_weights(opts);
  if (make_mode(opts) == WeightMode::size_weighted) {
    w = size_weighted(w, opts.max_order);
  }
  CountTable table = enumerate_weighted(connected, opts.max_order, w);
  if (opts.emit_zeros) expand_zeros(table, opts.max_order, nullptr);
  write_table(opts, table);
  return 0;
}

int cmd_verify(const CommonOpts& opts, int oracle_cap) {
  WeightVector w = make_weights(opts);
  WeightMode mode = make_mode(opts);
  ForbiddenComponentSet forbidden = make_forbidden(opts);
  CountTable computed =
      bipartite_component_table(opts.max_order, w, forbidden, mode);
  CountTable truth = oracle_table_filtered(
      opts.max_order, GraphPredicate::bipartite, w, mode, forbidden,
      oracle_cap);
  std::vector<std::string> diff = diff_tables(computed, truth);
  if (diff.empty()) {
    std::cout << "ok: series pipeline matches exhaustive enumeration up to "
                 "order "
              << opts.max_order << "\n";
    return 0;
  }
  std::cerr << "mismatch between series pipeline and exhaustive enumeration "
               "(pipeline vs oracle):\n";
  for (const std::string& line : diff) std::cerr << "  " << line << "\n";
  return 1;
}

int cmd_dump(const CommonOpts& opts, const std::string& what) {
  ConnectedCountTable connected =
      connected_bipartite_series(opts.max_order).table;
  for (const TableKey& key : make_forbidden(opts)) connected.set(key, 0);
  auto writer = [&](std::ostream& out) {
    if (what == "connected") {
      write_connected_table_jsonl(out, connected);
      return;
    }
    WeightVector w = make_weights(opts);
    if (make_mode(opts) == WeightMode::size_weighted) {
      w = size_weighted(w, opts.max_order);
    }
    write_series_dump(out, apply_tau(build_aux(connected, opts.max_order), w));
  };
  if (opts.output.empty()) {
    writer(std::cout);
    return 0;
  }
  std::ofstream out(opts.output);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + opts.output);
  }
  writer(out);
  return 0;
}

int cmd_oracle(const CommonOpts& opts, const std::string& predicate,
               int oracle_cap) {
  GraphPredicate pred = predicate == "all" ? GraphPredicate::all
                                           : GraphPredicate::bipartite;
  CountTable table =
      oracle_table_filtered(opts.max_order, pred, make_weights(opts),
                            make_mode(opts), make_forbidden(opts), oracle_cap);
  if (opts.emit_zeros) {
    expand_zeros(table, opts.max_order,
                 pred == GraphPredicate::bipartite ? bipartite_kmax : nullptr);
  }
  write_table(opts, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact component-weighted enumeration of labeled graphs via "
      "exponential generating functions"};
  app.require_subcommand(1);

  CommonOpts bt_opts;
  CLI::App* bt = app.add_subcommand(
      "bipartite-table",
      "Census of labeled bipartite graphs by order, edges and nu");
  add_weight_options(*bt, bt_opts);
  add_output_options(*bt, bt_opts);

  CommonOpts pipe_opts;
  std::string pipe_input;
  CLI::App* pipe = app.add_subcommand(
      "pipeline",
      "Weighted census assembled from a connected-count table (JSONL)");
  pipe->add_option("input", pipe_input, "Connected table file, or - for stdin")
      ->required();
  add_weight_options(*pipe, pipe_opts);
  add_output_options(*pipe, pipe_opts);

  CommonOpts verify_opts;
  int verify_cap = 7;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Cross-check the bipartite pipeline against brute-force enumeration");
  add_weight_options(*verify, verify_opts);
  verify->add_option("--oracle-cap", verify_cap,
                     "Largest order the brute-force pass may attempt")
      ->check(CLI::Range(1, kOracleHardCap))
      ->capture_default_str();

  CommonOpts dump_opts;
  std::string dump_what = "series";
  CLI::App* dump = app.add_subcommand(
      "dump", "Dump pipeline intermediates for inspection");
  add_weight_options(*dump, dump_opts);
  dump->add_option("--what", dump_what, "Which intermediate to dump")
      ->check(CLI::IsMember({"series", "connected"}))
      ->capture_default_str();
  dump->add_option("--output", dump_opts.output, "Output file (default stdout)");

  CommonOpts oracle_opts;
  std::string oracle_pred = "bipartite";
  int oracle_cap = 7;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force census over all labeled graphs");
  add_weight_options(*oracle, oracle_opts);
  add_output_options(*oracle, oracle_opts);
  oracle->add_option("--predicate", oracle_pred, "Graph family to census")
      ->check(CLI::IsMember({"bipartite", "all"}))
      ->capture_default_str();
  oracle->add_option("--oracle-cap", oracle_cap,
                     "Largest order the brute-force pass may attempt")
      ->check(CLI::Range(1, kOracleHardCap))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bt->parsed()) return cmd_bipartite_table(bt_opts);
    if (pipe->parsed()) return cmd_generic_pipeline(pipe_opts, pipe_input);
    if (verify->parsed()) return cmd_verify(verify_opts, verify_cap);
    if (dump->parsed()) return cmd_dump(dump_opts, dump_what);
    if (oracle->parsed()) return cmd_oracle(oracle_opts, oracle_pred, oracle_cap);
  } catch (const table_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const oracle_cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const inconsistent_table_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const internal_inconsistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const engine_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
