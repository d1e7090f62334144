// Command-line harness: generate synthetic streams, verify the profiler
// against the brute-force oracle, benchmark it against the heap and
// order-statistic-tree baselines, and run the graph peeling demo.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sprofile/bench.hpp"
#include "sprofile/peel.hpp"
#include "sprofile/streamgen.hpp"
#include "sprofile/verify.hpp"

namespace {

struct GenArgs {
  std::string preset;
  std::uint64_t n = 0;
  std::uint32_t m = 1;
  std::uint64_t seed = 0;
  double p_add = -1.0;  // < 0 means keep the preset default
  std::string out;
};

struct BenchArgs {
  std::string query;
  std::vector<std::string> impls;
  std::string preset;
  std::vector<std::uint64_t> n_list;
  std::vector<std::uint32_t> m_list;
  std::uint64_t seed = 0;
  double p_add = -1.0;
  int repeats = 3;
  std::string out;
};

sprofile::StreamConfig build_config(const std::string& preset, std::uint64_t n,
                                    std::uint32_t m, std::uint64_t seed,
                                    double p_add) {
  sprofile::StreamConfig cfg = sprofile::preset_config(preset, n, m, seed);
  if (p_add >= 0.0) {
    cfg.p_add = p_add;
    sprofile::validate(cfg);
  }
  return cfg;
}

int run_gen(const GenArgs& a) {
  const auto cfg = build_config(a.preset, a.n, a.m, a.seed, a.p_add);
  const auto events = sprofile::generate(cfg);
  sprofile::write_stream(a.out, events);
  return 0;
}

int run_verify(const GenArgs& a) {
  const auto cfg = build_config(a.preset, a.n, a.m, a.seed, a.p_add);
  const auto events = sprofile::generate(cfg);
  const auto report = sprofile::verify_events(events, cfg.m);
  if (report.ok()) {
    std::cout << "verify: OK (" << report.events << " events, "
              << report.checkpoints << " checkpoints, m=" << cfg.m << ")\n";
    return 0;
  }
  std::cerr << "verify: FAILED: " << report.failure << "\n";
  return 1;
}

int run_bench(const BenchArgs& a) {
  const sprofile::BenchQuery query = sprofile::parse_query(a.query);
  std::vector<sprofile::BenchImpl> impls;
  for (const auto& name : a.impls) {
    const auto impl = sprofile::parse_impl(name);
    if (!sprofile::supports(impl, query)) {
      throw std::invalid_argument("impl '" + name + "' does not support query '" +
                                  a.query + "'");
    }
    impls.push_back(impl);
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!a.out.empty() && a.out != "-") {
    file.open(a.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + a.out);
    out = &file;
  }
  *out << sprofile::csv_header() << '\n';

  for (const std::uint64_t n : a.n_list) {
    for (const std::uint32_t m : a.m_list) {
      const auto cfg = build_config(a.preset, n, m, a.seed, a.p_add);
      const auto events = sprofile::generate(cfg);
      for (const auto impl : impls) {
        const auto rec = sprofile::bench_cell(impl, query, a.preset, n, m,
                                              a.seed, events, a.repeats);
        *out << sprofile::to_csv(rec) << '\n';
        out->flush();
      }
    }
  }
  return 0;
}

int run_peel(const std::string& path) {
  const sprofile::Graph g = sprofile::read_edge_list(path);
  const sprofile::PeelResult res = sprofile::degeneracy_order(g);
  std::cout << "degeneracy " << res.degeneracy << "\n";
  for (std::uint32_t u = 0; u < g.vertex_count; ++u) {
    std::cout << (u + 1) << ' ' << res.core[u] << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-Profile: O(1) statistics over add/remove log streams"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a synthetic stream file");
  gen->add_option("--preset", gen_args.preset, "stream1|stream2|stream3")->required();
  gen->add_option("--n", gen_args.n, "number of events")->required();
  gen->add_option("--m", gen_args.m, "object universe size")->required();
  gen->add_option("--seed", gen_args.seed, "random seed")->default_val(0);
  gen->add_option("--p-add", gen_args.p_add, "add probability (default 0.7)");
  gen->add_option("--out", gen_args.out, "output stream file")->required();

  GenArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Replay a generated stream against the brute-force oracle");
  verify->add_option("--preset", verify_args.preset, "stream1|stream2|stream3")->required();
  verify->add_option("--n", verify_args.n, "number of events")->required();
  verify->add_option("--m", verify_args.m, "object universe size")->required();
  verify->add_option("--seed", verify_args.seed, "random seed")->default_val(0);
  verify->add_option("--p-add", verify_args.p_add, "add probability (default 0.7)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "Time the update+query loop and emit CSV rows");
  bench->add_option("--query", bench_args.query, "mode|min|median")->required();
  bench->add_option("--impl", bench_args.impls, "comma-separated: sprofile,heap,ost")
      ->required()
      ->delimiter(',');
  bench->add_option("--preset", bench_args.preset, "stream1|stream2|stream3")->required();
  bench->add_option("--n", bench_args.n_list, "event counts (comma-separated)")
      ->required()
      ->delimiter(',');
  bench->add_option("--m", bench_args.m_list, "universe sizes (comma-separated)")
      ->required()
      ->delimiter(',');
  bench->add_option("--seed", bench_args.seed, "random seed")->default_val(0);
  bench->add_option("--p-add", bench_args.p_add, "add probability (default 0.7)");
  bench->add_option("--repeats", bench_args.repeats, "repeats per cell, min kept")
      ->default_val(3);
  bench->add_option("--out", bench_args.out, "CSV output path ('-' = stdout)");

  std::string peel_path;
  auto* peel = app.add_subcommand(
      "peel", "Degeneracy ordering and core numbers of an edge-list graph");
  peel->add_option("graph", peel_path, "edge-list file")->required();

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (peel->parsed()) return run_peel(peel_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
