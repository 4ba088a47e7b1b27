#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdo/io.hpp"
#include "cdo/uncross.hpp"
#include "cdo/verify.hpp"

using namespace cdo;

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string report;
  std::string orientation;
  std::string model = "delaunay";
  std::string figure;
  int nodes = 20;
  std::uint64_t seed = 1;
  Length max_len = 1;
  int max_edges = 14;
  int count = 10;
  int jobs = 0;
  bool trace = false;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::InputError, "cannot write " + path);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Graph load(const Options& o) {
  if (o.input.empty()) throw Error(ErrorCode::InputError, "--input is required");
  return read_instance(o.input);
}

bool failing(const BoundReport& r) {
  return r.violations > 0 || r.unreachable > 0 || r.properties.total() > 0;
}

int cmd_validate(const Options& o) {
  Graph g = load(o);
  ValidationReport v = validate_graph(g);
  json j = {{"ok", v.ok()},
            {"n", g.node_count()},
            {"m", g.edge_count()},
            {"two_edge_connected", v.two_edge_connected},
            {"connected", v.connected},
            {"nonnegative", v.nonnegative},
            {"no_self_loops", v.no_self_loops},
            {"root_ok", v.root_ok},
            {"planar_edge_count", v.euler_ok},
            {"bridges", v.bridges},
            {"messages", v.messages}};
  emit(o.output, dump(j));
  return v.ok() ? 0 : 1;
}

int cmd_gen(const Options& o) {
  GenSpec s;
  s.model = parse_model(o.model);
  s.nodes = o.nodes;
  s.seed = o.seed;
  s.max_len = o.max_len;
  s.figure = o.figure;
  emit(o.output, dump(graph_to_json(generate(s))));
  return 0;
}

json trace_of(const Graph& g) {
  json runs = json::array();
  std::vector<Family> after;
  for (Family& f : build_family(g)) after.push_back(cancel_crossings(std::move(f)));
  GraphOrientation go = orient_graph(g, after);
  for (const OrientRun& run : go.runs)
    runs.push_back({{"family", family_dump(run.family)},
                    {"diagnostics", diagnostics_json(g, extract_diagnostics(go.o, run))},
                    {"competitions", run.stats.competitions},
                    {"reassigned", run.stats.reassigned}});
  return runs;
}

int finish_report(const Options& o, const Graph& g, const BoundReport& r) {
  json j = report_json(r);
  if (!o.report.empty()) emit(o.report, dump(j));
  if (o.trace && !r.rejected) std::cerr << dump(trace_of(g));
  if (r.rejected) {
    std::cerr << json{{"error", "UnsupportedInstance"}, {"message", r.reason}}.dump() << "\n";
    return 1;
  }
  return failing(r) ? 2 : 0;
}

int cmd_orient(const Options& o) {
  Graph g = load(o);
  ReportOptions ro;
  ro.oracle_max_edges = o.max_edges;
  BoundReport r = full_report(g, ro);
  if (!r.rejected) emit(o.output, dump(r.orientation));
  return finish_report(o, g, r);
}

// Checks a supplied orientation, or the algorithm's own when none is given.
int cmd_verify(const Options& o) {
  Graph g = load(o);
  if (o.orientation.empty()) {
    ReportOptions ro;
    ro.oracle_max_edges = o.max_edges;
    BoundReport r = full_report(g, ro);
    if (o.report.empty()) emit(o.output, dump(report_json(r)));
    return finish_report(o, g, r);
  }
  std::ifstream in(o.orientation);
  if (!in) throw Error(ErrorCode::InputError, "cannot open " + o.orientation);
  json oj;
  try {
    in >> oj;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::InputError, std::string("bad json: ") + ex.what());
  }
  Orientation ori = orientation_from_json(g, oj);
  json nodes = json::array();
  int unreachable = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    try {
      nodes.push_back({{"v", g.name(v)}, {"walk", directed_cycle_through(g, ori, v)}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unreachable) throw;
      ++unreachable;
      nodes.push_back({{"v", g.name(v)}, {"walk", nullptr}});
    }
  }
  json j = {{"n", g.node_count()}, {"m", g.edge_count()}, {"D_G", cycle_diameter(g)}, {"unreachable", unreachable}};
  j["D_H"] = unreachable ? json(nullptr) : json(directed_cycle_diameter(g, ori));
  j["nodes"] = nodes;
  emit(o.report.empty() ? o.output : o.report, dump(j));
  return unreachable ? 2 : 0;
}

int cmd_oracle(const Options& o) {
  Graph g = load(o);
  OracleOrientation r = oracle_opt_orientation(g, o.max_edges);
  json j = {{"n", g.node_count()},
            {"m", g.edge_count()},
            {"strongly_connected", r.strongly_connected},
            {"D_opt", r.d_opt < kInfinity ? json(r.d_opt) : json(nullptr)},
            {"witness", orientation_json(r.witness)}};
  emit(o.output, dump(j));
  return r.d_opt < kInfinity ? 0 : 1;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct Row {
  std::string line;
  bool bad = false;
};

Row bench_one(const Options& o, int i) {
  GenSpec s;
  s.model = parse_model(o.model);
  s.nodes = o.nodes;
  s.seed = o.seed + static_cast<std::uint64_t>(i);
  s.max_len = o.max_len;
  Graph g = generate(s);
  ReportOptions ro;
  ro.oracle_max_edges = o.max_edges;
  auto t0 = std::chrono::steady_clock::now();
  BoundReport r = full_report(g, ro);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::ostringstream line;
  line << i << ',' << s.seed << ',' << r.n << ',' << r.m << ',' << r.d_g << ',';
  if (!r.rejected && r.d_h < kInfinity) line << r.d_h;
  line << ',';
  if (r.d_opt) line << *r.d_opt;
  line << ',';
  if (!r.rejected) line << fixed(r.r9.value()) << ',' << fixed(r.r27.value()) << ',' << fixed(r.r405.value());
  else line << ",,";
  line << ',';
  if (!r.rejected && r.d_opt) line << fixed(r.ratio1620.value());
  line << ',' << fixed(ms) << '\n';
  return {line.str(), !r.rejected && failing(r)};
}

int cmd_bench(const Options& o) {
  if (o.count < 1) throw Error(ErrorCode::InputError, "--count must be positive");
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<Row> rows(o.count);
  std::vector<std::future<void>> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < jobs; ++w)
    pool.push_back(std::async(std::launch::async, [&] {
      for (int i; (i = next.fetch_add(1)) < o.count;) rows[i] = bench_one(o, i);
    }));
  for (auto& f : pool) f.get();

  std::string csv = "instance_id,seed,n,m,D_G,D_H,D_opt,r9,r27,r405,ratio1620,ms\n";
  bool bad = false;
  for (const Row& r : rows) {
    csv += r.line;
    bad = bad || r.bad;
  }
  emit(o.output, csv);
  return bad ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle diameter orientation toolkit"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c) { c->add_option("--input,-i", o.input, "instance JSON"); };
  auto output = [&](CLI::App* c) { c->add_option("--output,-o", o.output, "output path, stdout when omitted"); };
  auto generator = [&](CLI::App* c) {
    c->add_option("--model", o.model, "delaunay | grid | wheel | figure");
    c->add_option("--nodes", o.nodes);
    c->add_option("--seed", o.seed);
    c->add_option("--max-len", o.max_len, "1 for unit lengths, K for uniform integers in [1,K]");
  };

  auto* validate = app.add_subcommand("validate", "check an instance");
  input(validate);
  output(validate);

  auto* gen = app.add_subcommand("gen", "generate an instance");
  generator(gen);
  gen->add_option("--figure", o.figure, "built in figure name");
  output(gen);

  auto* orient = app.add_subcommand("orient", "orient an instance");
  input(orient);
  output(orient);
  orient->add_option("--report", o.report, "bound report JSON");
  orient->add_option("--max-edges", o.max_edges, "largest |E| for the exhaustive optimum");
  orient->add_flag("--trace", o.trace, "family and diagnostics on stderr");

  auto* verify = app.add_subcommand("verify", "bound report for an instance or a given orientation");
  input(verify);
  output(verify);
  verify->add_option("--orientation", o.orientation, "orientation JSON to check instead of running the algorithm");
  verify->add_option("--report", o.report);
  verify->add_option("--max-edges", o.max_edges);
  verify->add_flag("--trace", o.trace);

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum orientation");
  input(oracle);
  output(oracle);
  oracle->add_option("--max-edges", o.max_edges);

  auto* bench = app.add_subcommand("bench", "CSV over a generated corpus");
  generator(bench);
  output(bench);
  bench->add_option("--count", o.count);
  bench->add_option("--max-edges", o.max_edges);
  bench->add_option("--jobs", o.jobs, "worker threads, all cores when 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "InputError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*gen) return cmd_gen(o);
    if (*orient) return cmd_orient(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
    if (*bench) return cmd_bench(o);
  } catch (const Error& e) {
    std::cerr << json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
    return e.code() == ErrorCode::BoundViolation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InputError"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
