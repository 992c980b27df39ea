// okpack: exact solvers for orthogonal packing problems (OPP decision,
// OKP knapsack, SPP strip packing) plus the benchmark harness, the random
// instance generator and an OR-library importer.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opack/bench_tables.hpp"
#include "opack/generate.hpp"
#include "opack/io.hpp"
#include "opack/okp.hpp"
#include "opack/spp.hpp"
#include "opack/svg.hpp"

namespace {

using json = nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Loads a named benchmark instance: embedded okp fixtures first, then
// <fixtures>/<name>.txt in canonical format.
std::optional<opack::Instance> load_named_instance(const std::string& name,
                                                   const std::string& fixtures_dir) {
  for (const auto& [fixture_name, text] : opack::embedded_okp_fixtures())
    if (fixture_name == name) return opack::parse_instance(text);
  std::filesystem::path path = std::filesystem::path(fixtures_dir) / (name + ".txt");
  if (std::filesystem::exists(path)) return opack::parse_instance(read_file(path.string()));
  return std::nullopt;
}

int cmd_solve(const std::string& kind, const std::string& path, double time_limit,
              std::uint64_t node_limit, std::uint64_t seed, const std::string& svg_path,
              const std::string& json_path, const std::string& orlib_format) {
  opack::Instance instance = [&] {
    std::string text = read_file(path);
    if (orlib_format.empty()) return opack::parse_instance(text);
    if (orlib_format == "ngcut") return opack::import_orlib(text, opack::OrlibFormat::Ngcut);
    if (orlib_format == "gcut") return opack::import_orlib(text, opack::OrlibFormat::Gcut);
    if (orlib_format == "cgcut") return opack::import_orlib(text, opack::OrlibFormat::Cgcut);
    throw std::runtime_error("unknown OR-library format: " + orlib_format);
  }();

  opack::SearchLimits limits;
  if (time_limit > 0) limits.time_limit_s = time_limit;
  if (node_limit > 0) limits.node_cap = node_limit;

  json report;
  report["instance"] = path;
  report["kind"] = kind;
  auto start = std::chrono::steady_clock::now();
  int exit_code = 0;
  std::optional<opack::Packing> drawable;

  if (kind == "opp") {
    std::vector<int> all(instance.num_boxes());
    std::iota(all.begin(), all.end(), 0);
    opack::OppVerdict verdict = opack::solve_opp(instance, all, limits);
    const char* text = verdict.status == opack::OppStatus::Feasible ? "FEASIBLE"
                       : verdict.status == opack::OppStatus::Infeasible ? "INFEASIBLE"
                                                                        : "TIMEOUT";
    std::cout << "verdict: " << text << "\n";
    std::cout << "opp nodes: " << verdict.nodes << "\n";
    report["verdict"] = text;
    report["opp_nodes"] = verdict.nodes;
    if (verdict.packing) {
      drawable = verdict.packing;
      json coords;
      for (const auto& [id, pos] : *verdict.packing) coords[std::to_string(id)] = pos;
      report["packing"] = coords;
    }
    if (verdict.status == opack::OppStatus::Timeout) exit_code = 2;
  } else if (kind == "okp") {
    opack::OkpOptions options;
    options.seed = seed;
    opack::OkpResult result = opack::solve_okp(instance, limits, options);
    bool proved = result.status == opack::OkpStatus::Optimal;
    std::cout << "optimum" << (proved ? "" : " (best found, unproved)") << ": "
              << result.best_value << "\n";
    std::cout << "witness boxes: " << result.witness.size() << "\n";
    if (!proved) std::cout << "upper bound: " << result.upper_bound << "\n";
    std::cout << "okp nodes: " << result.counters.okp_nodes
              << ", opp calls: " << result.counters.opp_calls
              << ", opp nodes: " << result.counters.opp_nodes << "\n";
    report["optimum"] = result.best_value;
    report["proved"] = proved;
    report["upper_bound"] = result.upper_bound;
    report["witness_boxes"] = result.witness.size();
    report["okp_nodes"] = result.counters.okp_nodes;
    report["opp_calls"] = result.counters.opp_calls;
    report["opp_nodes"] = result.counters.opp_nodes;
    json coords;
    for (const auto& [id, pos] : result.packing) coords[std::to_string(id)] = pos;
    report["packing"] = coords;
    drawable = result.packing;
    if (!proved) exit_code = 2;
  } else if (kind == "spp") {
    // Strip instances keep the base directions; the last extent is replaced
    // by the stacking height so every box fits while searching.
    opack::Extent total = 0;
    for (const opack::Box& box : instance.boxes()) total += box.sizes[instance.dim() - 1];
    std::vector<opack::Extent> container = instance.container();
    container[instance.dim() - 1] = std::max(container[instance.dim() - 1], total);
    opack::Instance strip = instance.with_container(container).with_kind(opack::ProblemKind::Strip);
    opack::SppOptions options;
    options.seed = seed;
    opack::SppResult result = opack::solve_spp(strip, limits, options);
    bool proved = result.status == opack::SppStatus::Optimal;
    std::cout << "height" << (proved ? "" : " (upper bound)") << ": " << result.best_height
              << "\n";
    if (!proved) std::cout << "lower bound: " << result.lower_bound << "\n";
    std::cout << "opp calls: " << result.counters.opp_calls
              << ", opp nodes: " << result.counters.opp_nodes << "\n";
    report["height"] = result.best_height;
    report["lower_bound"] = result.lower_bound;
    report["proved"] = proved;
    json coords;
    for (const auto& [id, pos] : result.packing) coords[std::to_string(id)] = pos;
    report["packing"] = coords;
    if (!proved) exit_code = 2;
  } else {
    throw std::runtime_error("unknown problem kind: " + kind);
  }

  report["time_s"] = seconds_since(start);
  if (!json_path.empty()) write_file(json_path, report.dump(2) + "\n");
  if (!svg_path.empty()) {
    if (!drawable) throw std::runtime_error("no packing available for SVG output");
    write_file(svg_path, opack::emit_svg(instance, *drawable));
  }
  return exit_code;
}

int cmd_bench(const std::string& suite, double time_limit, std::uint64_t seed,
              const std::string& fixtures_dir, const std::string& json_path) {
  std::vector<std::string> names = opack::suite_instances(suite);
  json rows = json::array();
  bool any_mismatch = false;

  std::cout << "instance\tstatus\toptimum\texpected\tboxes\texp_boxes\tokp_nodes\topp_calls"
            << "\topp_nodes\ttime_s\n";
  for (const std::string& name : names) {
    const opack::ExpectedRow* expected = opack::expected_row(name);
    json row;
    row["instance"] = name;
    auto instance = load_named_instance(name, fixtures_dir);
    if (!instance) {
      std::cout << name << "\tmissing-data\t-\t"
                << (expected && expected->optimum ? std::to_string(*expected->optimum) : "-")
                << "\t-\t-\t-\t-\t-\t-\n";
      row["status"] = "missing-data";
      rows.push_back(row);
      continue;
    }
    if (expected) {
      bool shape_ok = instance->container(0) == expected->container_w &&
                      instance->container(1) == expected->container_h &&
                      instance->num_types() == expected->types &&
                      instance->num_boxes() == expected->boxes;
      if (!shape_ok) {
        std::cout << name << "\tshape-mismatch\t-\t-\t-\t-\t-\t-\t-\t-\n";
        row["status"] = "shape-mismatch";
        rows.push_back(row);
        any_mismatch = true;
        continue;
      }
    }

    opack::SearchLimits limits;
    limits.time_limit_s = time_limit;
    opack::OkpOptions options;
    options.seed = seed;
    auto start = std::chrono::steady_clock::now();
    opack::OkpResult result = opack::solve_okp(*instance, limits, options);
    double elapsed = seconds_since(start);

    std::string status;
    if (result.status == opack::OkpStatus::Optimal) {
      if (expected && expected->optimum)
        status = result.best_value == *expected->optimum ? "ok" : "MISMATCH";
      else
        status = "solved";
    } else {
      status = "timeout";
    }
    if (status == "MISMATCH") any_mismatch = true;

    std::cout << name << "\t" << status << "\t" << result.best_value << "\t"
              << (expected && expected->optimum ? std::to_string(*expected->optimum) : "-")
              << "\t" << result.witness.size() << "\t"
              << (expected && expected->optimal_boxes >= 0
                      ? std::to_string(expected->optimal_boxes)
                      : "-")
              << "\t" << result.counters.okp_nodes << "\t" << result.counters.opp_calls << "\t"
              << result.counters.opp_nodes << "\t" << elapsed << "\n";
    row["status"] = status;
    row["optimum"] = result.best_value;
    row["upper_bound"] = result.upper_bound;
    row["witness_boxes"] = result.witness.size();
    row["okp_nodes"] = result.counters.okp_nodes;
    row["opp_calls"] = result.counters.opp_calls;
    row["opp_nodes"] = result.counters.opp_nodes;
    row["time_s"] = elapsed;
    rows.push_back(row);
  }
  if (!json_path.empty()) {
    json report;
    report["suite"] = suite;
    report["seed"] = seed;
    report["time_limit_s"] = time_limit;
    report["rows"] = rows;
    write_file(json_path, report.dump(2) + "\n");
  }
  return any_mismatch ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for higher-dimensional orthogonal packing"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "Solve one instance (opp | okp | spp)");
  std::string kind, instance_path, svg_path, json_path, orlib_format;
  double time_limit = 0;
  std::uint64_t node_limit = 0, seed = 1;
  solve->add_option("kind", kind, "Problem kind: opp, okp or spp")->required();
  solve->add_option("instance", instance_path, "Instance file (canonical format)")->required();
  solve->add_option("--time-limit", time_limit, "Wall-clock limit in seconds");
  solve->add_option("--node-limit", node_limit, "Inner search node cap");
  solve->add_option("--seed", seed, "Heuristic seed");
  solve->add_option("--svg", svg_path, "Write the witness packing as SVG (d = 2)");
  solve->add_option("--json", json_path, "Write a JSON report");
  solve->add_option("--orlib-format", orlib_format,
                    "Treat the input as an OR-library file: ngcut, gcut or cgcut");

  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite = "paper-small", fixtures_dir = "fixtures";
  double bench_limit = 900;
  std::uint64_t bench_seed = 1;
  std::string bench_json;
  bench->add_option("suite", suite, "paper-small or paper-medium")->required();
  bench->add_option("--time-limit", bench_limit, "Per-instance limit in seconds");
  bench->add_option("--seed", bench_seed, "Heuristic seed");
  bench->add_option("--fixtures", fixtures_dir, "Directory with canonical instance files");
  bench->add_option("--json", bench_json, "Write the result table as JSON");

  auto* generate = app.add_subcommand("generate", "Generate a random instance");
  int dim = 2, num_types = 20, per_type = 1;
  std::string gen_type = "I", out_path;
  std::uint64_t gen_seed = 1;
  generate->add_option("--dim", dim, "Dimension (2 or 3)");
  generate->add_option("--type", gen_type, "Instance type: I, II or III");
  generate->add_option("--types", num_types, "Number of box types");
  generate->add_option("--per-type", per_type, "Boxes per type");
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* import = app.add_subcommand("import-orlib", "Convert an OR-library file to canonical form");
  std::string import_format, import_in, import_out;
  import->add_option("--format", import_format, "ngcut, gcut or cgcut")->required();
  import->add_option("input", import_in, "OR-library file")->required();
  import->add_option("-o,--output", import_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return cmd_solve(kind, instance_path, time_limit, node_limit, seed, svg_path, json_path,
                       orlib_format);
    if (bench->parsed())
      return cmd_bench(suite, bench_limit, bench_seed, fixtures_dir, bench_json);
    if (generate->parsed()) {
      opack::GeneratorType type;
      if (gen_type == "I") type = opack::GeneratorType::I;
      else if (gen_type == "II") type = opack::GeneratorType::II;
      else if (gen_type == "III") type = opack::GeneratorType::III;
      else throw std::runtime_error("unknown generator type: " + gen_type);
      opack::Instance instance = opack::generate_instance(dim, type, num_types, per_type, gen_seed);
      std::string text = opack::serialize_instance(instance);
      if (out_path.empty()) std::cout << text;
      else write_file(out_path, text);
      return 0;
    }
    if (import->parsed()) {
      opack::OrlibFormat format;
      if (import_format == "ngcut") format = opack::OrlibFormat::Ngcut;
      else if (import_format == "gcut") format = opack::OrlibFormat::Gcut;
      else if (import_format == "cgcut") format = opack::OrlibFormat::Cgcut;
      else throw std::runtime_error("unknown OR-library format: " + import_format);
      opack::Instance instance = opack::import_orlib(read_file(import_in), format);
      std::string text = opack::serialize_instance(instance);
      if (import_out.empty()) std::cout << text;
      else write_file(import_out, text);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
