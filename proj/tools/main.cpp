#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sperner/geometry.hpp"
#include "sperner/io.hpp"
#include "sperner/labeling.hpp"
#include "sperner/lattice.hpp"
#include "sperner/search.hpp"
#include "sperner/svg.hpp"

#ifndef SPERNER_VERSION_STRING
#define SPERNER_VERSION_STRING "0.0.0"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace sperner;

namespace {

// ---------------------------------------------------------------------------
// Output plumbing

// Reports honor --format; file artifacts (labelings, witnesses, SVG) have
// fixed formats of their own. $SPERNER_OUT_DIR only relocates *default*
// artifact paths; an explicit --out is used verbatim.
fs::path default_out_dir() {
  const char* d = std::getenv("SPERNER_OUT_DIR");
  return (d && *d) ? fs::path(d) : fs::path(".");
}

fs::path resolve_artifact(const std::string& out, const char* fallback) {
  return out.empty() ? default_out_dir() / fallback : fs::path(out);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string e = "\"";
  for (char c : s) {
    if (c == '"') e += '"';
    e += c;
  }
  e += '"';
  return e;
}

std::string value_repr(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// json: pretty object; csv: RFC-4180-quoted key,value rows (arrays stay in
// their compact JSON spelling inside one field); text: key = value lines.
void emit_report(const json& j, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << j.dump(2) << '\n';
  } else if (format == "csv") {
    os << "key,value\n";
    for (const auto& [key, val] : j.items())
      os << csv_field(key) << ',' << csv_field(value_repr(val)) << '\n';
  } else {
    for (const auto& [key, val] : j.items())
      os << key << " = " << value_repr(val) << '\n';
  }
}

void write_report(const json& j, const std::string& format,
                  const std::string& out) {
  if (out.empty()) {
    emit_report(j, format, std::cout);
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  emit_report(j, format, f);
}

void write_text_file(const fs::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path.string());
  f << body;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

void provenance(int argc, char** argv, std::uint64_t seed) {
  std::string line = "# sperner " SPERNER_VERSION_STRING " | argv:";
  for (int i = 0; i < argc; ++i) {
    line += ' ';
    line += argv[i];
  }
  line += " | seed: " + std::to_string(seed);
  std::cerr << line << '\n';
}

// ---------------------------------------------------------------------------
// Shared pieces

Labeling build_strategy(const std::string& strategy, int k, int q,
                        std::uint64_t seed, bool force) {
  if (strategy == "first-choice") return first_choice(k, q);
  if (strategy == "max-coordinate") return max_coordinate(k, q);
  if (strategy == "top-coordinate") return top_coordinate(k, q, force);
  if (strategy == "random") return random_admissible(k, q, seed);
  throw std::invalid_argument("unknown strategy: " + strategy);
}

Labeling read_labeling_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return read_labeling(f);
}

json stats_json(const LabelingStats& s) {
  json j;
  j["admissible"] = s.admissible;
  j["mono"] = s.mono;
  j["nonmono"] = s.nonmono;
  j["max_colors_per_cell"] = s.max_colors_per_cell;
  j["per_color_mono"] = s.per_color_mono;
  j["bound"] = s.bound;
  j["meets_bound"] = s.meets_bound;
  return j;
}

std::vector<Coords> coords_list(const std::vector<Coords>& v) { return v; }

json coords_array(const std::vector<Coords>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(p);
  return a;
}

int default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplex lattice labelings, their cell statistics and bounds, "
               "exhaustive/heuristic labeling search, and measure geometry of "
               "simplex partitions"};
  app.require_subcommand(1);

  // shared option storage (one subcommand parses per run)
  int k = 3;
  int q = 5;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string strategy = "first-choice";
  std::string in_file;
  bool force = false;
  bool want_stats = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };
  const auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", strategy, "Labeling rule")
        ->check(CLI::IsMember(
            {"first-choice", "max-coordinate", "top-coordinate", "random"}))
        ->capture_default_str();
  };

  // enumerate ---------------------------------------------------------------
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "List lattice points, cell bases, or k=3 down-cell bases");
  bool enum_cells = false;
  bool enum_down = false;
  cmd_enum->add_option("--k", k, "Coordinates per point")->required();
  cmd_enum->add_option("--q", q, "Lattice scale (coordinate sum)")->required();
  auto* cells_flag =
      cmd_enum->add_flag("--cells", enum_cells, "List cell bases (sum q-1)");
  cmd_enum
      ->add_flag("--down", enum_down, "List k=3 down-cell bases (sum q-2)")
      ->excludes(cells_flag);
  cmd_enum->add_option("--out", out, "Write here instead of stdout");
  add_format(cmd_enum);

  // label -------------------------------------------------------------------
  auto* cmd_label = app.add_subcommand(
      "label", "Build a labeling; write it and/or report its statistics");
  cmd_label->add_option("--k", k, "Coordinates per point")->required();
  cmd_label->add_option("--q", q, "Lattice scale")->required();
  add_strategy(cmd_label);
  cmd_label->add_option("--seed", seed, "Seed for --strategy random");
  cmd_label->add_flag("--force", force,
                      "Run top-coordinate outside its proven k>=4, q>=k^2 "
                      "range (no color guarantee)");
  cmd_label->add_flag("--stats", want_stats, "Report cell statistics");
  cmd_label->add_option("--out", out, "Write the labeling file here");
  add_format(cmd_label);

  // stats -------------------------------------------------------------------
  auto* cmd_stats =
      app.add_subcommand("stats", "Cell statistics of a labeling file");
  cmd_stats->add_option("--in", in_file, "Labeling file")->required();
  cmd_stats->add_option("--out", out, "Write the report here");
  add_format(cmd_stats);

  // verify-bound ------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify-bound",
      "Check the packing certificate: monochromatic cells inject into the "
      "q-2 lattice, so nonmono >= C(q+k-3, k-2)");
  cmd_verify->add_option("--in", in_file, "Labeling file to verify");
  cmd_verify->add_option("--k", k, "Coordinates per point (with --strategy)");
  cmd_verify->add_option("--q", q, "Lattice scale (with --strategy)");
  add_strategy(cmd_verify);
  cmd_verify->add_option("--seed", seed, "Seed for --strategy random");
  cmd_verify->add_option("--out", out, "Write the report here");
  add_format(cmd_verify);

  // search ------------------------------------------------------------------
  auto* cmd_search = app.add_subcommand(
      "search", "Minimize nonmono count or max colors per cell over all "
                "admissible labelings");
  std::string objective_name = "min-nonmono";
  std::uint64_t node_budget = 100'000'000;
  double time_budget = 60.0;
  bool no_prune = false;
  bool bound_stop = false;
  bool heuristic = false;
  int restarts = 10;
  std::uint64_t steps = 20'000;
  std::uint64_t stall = 2'000;
  int workers = default_workers();
  cmd_search->add_option("--k", k, "Coordinates per point")->required();
  cmd_search->add_option("--q", q, "Lattice scale")->required();
  cmd_search
      ->add_option("--objective", objective_name,
                   "min-nonmono or min-max-colors")
      ->check(CLI::IsMember({"min-nonmono", "min_nonmono", "min-max-colors",
                             "min_max_colors"}))
      ->capture_default_str();
  cmd_search->add_option("--node-budget", node_budget, "Assignment limit")
      ->capture_default_str();
  cmd_search->add_option("--time-budget", time_budget, "Seconds limit")
      ->capture_default_str();
  cmd_search->add_flag(
      "--no-prune", no_prune,
      "Plain enumeration (refused if the labeling count exceeds the node "
      "budget)");
  cmd_search->add_flag("--bound-stop", bound_stop,
                       "Stop once the incumbent matches the proven lower "
                       "bound instead of exhausting the space");
  cmd_search->add_flag("--heuristic", heuristic,
                       "Hill climbing with random restarts instead of "
                       "exhaustive proof");
  cmd_search->add_option("--restarts", restarts, "Heuristic passes")
      ->capture_default_str();
  cmd_search->add_option("--steps", steps, "Heuristic steps per pass")
      ->capture_default_str();
  cmd_search
      ->add_option("--stall", stall,
                   "Heuristic steps without improvement before restart")
      ->capture_default_str();
  cmd_search->add_option("--seed", seed, "Heuristic seed");
  cmd_search->add_option(
      "--workers", workers,
      "Worker threads (results are worker-count independent; the current "
      "explorer is serial)");
  cmd_search->add_option("--out", out,
                         "Witness labeling path (default witness.txt)");
  add_format(cmd_search);

  // measure -----------------------------------------------------------------
  auto* cmd_measure = app.add_subcommand(
      "measure", "Monte Carlo Minkowski content of a Voronoi partition's "
                 "separating set");
  std::vector<double> z_opt;
  double eps = 1e-3;
  std::uint64_t samples = 1'000'000;
  int mc_workers = default_workers();
  cmd_measure->add_option("--k", k, "Simplex dimension count")->required();
  cmd_measure->add_option("--z", z_opt, "Interior base point (default barycenter)")
      ->delimiter(',');
  cmd_measure->add_option("--eps", eps, "Neighborhood radius")
      ->capture_default_str();
  cmd_measure->add_option("--samples", samples, "Sample count")
      ->capture_default_str();
  cmd_measure->add_option("--seed", seed, "Sampling seed");
  cmd_measure->add_option("--workers", mc_workers, "Sampling threads");
  cmd_measure->add_option("--out", out, "Write the report here");
  add_format(cmd_measure);

  // square-demo ---------------------------------------------------------------
  auto* cmd_square = app.add_subcommand(
      "square-demo",
      "Unit-square contrast: Voronoi cross length 2 vs a family approaching "
      "the diagonal's sqrt(2)");
  std::vector<double> deltas;
  cmd_square->add_option("--deltas", deltas,
                         "Corner parameters (default 0.2,0.1,0.05,0.01)")
      ->delimiter(',');
  cmd_square->add_option("--out", out, "Write the report here");
  add_format(cmd_square);

  // render --------------------------------------------------------------------
  auto* cmd_render = app.add_subcommand(
      "render", "SVG figure of a k=3 labeling or Voronoi partition");
  bool render_voronoi = false;
  std::vector<double> render_z;
  cmd_render->add_option("--k", k, "Must be 3")->capture_default_str();
  cmd_render->add_option("--q", q, "Lattice scale")->capture_default_str();
  add_strategy(cmd_render);
  cmd_render->add_option("--seed", seed, "Seed for --strategy random");
  cmd_render->add_flag("--force", force,
                       "Allow top-coordinate outside its proven range");
  cmd_render->add_flag("--voronoi", render_voronoi,
                       "Draw the partition for --z instead of a labeling");
  cmd_render->add_option("--z", render_z, "Interior base point for --voronoi")
      ->delimiter(',');
  cmd_render->add_option("--out", out, "SVG path (default render.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    provenance(argc, argv, seed);

    if (cmd_enum->parsed()) {
      if (enum_down && k != 3)
        throw std::invalid_argument("--down needs k = 3");
      const char* kind = enum_down ? "down-cells" : enum_cells ? "cells" : "points";
      std::vector<Coords> items =
          enum_down    ? enumerate_down_cells(q)
          : enum_cells ? enumerate_cells(k, q)
                       : coords_list(enumerate_vertices(k, q));
      if (format == "json") {
        json j;
        j["k"] = k;
        j["q"] = q;
        j["kind"] = kind;
        j["count"] = items.size();
        j["items"] = coords_array(items);
        write_report(j, format, out);
      } else {
        std::string body;
        if (format == "csv") {
          for (int i = 0; i < k; ++i)
            body += (i ? "," : "") + std::string("a") + std::to_string(i + 1);
          body += '\n';
          for (const auto& p : items) {
            for (int i = 0; i < k; ++i)
              body += (i ? "," : "") + std::to_string(p[i]);
            body += '\n';
          }
        } else {
          if (enum_cells)
            body += "#cells k=" + std::to_string(k) + " q=" + std::to_string(q) + "\n";
          if (enum_down)
            body += "#down-cells k=3 q=" + std::to_string(q) + "\n";
          for (const auto& p : items) {
            for (int i = 0; i < k; ++i) {
              if (i) body += ' ';
              body += std::to_string(p[i]);
            }
            body += '\n';
          }
        }
        if (out.empty())
          std::cout << body;
        else
          write_text_file(out, body);
      }
      return 0;
    }

    if (cmd_label->parsed()) {
      const Labeling lab = build_strategy(strategy, k, q, seed, force);
      if (!out.empty()) {
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + out);
        write_labeling(f, lab);
      }
      if (want_stats)
        emit_report(stats_json(compute_stats(lab)), format, std::cout);
      else if (out.empty())
        write_labeling(std::cout, lab);
      return 0;
    }

    if (cmd_stats->parsed()) {
      const Labeling lab = read_labeling_file(in_file);
      write_report(stats_json(compute_stats(lab)), format, out);
      return 0;
    }

    if (cmd_verify->parsed()) {
      const Labeling lab = in_file.empty()
                               ? build_strategy(strategy, k, q, seed, false)
                               : read_labeling_file(in_file);
      const LabelingStats s = compute_stats(lab);
      if (!s.admissible)
        throw std::invalid_argument(
            "labeling is not admissible; the packing certificate requires "
            "admissibility");
      const std::uint64_t checked = verify_mono_packing(lab);
      const std::uint64_t capacity =
          lab.q() >= 2 ? Lattice(lab.k(), lab.q() - 2).size() : 0;
      json j;
      j["k"] = lab.k();
      j["q"] = lab.q();
      j["admissible"] = s.admissible;
      j["mono"] = s.mono;
      j["nonmono"] = s.nonmono;
      j["bound"] = s.bound;
      j["meets_bound"] = s.meets_bound;
      j["mono_cells_checked"] = checked;
      j["capacity"] = capacity;
      j["ok"] = s.meets_bound && checked == s.mono && checked <= capacity;
      write_report(j, format, out);
      return 0;
    }

    if (cmd_search->parsed()) {
      for (char& c : objective_name)
        if (c == '-') c = '_';
      const Objective obj = objective_from_string(objective_name);
      std::fprintf(stderr, "# search space: 2^%.2f admissible labelings\n",
                   log2_search_space(k, q));
      (void)workers; // results never depend on it; see --workers help
      SearchResult res;
      if (heuristic) {
        HeuristicOptions h;
        h.restarts = restarts;
        h.steps_per_restart = steps;
        h.stall_limit = stall;
        h.seed = seed;
        res = heuristic_search(obj, k, q, h);
      } else {
        SearchOptions so;
        so.node_budget = node_budget;
        so.time_budget_seconds = time_budget;
        so.prune = !no_prune;
        so.bound_stop = bound_stop;
        res = exhaustive_search(obj, k, q, so);
      }
      const fs::path wpath = resolve_artifact(out, "witness.txt");
      {
        std::ofstream f(wpath, std::ios::binary);
        if (!f)
          throw std::runtime_error("cannot open output file: " + wpath.string());
        write_labeling(f, *res.best);
      }
      json j;
      j["objective"] = std::string(to_string(res.objective));
      j["optimum"] = res.optimum;
      j["proven_optimal"] = res.proven_optimal;
      j["nodes_visited"] = res.nodes_visited;
      j["bound"] = res.bound;
      j["witness_file"] = wpath.string();
      emit_report(j, format, std::cout);
      return (heuristic || res.proven_optimal) ? 0 : 3;
    }

    if (cmd_measure->parsed()) {
      std::vector<double> z = z_opt.empty() ? barycenter(k) : z_opt;
      if (!z_opt.empty() && static_cast<int>(z_opt.size()) != k)
        throw std::invalid_argument("--z needs exactly k coordinates");
      const VoronoiSpec spec(z);
      const MeasureReport r =
          mc_minkowski_content(spec, eps, samples, seed, mc_workers);
      json j;
      j["k"] = r.k;
      j["z"] = r.z;
      j["eps"] = r.eps;
      j["samples"] = r.samples;
      j["seed"] = r.seed;
      j["neighborhood_volume"] = r.neighborhood_volume;
      j["content_estimate"] = r.content_estimate;
      j["exact"] = r.exact;
      j["std_error"] = r.std_error;
      j["sigmas_off"] = r.sigmas_off; // non-finite serializes as null
      write_report(j, format, out);
      return 0;
    }

    if (cmd_square->parsed()) {
      const SquareDemo d = deltas.empty() ? square_demo() : square_demo(deltas);
      json fam = json::array();
      for (const auto& [delta, length] : d.family)
        fam.push_back(json{{"delta", delta}, {"length", length}});
      json j;
      j["voronoi_length"] = d.voronoi_length;
      j["diagonal_infimum"] = d.diagonal_infimum;
      j["family"] = fam;
      write_report(j, format, out);
      return 0;
    }

    if (cmd_render->parsed()) {
      std::string svg;
      if (render_voronoi) {
        const std::vector<double> z = render_z.empty() ? barycenter(3) : render_z;
        svg = render_voronoi_svg(VoronoiSpec(z));
      } else {
        svg = render_labeling_svg(build_strategy(strategy, k, q, seed, force));
      }
      const fs::path path = resolve_artifact(out, "render.svg");
      write_text_file(path, svg);
      std::cerr << "# wrote " << path.string() << '\n';
      return 0;
    }

    return 2; // unreachable: require_subcommand(1)
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
