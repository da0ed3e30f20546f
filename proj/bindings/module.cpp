#include <fstream>
#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sperner/geometry.hpp"
#include "sperner/io.hpp"
#include "sperner/labeling.hpp"
#include "sperner/lattice.hpp"
#include "sperner/search.hpp"
#include "sperner/svg.hpp"

#ifndef SPERNER_VERSION_STRING
#define SPERNER_VERSION_STRING "0.0.0"
#endif

namespace py = pybind11;
using namespace sperner;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simplex lattice labelings, cell statistics and bounds, labeling "
            "search, and measure geometry of simplex partitions";
  m.attr("__version__") = SPERNER_VERSION_STRING;

  // lattice ------------------------------------------------------------------
  py::class_<Lattice>(m, "Lattice",
                      "Points of the dilated simplex: non-negative integer "
                      "k-vectors summing to q, in descending lexicographic "
                      "order")
      .def(py::init<int, int>(), py::arg("k"), py::arg("q"))
      .def_property_readonly("k", &Lattice::k)
      .def_property_readonly("q", &Lattice::q)
      .def_property_readonly("size", &Lattice::size)
      .def("rank",
           [](const Lattice& l, const Coords& a) { return l.rank(a); },
           py::arg("a"))
      .def("unrank", &Lattice::unrank, py::arg("r"))
      .def("contains",
           [](const Lattice& l, const Coords& a) { return l.contains(a); },
           py::arg("a"))
      .def("points", &Lattice::points)
      .def("__len__", &Lattice::size)
      .def("__repr__", [](const Lattice& l) {
        return "Lattice(k=" + std::to_string(l.k()) +
               ", q=" + std::to_string(l.q()) + ")";
      });

  m.def("enumerate_vertices", &enumerate_vertices, py::arg("k"), py::arg("q"));
  m.def("enumerate_cells", &enumerate_cells, py::arg("k"), py::arg("q"));
  m.def("cell_vertices",
        [](const Coords& base) { return cell_vertices(base); },
        py::arg("base"));
  m.def("admissible_colors",
        [](const Coords& a) { return admissible_colors(a); }, py::arg("a"));
  m.def("cells_adjacent",
        [](const Coords& b1, const Coords& b2) {
          return cells_adjacent(b1, b2);
        },
        py::arg("b1"), py::arg("b2"));
  m.def("enumerate_down_cells", &enumerate_down_cells, py::arg("q"));
  m.def("down_cell_vertices",
        [](const Coords& base) { return down_cell_vertices(base); },
        py::arg("base"));

  // labeling -----------------------------------------------------------------
  py::class_<Labeling>(m, "Labeling",
                       "A color (1..k) per lattice point, stored by rank")
      .def(py::init<int, int>(), py::arg("k"), py::arg("q"))
      .def_property_readonly("k", &Labeling::k)
      .def_property_readonly("q", &Labeling::q)
      .def_property_readonly("size", &Labeling::size)
      .def("color_at",
           [](const Labeling& l, const Coords& a) { return l.color_at(a); },
           py::arg("a"))
      .def("color_at_rank", &Labeling::color_at_rank, py::arg("r"))
      .def("set_color_at",
           [](Labeling& l, const Coords& a, int c) { l.set_color_at(a, c); },
           py::arg("a"), py::arg("c"))
      .def("set_color_at_rank", &Labeling::set_color_at_rank, py::arg("r"),
           py::arg("c"))
      .def("colors",
           [](const Labeling& l) {
             return std::vector<int>(l.colors().begin(), l.colors().end());
           })
      .def("__repr__", [](const Labeling& l) {
        return "Labeling(k=" + std::to_string(l.k()) +
               ", q=" + std::to_string(l.q()) + ")";
      });

  py::class_<LabelingStats>(m, "LabelingStats")
      .def_readonly("admissible", &LabelingStats::admissible)
      .def_readonly("cells", &LabelingStats::cells)
      .def_readonly("mono", &LabelingStats::mono)
      .def_readonly("nonmono", &LabelingStats::nonmono)
      .def_readonly("max_colors_per_cell", &LabelingStats::max_colors_per_cell)
      .def_readonly("per_color_mono", &LabelingStats::per_color_mono)
      .def_readonly("bound", &LabelingStats::bound)
      .def_readonly("meets_bound", &LabelingStats::meets_bound)
      .def("__repr__", [](const LabelingStats& s) {
        return "LabelingStats(mono=" + std::to_string(s.mono) +
               ", nonmono=" + std::to_string(s.nonmono) +
               ", max_colors_per_cell=" +
               std::to_string(s.max_colors_per_cell) + ")";
      });

  py::class_<RainbowCells>(m, "RainbowCells")
      .def_readonly("up", &RainbowCells::up)
      .def_readonly("down", &RainbowCells::down);

  m.def("nonmono_lower_bound", &nonmono_lower_bound, py::arg("k"),
        py::arg("q"));
  m.def("first_choice", &first_choice, py::arg("k"), py::arg("q"));
  m.def("max_coordinate", &max_coordinate, py::arg("k"), py::arg("q"));
  m.def("top_coordinate", &top_coordinate, py::arg("k"), py::arg("q"),
        py::arg("force") = false);
  m.def("random_admissible", &random_admissible, py::arg("k"), py::arg("q"),
        py::arg("seed"));
  m.def("is_admissible", &is_admissible, py::arg("labeling"));
  m.def("compute_stats", &compute_stats, py::arg("labeling"));
  m.def("mono_packing_witness", &mono_packing_witness, py::arg("labeling"));
  m.def("verify_mono_packing", &verify_mono_packing, py::arg("labeling"));
  m.def("find_rainbow_cells", &find_rainbow_cells, py::arg("labeling"));

  // labeling file format -------------------------------------------------------
  m.def("save_labeling",
        [](const Labeling& l, const std::string& path) {
          std::ofstream f(path, std::ios::binary);
          if (!f) throw std::runtime_error("cannot open output file: " + path);
          write_labeling(f, l);
        },
        py::arg("labeling"), py::arg("path"));
  m.def("load_labeling",
        [](const std::string& path) {
          std::ifstream f(path, std::ios::binary);
          if (!f) throw std::runtime_error("cannot open input file: " + path);
          return read_labeling(f);
        },
        py::arg("path"));
  m.def("labeling_to_string", [](const Labeling& l) {
    std::ostringstream ss;
    write_labeling(ss, l);
    return ss.str();
  });
  m.def("labeling_from_string", [](const std::string& text) {
    std::istringstream ss(text);
    return read_labeling(ss);
  });

  // search ---------------------------------------------------------------------
  py::enum_<Objective>(m, "Objective")
      .value("min_nonmono", Objective::min_nonmono)
      .value("min_max_colors", Objective::min_max_colors);

  py::class_<SearchOptions>(m, "SearchOptions")
      .def(py::init<>())
      .def_readwrite("node_budget", &SearchOptions::node_budget)
      .def_readwrite("time_budget_seconds", &SearchOptions::time_budget_seconds)
      .def_readwrite("prune", &SearchOptions::prune)
      .def_readwrite("bound_stop", &SearchOptions::bound_stop);

  py::class_<HeuristicOptions>(m, "HeuristicOptions")
      .def(py::init<>())
      .def_readwrite("restarts", &HeuristicOptions::restarts)
      .def_readwrite("steps_per_restart", &HeuristicOptions::steps_per_restart)
      .def_readwrite("stall_limit", &HeuristicOptions::stall_limit)
      .def_readwrite("seed", &HeuristicOptions::seed);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("objective", &SearchResult::objective)
      .def_readonly("optimum", &SearchResult::optimum)
      .def_readonly("proven_optimal", &SearchResult::proven_optimal)
      .def_readonly("nodes_visited", &SearchResult::nodes_visited)
      .def_readonly("bound", &SearchResult::bound)
      .def_readonly("search_space_log2", &SearchResult::search_space_log2)
      .def_readonly("best", &SearchResult::best)
      .def("__repr__", [](const SearchResult& r) {
        return "SearchResult(optimum=" + std::to_string(r.optimum) +
               ", proven_optimal=" + (r.proven_optimal ? "True" : "False") +
               ")";
      });

  m.def("log2_search_space", &log2_search_space, py::arg("k"), py::arg("q"));
  m.def("objective_lower_bound", &objective_lower_bound, py::arg("objective"),
        py::arg("k"), py::arg("q"));
  m.def("exhaustive_search", &exhaustive_search, py::arg("objective"),
        py::arg("k"), py::arg("q"), py::arg("options") = SearchOptions{});
  m.def("heuristic_search", &heuristic_search, py::arg("objective"),
        py::arg("k"), py::arg("q"), py::arg("options") = HeuristicOptions{});

  // geometry ---------------------------------------------------------------------
  py::class_<VoronoiSpec>(m, "VoronoiSpec",
                          "Interior base point z; part i collects points "
                          "where x_i - z_i is maximal")
      .def(py::init([](const std::vector<double>& z) {
             return VoronoiSpec(z);
           }),
           py::arg("z"))
      .def_readonly("z", &VoronoiSpec::z)
      .def_readonly("min_z", &VoronoiSpec::min_z)
      .def_property_readonly("k", &VoronoiSpec::k);

  py::class_<PartitionAssignment>(m, "PartitionAssignment")
      .def_readonly("part", &PartitionAssignment::part)
      .def_readonly("gap", &PartitionAssignment::gap);

  py::class_<MeasureReport>(m, "MeasureReport")
      .def_readonly("k", &MeasureReport::k)
      .def_readonly("z", &MeasureReport::z)
      .def_readonly("eps", &MeasureReport::eps)
      .def_readonly("samples", &MeasureReport::samples)
      .def_readonly("seed", &MeasureReport::seed)
      .def_readonly("hits", &MeasureReport::hits)
      .def_readonly("neighborhood_volume", &MeasureReport::neighborhood_volume)
      .def_readonly("content_estimate", &MeasureReport::content_estimate)
      .def_readonly("exact", &MeasureReport::exact)
      .def_readonly("std_error", &MeasureReport::std_error)
      .def_readonly("sigmas_off", &MeasureReport::sigmas_off);

  py::class_<ShrunkPartition> shrunk(m, "ShrunkPartition");
  py::class_<ShrunkPartition::Verification>(shrunk, "Verification")
      .def_readonly("samples", &ShrunkPartition::Verification::samples)
      .def_readonly("s_eps_hits", &ShrunkPartition::Verification::s_eps_hits)
      .def_readonly("union_prime_hits",
                    &ShrunkPartition::Verification::union_prime_hits)
      .def_readonly("containment_violations",
                    &ShrunkPartition::Verification::containment_violations)
      .def_readonly("disjoint_violations",
                    &ShrunkPartition::Verification::disjoint_violations)
      .def_readonly("s_eps_volume", &ShrunkPartition::Verification::s_eps_volume)
      .def_readonly("union_prime_volume",
                    &ShrunkPartition::Verification::union_prime_volume)
      .def_readonly("ok", &ShrunkPartition::Verification::ok);
  shrunk
      .def(py::init<const VoronoiSpec&, double>(), py::arg("spec"),
           py::arg("eps"))
      .def_property_readonly("eps", &ShrunkPartition::eps)
      .def_property_readonly("eps_prime", &ShrunkPartition::eps_prime)
      .def("in_s_eps",
           [](const ShrunkPartition& p, const std::vector<double>& x) {
             return p.in_s_eps(x);
           },
           py::arg("x"))
      .def("a_prime_part",
           [](const ShrunkPartition& p, const std::vector<double>& x) {
             return p.a_prime_part(x);
           },
           py::arg("x"))
      .def("in_a_dprime",
           [](const ShrunkPartition& p, const std::vector<double>& y, int i) {
             return p.in_a_dprime(y, i);
           },
           py::arg("y"), py::arg("i"))
      .def("verify", &ShrunkPartition::verify, py::arg("samples"),
           py::arg("seed"));

  py::class_<SquareDemo>(m, "SquareDemo")
      .def_readonly("voronoi_length", &SquareDemo::voronoi_length)
      .def_readonly("diagonal_infimum", &SquareDemo::diagonal_infimum)
      .def_readonly("family", &SquareDemo::family);

  m.def("barycenter", &barycenter, py::arg("k"));
  m.def("normalized_simplex_point",
        [](const std::vector<double>& x) { return normalized_simplex_point(x); },
        py::arg("x"));
  m.def("classify",
        [](const std::vector<double>& x, const VoronoiSpec& spec) {
          return classify(x, spec);
        },
        py::arg("x"), py::arg("spec"));
  m.def("is_sperner_admissible_partition", &is_sperner_admissible_partition,
        py::arg("spec"), py::arg("samples") = 10'000, py::arg("seed") = 0);
  m.def("simplex_volume", &simplex_volume, py::arg("k"));
  m.def("simplex_height", &simplex_height, py::arg("k"));
  m.def("separating_set_content_exact", &separating_set_content_exact,
        py::arg("k"));
  m.def("eps_neighborhood_volume_exact", &eps_neighborhood_volume_exact,
        py::arg("k"), py::arg("eps"));
  m.def("mc_minkowski_content", &mc_minkowski_content, py::arg("spec"),
        py::arg("eps"), py::arg("samples"), py::arg("seed"),
        py::arg("workers") = 1);
  m.def("square_demo",
        [](const std::vector<double>& deltas) { return square_demo(deltas); },
        py::arg("deltas"));
  m.def("square_demo", []() { return square_demo(); });
  m.def("square_family_length", &square_family_length, py::arg("delta"));

  // svg ------------------------------------------------------------------------
  m.def("render_labeling_svg", &render_labeling_svg, py::arg("labeling"));
  m.def("render_voronoi_svg", &render_voronoi_svg, py::arg("spec"));
}
