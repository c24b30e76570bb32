#pragma once

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphsig/filters.hpp"
#include "graphsig/graph.hpp"

namespace graphsig {

struct ColorStop {
  double position;  // in [0, 1]
  std::array<double, 3> rgb;  // components in [0, 1]
};

/// Nine samples of the viridis map.
std::vector<ColorStop> viridis();

struct PlotStyle {
  int width = 640;
  int height = 480;
  double vertex_radius = 4.0;
  double edge_width = 0.6;
  std::vector<ColorStop> colormap = viridis();
  std::optional<std::pair<double, double>> range;  // signal range, auto when empty
  bool show_edges = true;
};

/// Linear interpolation of the stops at t (clamped to [0, 1]).
std::array<double, 3> colormap_rgb(const std::vector<ColorStop>& stops, double t);
/// "#rrggbb".
std::string colormap_hex(const std::vector<ColorStop>& stops, double t);

/// Edges as <line> elements under vertices as <circle> elements; with a
/// signal, vertex fills follow the colormap and a colorbar group is added.
/// 3-D coordinates are projected onto the first two axes.
std::string export_graph_svg(const Graph& g, const std::optional<Eigen::VectorXd>& signal = std::nullopt,
                             const PlotStyle& style = {});

/// One polyline per kernel over [0, lmax] plus a dashed polyline for
/// sum_k g_k^2, with axes and tick labels.
std::string export_filter_svg(const FilterBank& fb, double lmax, int grid_size = 200, const PlotStyle& style = {});

/// Graphviz "graph"/"digraph" block with weight attributes.
std::string export_graph_dot(const Graph& g);

}  // namespace graphsig
