#include "graphsig/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "graphsig/diff.hpp"
#include "graphsig/error.hpp"
#include "graphsig/io.hpp"

namespace graphsig {
namespace {

constexpr double kMargin = 24.0;
constexpr double kColorbarWidth = 64.0;
constexpr int kColorbarSteps = 32;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void check_style(const PlotStyle& style) {
  if (style.width <= 0 || style.height <= 0 || !(style.vertex_radius > 0.0) || !(style.edge_width > 0.0))
    throw Error(ErrorCode::BadParameter, "plot dimensions must be positive");
  if (style.colormap.empty()) throw Error(ErrorCode::BadParameter, "colormap has no stops");
  for (std::size_t i = 1; i < style.colormap.size(); ++i)
    if (style.colormap[i].position < style.colormap[i - 1].position)
      throw Error(ErrorCode::BadParameter, "colormap stops must be sorted by position");
  if (style.range && !(style.range->first <= style.range->second))
    throw Error(ErrorCode::BadParameter, "signal range must satisfy min <= max");
}

void open_svg(std::ostringstream& out, const PlotStyle& style) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width << "\" height=\""
      << style.height << "\" viewBox=\"0 0 " << style.width << ' ' << style.height << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

// Maps [lo, hi] onto [a, b]; a degenerate interval maps to the midpoint.
double affine(double v, double lo, double hi, double a, double b) {
  if (hi - lo <= 0.0) return 0.5 * (a + b);
  return a + (v - lo) / (hi - lo) * (b - a);
}

}  // namespace

std::vector<ColorStop> viridis() {
  const int rgb[9][3] = {{68, 1, 84},    {71, 45, 123},  {59, 82, 139},  {44, 114, 142}, {33, 145, 140},
                         {40, 174, 128}, {94, 201, 98},  {173, 220, 48}, {253, 231, 37}};
  std::vector<ColorStop> stops;
  for (int i = 0; i < 9; ++i)
    stops.push_back({i / 8.0, {rgb[i][0] / 255.0, rgb[i][1] / 255.0, rgb[i][2] / 255.0}});
  return stops;
}

std::array<double, 3> colormap_rgb(const std::vector<ColorStop>& stops, double t) {
  if (stops.empty()) throw Error(ErrorCode::BadParameter, "colormap has no stops");
  t = std::clamp(std::isfinite(t) ? t : 0.0, 0.0, 1.0);
  if (t <= stops.front().position) return stops.front().rgb;
  for (std::size_t i = 1; i < stops.size(); ++i) {
    if (t <= stops[i].position) {
      const double span = stops[i].position - stops[i - 1].position;
      const double s = span > 0.0 ? (t - stops[i - 1].position) / span : 1.0;
      std::array<double, 3> out;
      for (int c = 0; c < 3; ++c) out[c] = (1.0 - s) * stops[i - 1].rgb[c] + s * stops[i].rgb[c];
      return out;
    }
  }
  return stops.back().rgb;
}

std::string colormap_hex(const std::vector<ColorStop>& stops, double t) {
  const auto rgb = colormap_rgb(stops, t);
  char buf[8];
  auto byte = [](double v) { return static_cast<int>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0)); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(rgb[0]), byte(rgb[1]), byte(rgb[2]));
  return buf;
}

std::string export_graph_svg(const Graph& g, const std::optional<Eigen::VectorXd>& signal, const PlotStyle& style) {
  check_style(style);
  if (!g.coords()) throw Error(ErrorCode::MissingCoordinates, "graph '" + g.name() + "' has no coordinates");
  const Eigen::MatrixXd& coords = *g.coords();
  if (signal) {
    if (signal->size() != g.N()) throw Error(ErrorCode::ShapeMismatch, "signal length does not match the vertex count");
    if (!signal->allFinite()) throw Error(ErrorCode::NonFinite, "signal contains non-finite values");
  }

  const double right = style.width - kMargin - (signal ? kColorbarWidth : 0.0);
  const double bottom = style.height - kMargin;
  const Eigen::VectorXd xs = coords.col(0), ys = coords.col(1);
  const double xmin = xs.minCoeff(), xmax = xs.maxCoeff(), ymin = ys.minCoeff(), ymax = ys.maxCoeff();
  // Equal scale on both axes, centred in the drawing area.
  const double avail_w = std::max(1.0, right - kMargin), avail_h = std::max(1.0, bottom - kMargin);
  const double span_x = xmax - xmin, span_y = ymax - ymin;
  double scale = 1.0;
  if (span_x > 0.0 || span_y > 0.0)
    scale = std::min(span_x > 0.0 ? avail_w / span_x : INFINITY, span_y > 0.0 ? avail_h / span_y : INFINITY);
  const double cx = 0.5 * (kMargin + right), cy = 0.5 * (kMargin + bottom);
  auto px = [&](int v) { return cx + scale * (xs[v] - 0.5 * (xmin + xmax)); };
  auto py = [&](int v) { return cy - scale * (ys[v] - 0.5 * (ymin + ymax)); };

  std::ostringstream out;
  open_svg(out, style);
  if (style.show_edges) {
    out << "  <g id=\"edges\" stroke=\"#808080\" stroke-width=\"" << num(style.edge_width) << "\">\n";
    for (const Edge& e : adj2vec(g)->edges)
      out << "    <line x1=\"" << num(px(e.source)) << "\" y1=\"" << num(py(e.source)) << "\" x2=\""
          << num(px(e.target)) << "\" y2=\"" << num(py(e.target)) << "\"/>\n";
    out << "  </g>\n";
  }

  double lo = 0.0, hi = 0.0;
  if (signal) {
    lo = style.range ? style.range->first : signal->minCoeff();
    hi = style.range ? style.range->second : signal->maxCoeff();
  }
  out << "  <g id=\"vertices\" stroke=\"#000000\" stroke-width=\"0.3\">\n";
  for (int v = 0; v < g.N(); ++v) {
    const std::string fill =
        signal ? colormap_hex(style.colormap, affine((*signal)[v], lo, hi, 0.0, 1.0)) : std::string("#1f77b4");
    out << "    <circle cx=\"" << num(px(v)) << "\" cy=\"" << num(py(v)) << "\" r=\"" << num(style.vertex_radius)
        << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "  </g>\n";

  if (signal) {
    const double bx = style.width - kMargin - 0.5 * kColorbarWidth, bw = 14.0;
    const double step = (bottom - kMargin) / kColorbarSteps;
    out << "  <g id=\"colorbar\">\n";
    for (int s = 0; s < kColorbarSteps; ++s) {
      const double t = (s + 0.5) / kColorbarSteps;
      out << "    <rect x=\"" << num(bx - bw) << "\" y=\"" << num(bottom - (s + 1) * step) << "\" width=\"" << num(bw)
          << "\" height=\"" << num(step) << "\" fill=\"" << colormap_hex(style.colormap, t) << "\"/>\n";
    }
    out << "    <text x=\"" << num(bx + 2.0) << "\" y=\"" << num(bottom) << "\" font-size=\"10\">"
        << io::format_double(lo) << "</text>\n";
    out << "    <text x=\"" << num(bx + 2.0) << "\" y=\"" << num(kMargin + 8.0) << "\" font-size=\"10\">"
        << io::format_double(hi) << "</text>\n";
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string export_filter_svg(const FilterBank& fb, double lmax, int grid_size, const PlotStyle& style) {
  check_style(style);
  if (grid_size < 2) throw Error(ErrorCode::BadParameter, "grid_size must be at least 2");
  if (!(lmax > 0.0) || !std::isfinite(lmax)) throw Error(ErrorCode::BadParameter, "lmax must be positive");
  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(grid_size, 0.0, lmax);
  const Eigen::MatrixXd values = fb.evaluate(grid);
  const Eigen::VectorXd frame = values.rowwise().squaredNorm();

  const double left = kMargin + 32.0, right = style.width - kMargin;
  const double top = kMargin, bottom = style.height - kMargin - 16.0;
  double vmin = std::min(0.0, values.size() ? values.minCoeff() : 0.0);
  double vmax = std::max({1.0, values.size() ? values.maxCoeff() : 0.0, frame.maxCoeff()});
  if (!std::isfinite(vmin) || !std::isfinite(vmax))
    throw Error(ErrorCode::NonFinite, "filter responses are not finite");
  vmax += 0.05 * (vmax - vmin);
  auto px = [&](double x) { return affine(x, 0.0, lmax, left, right); };
  auto py = [&](double v) { return affine(v, vmin, vmax, bottom, top); };

  std::ostringstream out;
  open_svg(out, style);
  out << "  <g id=\"axes\" stroke=\"#000000\" stroke-width=\"1\" font-size=\"10\">\n";
  out << "    <line x1=\"" << num(left) << "\" y1=\"" << num(py(0.0)) << "\" x2=\"" << num(right) << "\" y2=\""
      << num(py(0.0)) << "\"/>\n";
  out << "    <line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(left) << "\" y2=\""
      << num(top) << "\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double x = lmax * t / kTicks;
    out << "    <line x1=\"" << num(px(x)) << "\" y1=\"" << num(py(0.0)) << "\" x2=\"" << num(px(x)) << "\" y2=\""
        << num(py(0.0) + 4.0) << "\"/>\n";
    out << "    <text x=\"" << num(px(x)) << "\" y=\"" << num(py(0.0) + 14.0)
        << "\" stroke=\"none\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    const double v = vmin + (vmax - vmin) * t / kTicks;
    out << "    <line x1=\"" << num(left - 4.0) << "\" y1=\"" << num(py(v)) << "\" x2=\"" << num(left) << "\" y2=\""
        << num(py(v)) << "\"/>\n";
    out << "    <text x=\"" << num(left - 6.0) << "\" y=\"" << num(py(v) + 3.0)
        << "\" stroke=\"none\" text-anchor=\"end\">" << num(v) << "</text>\n";
  }
  out << "  </g>\n";

  auto polyline = [&](const Eigen::VectorXd& ys, const std::string& color, const std::string& extra,
                      const std::string& id) {
    out << "  <polyline id=\"" << id << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"" << extra
        << " points=\"";
    for (int i = 0; i < grid_size; ++i) out << (i ? " " : "") << num(px(grid[i])) << ',' << num(py(ys[i]));
    out << "\"/>\n";
  };
  for (int k = 0; k < fb.size(); ++k) {
    const double t = fb.size() > 1 ? static_cast<double>(k) / (fb.size() - 1) : 0.0;
    polyline(values.col(k), colormap_hex(style.colormap, t), "", "kernel-" + std::to_string(k));
  }
  polyline(frame, "#000000", " stroke-dasharray=\"6,3\"", "frame");
  out << "</svg>\n";
  return out.str();
}

std::string export_graph_dot(const Graph& g) {
  const bool directed = g.directed();
  const auto inc = adj2vec(g);
  std::vector<char> touched(g.N(), 0);
  for (const Edge& e : inc->edges) touched[e.source] = touched[e.target] = 1;
  std::ostringstream out;
  out << (directed ? "digraph {\n" : "graph {\n");
  for (int v = 0; v < g.N(); ++v)
    if (!touched[v]) out << "  " << v << ";\n";
  const char* arrow = directed ? " -> " : " -- ";
  for (const Edge& e : inc->edges)
    out << "  " << e.source << arrow << e.target << " [weight=" << io::format_double(e.weight) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace graphsig
