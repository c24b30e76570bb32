#include <doctest.h>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <regex>
#include <set>
#include <sstream>

#include "graphsig/error.hpp"
#include "graphsig/filters.hpp"
#include "graphsig/generators.hpp"
#include "graphsig/plot.hpp"
#include "graphsig/spectral.hpp"

#include "error_code.hpp"

using namespace graphsig;
using testutil::code_of;
namespace pt = boost::property_tree;

namespace {

pt::ptree parse_svg(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree.get_child("svg");
}

const pt::ptree* find_by_id(const pt::ptree& svg, const std::string& tag, const std::string& id) {
  for (const auto& [name, child] : svg)
    if (name == tag && child.get<std::string>("<xmlattr>.id", "") == id) return &child;
  return nullptr;
}

int count_tag(const pt::ptree& node, const std::string& tag) {
  int n = 0;
  for (const auto& [name, child] : node) n += name == tag;
  return n;
}

std::vector<std::pair<double, double>> polyline_points(const pt::ptree& svg, const std::string& id) {
  const pt::ptree* node = find_by_id(svg, "polyline", id);
  REQUIRE(node != nullptr);
  std::istringstream in(node->get<std::string>("<xmlattr>.points"));
  std::vector<std::pair<double, double>> pts;
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    pts.emplace_back(std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1)));
  }
  return pts;
}

}  // namespace

TEST_SUITE("plot") {
  TEST_CASE("colormap") {
    const auto stops = viridis();
    CHECK(stops.size() == 9);
    CHECK(colormap_hex(stops, 0.0) == "#440154");
    CHECK(colormap_hex(stops, 1.0) == "#fde725");
    CHECK(colormap_hex(stops, -5.0) == colormap_hex(stops, 0.0));
    const auto mid = colormap_rgb({{0.0, {0, 0, 0}}, {1.0, {1, 1, 1}}}, 0.25);
    CHECK(mid[0] == doctest::Approx(0.25));
  }

  TEST_CASE("path(2) drawing") {
    const pt::ptree svg = parse_svg(export_graph_svg(path(2)));
    const pt::ptree* edges = find_by_id(svg, "g", "edges");
    const pt::ptree* verts = find_by_id(svg, "g", "vertices");
    REQUIRE(edges != nullptr);
    REQUIRE(verts != nullptr);
    CHECK(count_tag(*edges, "line") == 1);
    CHECK(count_tag(*verts, "circle") == 2);
    CHECK(find_by_id(svg, "g", "colorbar") == nullptr);
  }

  TEST_CASE("constant signal gives one fill") {
    const Graph g = sensor(30, 1);
    const pt::ptree svg = parse_svg(export_graph_svg(g, Eigen::VectorXd::Constant(30, 2.0)));
    std::set<std::string> fills;
    for (const auto& [name, c] : *find_by_id(svg, "g", "vertices"))
      if (name == "circle") fills.insert(c.get<std::string>("<xmlattr>.fill"));
    CHECK(fills.size() == 1);
    CHECK(*fills.begin() == colormap_hex(viridis(), 0.5));
  }

  TEST_CASE("ring(8) coloured by an eigenvector") {
    const Graph g = ring(8);
    const auto sd = compute_fourier_basis(g);
    const std::string text = export_graph_svg(g, Eigen::VectorXd(sd->U.col(1)));
    const pt::ptree svg = parse_svg(text);
    CHECK(count_tag(*find_by_id(svg, "g", "edges"), "line") == 8);
    CHECK(count_tag(*find_by_id(svg, "g", "vertices"), "circle") == 8);
    const pt::ptree* bar = find_by_id(svg, "g", "colorbar");
    REQUIRE(bar != nullptr);
    CHECK(count_tag(*bar, "rect") == 32);
    CHECK(count_tag(*bar, "text") == 2);
    std::set<std::string> fills;
    for (const auto& [name, c] : *find_by_id(svg, "g", "vertices"))
      if (name == "circle") fills.insert(c.get<std::string>("<xmlattr>.fill"));
    CHECK(fills.size() > 2);
    CHECK(text == export_graph_svg(g, Eigen::VectorXd(sd->U.col(1))));
  }

  TEST_CASE("graph drawing errors") {
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(2, 2);
    W(0, 1) = W(1, 0) = 1;
    CHECK(code_of([&] { export_graph_svg(graph_from_dense(W)); }) == ErrorCode::MissingCoordinates);
    CHECK(code_of([] { export_graph_svg(ring(4), Eigen::VectorXd::Ones(3)); }) == ErrorCode::ShapeMismatch);
    Eigen::VectorXd bad = Eigen::VectorXd::Ones(4);
    bad[2] = std::nan("");
    CHECK(code_of([&] { export_graph_svg(ring(4), bad); }) == ErrorCode::NonFinite);
    PlotStyle style;
    style.width = 0;
    CHECK(code_of([&] { export_graph_svg(ring(4), std::nullopt, style); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("filter responses") {
    const FilterBank fb = design_itersine(4.0, 5);
    const pt::ptree svg = parse_svg(export_filter_svg(fb, 4.0, 100));
    CHECK(count_tag(svg, "polyline") == 6);
    for (int k = 0; k < 5; ++k) CHECK(polyline_points(svg, "kernel-" + std::to_string(k)).size() == 100);
    const auto frame = polyline_points(svg, "frame");
    REQUIRE(frame.size() == 100);
    for (const auto& p : frame) CHECK(std::abs(p.second - frame.front().second) <= 1e-3);
    CHECK(find_by_id(svg, "g", "axes") != nullptr);

    const pt::ptree heat = parse_svg(export_filter_svg(design_heat(2.0, 3.0), 2.0));
    const auto curve = polyline_points(heat, "kernel-0");
    for (std::size_t i = 1; i < curve.size(); ++i) {
      CHECK(curve[i].first > curve[i - 1].first);
      CHECK(curve[i].second >= curve[i - 1].second);
    }
    CHECK(code_of([&] { export_filter_svg(fb, 4.0, 1); }) == ErrorCode::BadParameter);
  }

  TEST_CASE("dot export") {
    CHECK(export_graph_dot(path(2)) == "graph {\n  0 -- 1 [weight=1];\n}\n");
    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(3, 3);
    W(0, 1) = 2;
    W(1, 0) = 0.5;
    const std::string dot = export_graph_dot(graph_from_dense(W, {Directedness::Directed}));
    CHECK(dot == "digraph {\n  2;\n  0 -> 1 [weight=2];\n  1 -> 0 [weight=0.5];\n}\n");
  }

  TEST_CASE("dot edges parse back") {
    const Graph g = sensor(50, 2);
    const std::string dot = export_graph_dot(g);
    const std::regex edge(R"((\d+) -- (\d+) \[weight=([^\]]+)\];)");
    int n = 0;
    double total = 0;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge); it != std::sregex_iterator(); ++it) {
      const int s = std::stoi((*it)[1]);
      const int t = std::stoi((*it)[2]);
      CHECK(s < t);
      CHECK(std::stod((*it)[3]) == doctest::Approx(g.W().coeff(s, t)).epsilon(1e-12));
      total += std::stod((*it)[3]);
      ++n;
    }
    CHECK(n == g.Ne());
    CHECK(total == doctest::Approx(0.5 * g.W().sum()).epsilon(1e-12));
  }
}

TEST_SUITE("properties") {
  TEST_CASE("svg output is well-formed and deterministic") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = sensor(20 + static_cast<int>(seed) * 7, seed);
      const Eigen::VectorXd f = g.coords()->col(0);
      const std::string a = export_graph_svg(g, f);
      CHECK(a == export_graph_svg(g, f));
      const pt::ptree svg = parse_svg(a);
      CHECK(count_tag(*find_by_id(svg, "g", "vertices"), "circle") == g.N());
      CHECK(count_tag(*find_by_id(svg, "g", "edges"), "line") == g.Ne());
      for (const auto& [name, c] : *find_by_id(svg, "g", "vertices")) {
        if (name != "circle") continue;
        const double cx = c.get<double>("<xmlattr>.cx");
        const double cy = c.get<double>("<xmlattr>.cy");
        CHECK(cx >= 0);
        CHECK(cx <= 640);
        CHECK(cy >= 0);
        CHECK(cy <= 480);
      }
    }
  }
}
