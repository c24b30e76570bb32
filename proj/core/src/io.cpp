#include "graphsig/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "graphsig/error.hpp"

namespace graphsig::io {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view token, int line) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": '" + std::string(token) + "' is not a number");
  return value;
}

long long parse_int(const std::string& token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ": '" + token + "' is not an integer");
  return value;
}

std::ifstream open_in(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + file.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + file.string() + "' for writing");
  return out;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

SparseMatrix read_matrix_market(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "empty Matrix Market stream");
  ++lineno;
  std::istringstream header(lower(line));
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%matrixmarket" || object != "matrix")
    throw Error(ErrorCode::ParseError, "missing %%MatrixMarket matrix banner");
  if (format != "coordinate")
    throw Error(ErrorCode::ParseError, "only coordinate format is supported, got '" + format + "'");
  if (field != "real" && field != "integer" && field != "pattern")
    throw Error(ErrorCode::ParseError, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw Error(ErrorCode::ParseError, "unsupported symmetry '" + symmetry + "'");
  const bool pattern = field == "pattern";
  const bool symmetric = symmetry == "symmetric";

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t.front() == '%') continue;
    std::istringstream size_line{std::string(t)};
    std::string a, b, c, extra;
    if (!(size_line >> a >> b >> c) || (size_line >> extra))
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad size line");
    rows = parse_int(a, lineno);
    cols = parse_int(b, lineno);
    nnz = parse_int(c, lineno);
    break;
  }
  if (rows < 0 || cols < 0 || nnz < 0) throw Error(ErrorCode::ParseError, "missing size line");
  if (symmetric && rows != cols) throw Error(ErrorCode::ParseError, "symmetric matrix must be square");

  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(symmetric ? 2 * nnz : nnz));
  long long seen = 0;
  while (seen < nnz && std::getline(in, line)) {
    ++lineno;
    const auto s = trim(line);
    if (s.empty() || s.front() == '%') continue;
    std::istringstream entry{std::string(s)};
    std::string si, sj, sv, extra;
    if (!(entry >> si >> sj)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad entry");
    const long long i = parse_int(si, lineno) - 1;
    const long long j = parse_int(sj, lineno) - 1;
    double v = 1.0;
    if (!pattern) {
      if (!(entry >> sv)) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": missing value");
      v = parse_double(sv, lineno);
    }
    if (entry >> extra) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing data");
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": index out of range");
    if (symmetric && j > i)
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(lineno) + ": symmetric storage expects the lower triangle");
    t.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
    if (symmetric && i != j) t.emplace_back(static_cast<int>(j), static_cast<int>(i), v);
    ++seen;
  }
  if (seen != nnz)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(nnz) + " entries, found " +
                                           std::to_string(seen));
  SparseMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

SparseMatrix read_matrix_market(const std::filesystem::path& file) {
  auto in = open_in(file);
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const SparseMatrix& m, bool symmetric) {
  // Row-major entry order makes the file layout independent of storage order.
  std::vector<Triplet> entries;
  for (int j = 0; j < m.outerSize(); ++j)
    for (SparseMatrix::InnerIterator it(m, j); it; ++it)
      if (!symmetric || it.row() >= j) entries.emplace_back(it.row(), j, it.value());
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row() < b.row() || (a.row() == b.row() && a.col() < b.col());
  });
  out << "%%MatrixMarket matrix coordinate real " << (symmetric ? "symmetric" : "general") << '\n';
  out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& e : entries)
    out << e.row() + 1 << ' ' << e.col() + 1 << ' ' << format_double(e.value()) << '\n';
}

void write_matrix_market(const std::filesystem::path& file, const SparseMatrix& m, bool symmetric) {
  auto out = open_out(file);
  write_matrix_market(out, m, symmetric);
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + file.string() + "'");
}

Eigen::MatrixXd read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = t.find(',', start);
      row.push_back(parse_double(t.substr(start, comma - start), lineno));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " +
                                             std::to_string(rows.front().size()) + " columns");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Eigen::MatrixXd read_csv(const std::filesystem::path& file) {
  auto in = open_in(file);
  return read_csv(in);
}

void write_csv(std::ostream& out, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& file, const Eigen::MatrixXd& m) {
  auto out = open_out(file);
  write_csv(out, m);
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + file.string() + "'");
}

std::filesystem::path coords_path_for(const std::filesystem::path& mtx) {
  auto p = mtx;
  p.replace_extension(".coords.csv");
  return p;
}

Graph read_graph(const std::filesystem::path& mtx, const GraphOptions& options) {
  GraphOptions opts = options;
  if (!opts.coords) {
    const auto cpath = coords_path_for(mtx);
    if (std::filesystem::exists(cpath)) opts.coords = read_csv(cpath);
  }
  if (opts.name == GraphOptions{}.name) opts.name = mtx.stem().string();
  return graph_from_weights(read_matrix_market(mtx), opts);
}

void write_graph(const std::filesystem::path& mtx, const Graph& g) {
  write_matrix_market(mtx, g.W(), !g.directed());
  if (g.coords()) write_csv(coords_path_for(mtx), *g.coords());
}

}  // namespace graphsig::io
