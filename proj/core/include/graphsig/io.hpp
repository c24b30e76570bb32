#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "graphsig/graph.hpp"

namespace graphsig::io {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Reads a Matrix Market coordinate file (real, integer or pattern;
/// general or symmetric). Indices are 1-based on disk.
SparseMatrix read_matrix_market(std::istream& in);
SparseMatrix read_matrix_market(const std::filesystem::path& file);

/// Writes coordinate/real storage. With `symmetric`, only the lower triangle
/// is stored and the header says so.
void write_matrix_market(std::ostream& out, const SparseMatrix& m, bool symmetric = false);
void write_matrix_market(const std::filesystem::path& file, const SparseMatrix& m,
                         bool symmetric = false);

/// Headerless CSV, one row per line. All rows must have the same width.
Eigen::MatrixXd read_csv(std::istream& in);
Eigen::MatrixXd read_csv(const std::filesystem::path& file);
void write_csv(std::ostream& out, const Eigen::MatrixXd& m);
void write_csv(const std::filesystem::path& file, const Eigen::MatrixXd& m);

/// "ring.mtx" -> "ring.coords.csv".
std::filesystem::path coords_path_for(const std::filesystem::path& mtx);

/// Loads weights plus the sibling coordinates file when present.
Graph read_graph(const std::filesystem::path& mtx, const GraphOptions& options = {});
/// Writes weights (symmetric storage for undirected graphs) plus coordinates.
void write_graph(const std::filesystem::path& mtx, const Graph& g);

}  // namespace graphsig::io
