#pragma once

#include <map>
#include <string>

#include "posmap/block_matrix.hpp"
#include "posmap/detector.hpp"

namespace posmap {

// On-disk interchange format: a block matrix with factor dimensions (m, n),
// entries stored row-major as [re, im] pairs. kind is "state" for density
// matrices, "block" for general block matrices and "map-choi" for Choi
// matrices of maps M_m -> M_n.
struct MatrixFile {
  Index m = 0;
  Index n = 0;
  std::string kind;  // "state" | "block" | "map-choi"
  Matrix data;       // (m n) x (m n)
  std::map<std::string, std::string> metadata;  // family, params, seed

  BlockMatrix to_block() const { return BlockMatrix(m, n, data); }
};

// Doubles are printed with up to 17 significant digits so that write/read is
// the identity on every finite value.
std::string format_double(double v);

std::string to_json(const MatrixFile& f);
MatrixFile matrix_file_from_json(const std::string& text);  // throws BadFile

void write_matrix_file(const std::string& path, const MatrixFile& f);
MatrixFile read_matrix_file(const std::string& path);

// Bipartite vectors (purifications) use the same [re, im] encoding with
// kind "vector" and data of length m^2.
std::string vector_to_json(const Vector& x, Index m);
Vector vector_from_json(const std::string& text);
void write_vector_file(const std::string& path, const Vector& x, Index m);
Vector read_vector_file(const std::string& path);

// Sweep CSV: header `param,value,choi_min_eig,seesaw_min,cp,positive,ppt`,
// one row per grid point, empty cells for unrequested checks.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_from_csv(const std::string& text);

}  // namespace posmap
