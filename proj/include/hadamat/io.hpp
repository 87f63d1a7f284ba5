#pragma once

#include <string>

#include "hadamat/filtered.hpp"
#include "hadamat/matrix.hpp"

namespace hadamat {

enum class FileFormat { plain, json };

/// 17-significant-digit decimal, enough to round-trip a double exactly.
std::string format_real(double x);

/// Plain format: first line n, then n whitespace-separated rows.
std::string render_matrix_plain(const Matrix& m);
Matrix parse_matrix_plain(const std::string& text);

/// {"n": ..., "rows": [row-major reals]}
std::string render_matrix_json(const Matrix& m);
Matrix parse_matrix_json(const std::string& text);

std::string render_matrix(const Matrix& m, FileFormat fmt);
Matrix parse_matrix(const std::string& text, FileFormat fmt);

/// Representation files are JSON; atom index lists are 1-based.
std::string render_sfm(const SfmRep& rep);
SfmRep parse_sfm(const std::string& text);

std::string render_filtered(const FilteredRep& rep);
FilteredRep parse_filtered(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace hadamat
