#pragma once

#include "specgap/matrix.hpp"

#include <string>

namespace specgap {

enum class FileFormat { MatrixMarket, Json };

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Picks the format from the file extension: .mtx / .mm -> MatrixMarket,
/// anything else -> JSON.
FileFormat format_from_path(const std::string& path);

NonnegMatrix load_matrix(const std::string& path, FileFormat format);
void save_matrix(const NonnegMatrix& m, const std::string& path, FileFormat format);

NonnegMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const NonnegMatrix& m);

NonnegMatrix parse_matrix_market(const std::string& text);
std::string matrix_to_matrix_market(const NonnegMatrix& m);

}  // namespace specgap
