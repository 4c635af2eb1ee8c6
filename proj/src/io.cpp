#include "specgap/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace specgap {

using nlohmann::json;

FileFormat format_from_path(const std::string& path) {
  auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
  if (ext == "mtx" || ext == "mm") return FileFormat::MatrixMarket;
  return FileFormat::Json;
}

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    Rational num = rational_from_json(j[0]);
    Rational den = rational_from_json(j[1]);
    if (den == 0) throw FormatError("rational entry with zero denominator");
    return num / den;
  }
  throw FormatError("malformed rational entry");
}

json rational_to_json(const Rational& q) {
  auto num = boost::multiprecision::numerator(q);
  auto den = boost::multiprecision::denominator(q);
  json pair = json::array();
  auto emit = [](const boost::multiprecision::cpp_int& v) -> json {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return static_cast<long long>(v);
    return v.str();
  };
  pair.push_back(emit(num));
  pair.push_back(emit(den));
  return pair;
}

}  // namespace

NonnegMatrix parse_matrix_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("json parse error: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("rows")) throw FormatError("json matrix needs n and rows");
  const auto n = j["n"].get<Eigen::Index>();
  if (n < 1) throw FormatError("json matrix dimension must be >= 1");
  const std::string mode = j.value("mode", "float");
  const auto& rows = j["rows"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n)
    throw FormatError("json rows count does not match n");

  if (mode == "rational") {
    RationalMatrix m(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != n)
        throw FormatError("json row " + std::to_string(i) + " has wrong length");
      for (Eigen::Index k = 0; k < n; ++k)
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) =
            rational_from_json(row[static_cast<std::size_t>(k)]);
    }
    return NonnegMatrix::from_rational(std::move(m));
  }
  if (mode != "float") throw FormatError("unknown arithmetic mode: " + mode);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw FormatError("json row " + std::to_string(i) + " has wrong length");
    for (Eigen::Index k = 0; k < n; ++k) m(i, k) = row[static_cast<std::size_t>(k)].get<double>();
  }
  return NonnegMatrix::from_dense(std::move(m));
}

std::string matrix_to_json(const NonnegMatrix& m) {
  json j;
  j["n"] = m.n();
  if (m.mode == ArithmeticMode::ExactRational && m.exact) {
    j["mode"] = "rational";
    json rows = json::array();
    const auto& q = *m.exact;
    for (std::size_t i = 0; i < q.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < q.size(); ++k) row.push_back(rational_to_json(q(i, k)));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  } else {
    j["mode"] = "float";
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.n(); ++i) {
      json row = json::array();
      for (Eigen::Index k = 0; k < m.n(); ++k) row.push_back(m.entries(i, k));
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
  }
  return j.dump();
}

NonnegMatrix parse_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw FormatError("matrix market, line " + std::to_string(lineno) + ": " + msg);
  };

  if (!std::getline(in, line)) fail("empty file");
  ++lineno;
  std::istringstream header(line);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || object != "matrix") fail("missing %%MatrixMarket banner");
  if (format != "array" && format != "coordinate") fail("unsupported format: " + format);
  if (field != "real" && field != "integer") fail("unsupported field: " + field);
  if (symmetry != "general") fail("only general symmetry supported");

  auto next_data_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] != '%') return true;
    }
    return false;
  };

  if (!next_data_line()) fail("missing size line");
  std::istringstream size_line(line);
  Eigen::Index rows = 0, cols = 0;
  long long nnz = 0;
  if (format == "coordinate") {
    if (!(size_line >> rows >> cols >> nnz)) fail("bad coordinate size line");
  } else {
    if (!(size_line >> rows >> cols)) fail("bad array size line");
  }
  if (rows != cols || rows < 1) fail("matrix must be square and nonempty");

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  if (format == "coordinate") {
    for (long long k = 0; k < nnz; ++k) {
      if (!next_data_line()) fail("fewer entries than declared");
      std::istringstream entry(line);
      Eigen::Index i = 0, j = 0;
      double value = 0;
      if (!(entry >> i >> j >> value)) fail("bad coordinate entry");
      if (i < 1 || i > rows || j < 1 || j > cols) fail("entry index out of range");
      m(i - 1, j - 1) = value;
    }
  } else {
    // Array format is column-major per the Matrix Market spec.
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (Eigen::Index i = 0; i < rows; ++i) {
        if (!next_data_line()) fail("fewer entries than declared");
        std::istringstream entry(line);
        double value = 0;
        if (!(entry >> value)) fail("bad array entry");
        m(i, j) = value;
      }
    }
  }
  return NonnegMatrix::from_dense(std::move(m));
}

std::string matrix_to_matrix_market(const NonnegMatrix& m) {
  std::ostringstream out;
  out.precision(17);
  out << "%%MatrixMarket matrix array real general\n";
  out << m.n() << " " << m.n() << "\n";
  for (Eigen::Index j = 0; j < m.n(); ++j)
    for (Eigen::Index i = 0; i < m.n(); ++i) out << m.entries(i, j) << "\n";
  return out.str();
}

NonnegMatrix load_matrix(const std::string& path, FileFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return format == FileFormat::Json ? parse_matrix_json(buf.str())
                                    : parse_matrix_market(buf.str());
}

void save_matrix(const NonnegMatrix& m, const std::string& path, FileFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << (format == FileFormat::Json ? matrix_to_json(m) : matrix_to_matrix_market(m));
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace specgap
