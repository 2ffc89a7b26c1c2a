#pragma once

#include <Eigen/Dense>

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "core.hpp"

namespace optsample::io {

/// 17 significant digits: every double survives a text round trip exactly.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
}

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// `index,x1[,x2...]` header, one point per row.
inline std::string points_csv(const PointSet& points) {
  std::string s = "index";
  for (Eigen::Index i = 0; i < points.cols(); ++i) s += ",x" + std::to_string(i + 1);
  s += '\n';
  for (Eigen::Index j = 0; j < points.rows(); ++j) {
    s += std::to_string(j);
    for (Eigen::Index i = 0; i < points.cols(); ++i) s += ',' + format_double(points(j, i));
    s += '\n';
  }
  return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& s) {
  const char* begin = s.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  // subnormal underflow is fine; overflow and empty fields are not
  if (end == begin || (errno == ERANGE && std::isinf(v))) throw InvalidArgument("not a number: '" + s + "'");
  while (*end == ' ' || *end == '\r' || *end == '\t') ++end;
  if (*end != '\0' || std::isspace(static_cast<unsigned char>(s.front()))) throw InvalidArgument("not a number: '" + s + "'");
  return v;
}

/**
 * Reads points from CSV text. A first line that does not parse as numbers is taken as a
 * header; if the header's first column is `index`, that column is dropped from every row.
 */
inline PointSet parse_points_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  bool drop_first = false;
  bool first_line = true;
  for (std::string line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (first_line) {
      first_line = false;
      try {
        for (const auto& f : fields) parse_double(f);
      } catch (const InvalidArgument&) {
        drop_first = !fields.empty() && fields.front() == "index";
        continue;
      }
    }
    std::vector<double> row;
    for (std::size_t k = drop_first ? 1 : 0; k < fields.size(); ++k) row.push_back(parse_double(fields[k]));
    if (!rows.empty() && row.size() != rows.front().size()) throw InvalidArgument("ragged point CSV");
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw InvalidArgument("point CSV contains no points");
  PointSet p(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < rows[j].size(); ++i) p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = rows[j][i];
  return p;
}

}  // namespace optsample::io
