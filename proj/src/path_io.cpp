#include "twistlab/path_io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "twistlab/errors.hpp"

namespace twistlab {

namespace {

using nlohmann::json;

json read_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open " + filename);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ParseError(filename + ": " + e.what());
  }
}

Mat matrix_from_row_major(const std::vector<double>& flat, int dim) {
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = flat[static_cast<size_t>(r * dim + c)];
  return m;
}

}  // namespace

SymplecticPath load_path_json(const std::string& filename) {
  json j = read_json_file(filename);
  try {
    int n = j.at("n").get<int>();
    auto grid = j.at("grid").get<std::vector<double>>();
    std::vector<Mat> samples;
    for (const auto& row : j.at("samples"))
      samples.push_back(
          matrix_from_row_major(row.get<std::vector<double>>(), 2 * n));
    return make_sampled_path(n, std::move(grid), std::move(samples));
  } catch (const json::exception& e) {
    throw ParseError(filename + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(filename + ": " + e.what());
  }
}

SymplecticPath load_path_csv(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open " + filename);
  std::vector<double> grid;
  std::vector<Mat> samples;
  std::string line;
  int dim = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::vector<double> row;
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError(filename + ": bad number '" + cell + "'");
      }
    }
    if (row.size() < 5) throw ParseError(filename + ": too few columns");
    if (dim < 0) {
      double d = std::sqrt(static_cast<double>(row.size() - 1));
      dim = static_cast<int>(std::lround(d));
      if (dim * dim + 1 != static_cast<int>(row.size()) || dim % 2 != 0)
        throw ParseError(filename +
                         ": column count is not 1 + (2n)^2 for integer n");
    } else if (row.size() != static_cast<size_t>(dim * dim + 1)) {
      throw ParseError(filename + ": ragged rows");
    }
    grid.push_back(row[0]);
    samples.push_back(matrix_from_row_major(
        std::vector<double>(row.begin() + 1, row.end()), dim));
  }
  if (grid.size() < 2) throw ParseError(filename + ": need at least 2 rows");
  try {
    return make_sampled_path(dim / 2, std::move(grid), std::move(samples));
  } catch (const std::invalid_argument& e) {
    throw ParseError(filename + ": " + e.what());
  }
}

SymplecticPath load_path(const std::string& filename) {
  auto dot = filename.rfind('.');
  std::string ext = dot == std::string::npos ? "" : filename.substr(dot);
  return ext == ".json" ? load_path_json(filename) : load_path_csv(filename);
}

void save_path_json(const SymplecticPath& path, const std::string& filename) {
  json j;
  j["n"] = path.n;
  j["grid"] = path.grid;
  json rows = json::array();
  for (const Mat& s : path.samples) {
    std::vector<double> flat;
    flat.reserve(static_cast<size_t>(s.size()));
    for (int r = 0; r < s.rows(); ++r)
      for (int c = 0; c < s.cols(); ++c) flat.push_back(s(r, c));
    rows.push_back(flat);
  }
  j["samples"] = std::move(rows);
  std::ofstream out(filename);
  if (!out) throw ParseError("cannot write " + filename);
  out << j.dump() << "\n";
}

FunctionTable load_table_csv(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw ParseError("cannot open " + filename);
  std::vector<double> ts, vs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b))
      throw ParseError(filename + ": expected 't,value' rows");
    try {
      ts.push_back(std::stod(a));
      vs.push_back(std::stod(b));
    } catch (const std::exception&) {
      throw ParseError(filename + ": bad number in '" + line + "'");
    }
  }
  if (ts.size() < 3) throw ParseError(filename + ": need at least 3 rows");
  const double h = ts[1] - ts[0];
  for (size_t i = 1; i < ts.size(); ++i)
    if (std::abs(ts[i] - ts[i - 1] - h) > 1e-9 * (1.0 + std::abs(h)))
      throw ParseError(filename + ": grid must be uniform");
  FunctionTable t;
  t.t0 = ts.front();
  t.t1 = ts.back();
  t.values = std::move(vs);
  return t;
}

void save_table_csv(const FunctionTable& table, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) throw ParseError("cannot write " + filename);
  char buf[80];
  for (size_t i = 0; i < table.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", table.t_at(i),
                  table.values[i]);
    out << buf;
  }
}

}  // namespace twistlab
