#include "laddermat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "laddermat/errors.hpp"

namespace laddermat {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
}

std::size_t get_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw parse_error(std::string("missing or non-positive-integer field \"") + key + "\"");
  }
  std::size_t v = j[key].get<std::size_t>();
  if (v == 0) throw parse_error(std::string("field \"") + key + "\" must be positive");
  return v;
}

Integer parse_big_integer(const json& j, const char* what) {
  if (!j.is_string()) {
    throw parse_error(std::string(what) + " must be a decimal string");
  }
  try {
    return Integer(j.get<std::string>());
  } catch (const std::exception&) {
    throw parse_error(std::string(what) + " is not a valid decimal integer: \"" +
                      j.get<std::string>() + "\"");
  }
}

std::vector<Cell> parse_cell_list(const json& j, const char* key) {
  std::vector<Cell> cells;
  for (const json& entry : j) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() ||
        !entry[1].is_number_unsigned() || entry[0].get<std::size_t>() == 0 ||
        entry[1].get<std::size_t>() == 0) {
      throw parse_error(std::string("every \"") + key +
                        "\" entry must be a pair of positive integers");
    }
    cells.push_back({entry[0].get<std::size_t>(), entry[1].get<std::size_t>()});
  }
  return cells;
}

}  // namespace

std::string matrix_to_json(const RationalMatrix& X) {
  json entries = json::array();
  for (const Rational& v : X.entries()) {
    entries.push_back({numerator_of(v).str(), denominator_of(v).str()});
  }
  json j{{"rows", X.rows()}, {"cols", X.cols()}, {"entries", std::move(entries)}};
  return j.dump();
}

RationalMatrix matrix_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw parse_error("matrix JSON must be an object");
  const std::size_t rows = get_size(j, "rows");
  const std::size_t cols = get_size(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw parse_error("missing or non-array field \"entries\"");
  }
  const json& entries = j["entries"];
  if (entries.size() != rows * cols) {
    throw parse_error("\"entries\" must hold rows*cols = " + std::to_string(rows * cols) +
                      " pairs, got " + std::to_string(entries.size()));
  }
  std::vector<Rational> values;
  values.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& pair = entries[k];
    if (!pair.is_array() || pair.size() != 2) {
      throw parse_error("entry " + std::to_string(k) + " must be a [num, den] string pair");
    }
    Integer num = parse_big_integer(pair[0], "numerator");
    Integer den = parse_big_integer(pair[1], "denominator");
    if (den == 0) {
      throw parse_error("entry " + std::to_string(k) + " has denominator zero");
    }
    values.emplace_back(num, den);
  }
  return RationalMatrix(rows, cols, std::move(values));
}

std::string ladder_to_json(const Ladder& L) {
  json upper = json::array(), lower = json::array();
  for (Cell c : L.upper_corners()) upper.push_back({c.i, c.j});
  for (Cell c : L.lower_corners()) lower.push_back({c.i, c.j});
  json j{{"m", L.m()}, {"n", L.n()}, {"upper", std::move(upper)}, {"lower", std::move(lower)}};
  return j.dump();
}

Ladder ladder_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw parse_error("ladder JSON must be an object");
  if (j.contains("cells")) {
    if (!j["cells"].is_array()) throw parse_error("\"cells\" must be an array");
    std::vector<Cell> cells = parse_cell_list(j["cells"], "cells");
    if (cells.empty()) throw parse_error("\"cells\" must not be empty");
    std::size_t m = 0, n = 0;
    for (Cell c : cells) {
      m = std::max(m, c.i);
      n = std::max(n, c.j);
    }
    if (j.contains("m")) m = get_size(j, "m");
    if (j.contains("n")) n = get_size(j, "n");
    return Ladder::from_cells(m, n, cells);
  }
  const std::size_t m = get_size(j, "m");
  const std::size_t n = get_size(j, "n");
  if (!j.contains("upper") || !j["upper"].is_array() || !j.contains("lower") ||
      !j["lower"].is_array()) {
    throw parse_error("ladder JSON needs \"upper\" and \"lower\" corner arrays (or \"cells\")");
  }
  return Ladder::from_corners(m, n, parse_cell_list(j["upper"], "upper"),
                              parse_cell_list(j["lower"], "lower"));
}

std::string matrix_to_csv(const RationalMatrix& X) {
  std::ostringstream out;
  for (std::size_t i = 1; i <= X.rows(); ++i) {
    for (std::size_t j = 1; j <= X.cols(); ++j) {
      if (j > 1) out << ',';
      out << to_string(X.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

RationalMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    std::size_t col = 0;
    while (std::getline(cells, cell, ',')) {
      ++col;
      const auto first = cell.find_first_not_of(" \t");
      const auto last = cell.find_last_not_of(" \t");
      if (first == std::string::npos) {
        throw parse_error("line " + std::to_string(lineno) + ", cell " + std::to_string(col) +
                          ": empty cell");
      }
      try {
        row.push_back(parse_rational(cell.substr(first, last - first + 1)));
      } catch (const parse_error& e) {
        throw parse_error("line " + std::to_string(lineno) + ", cell " + std::to_string(col) +
                          ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw parse_error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(rows.front().size()) + " cells, got " +
                        std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("CSV input holds no matrix rows");
  std::vector<Rational> values;
  values.reserve(rows.size() * rows.front().size());
  for (auto& row : rows) {
    for (Rational& v : row) values.push_back(std::move(v));
  }
  return RationalMatrix(rows.size(), rows.front().size(), std::move(values));
}

namespace {

bool has_extension(const std::string& path, const char* ext) {
  const std::string suffix = std::string(".") + ext;
  return path.size() > suffix.size() &&
         path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  if (!out) throw io_error("failed writing " + path);
}

}  // namespace

RationalMatrix load_matrix(const std::string& path) {
  if (has_extension(path, "json")) return matrix_from_json(read_file(path));
  if (has_extension(path, "csv")) return matrix_from_csv(read_file(path));
  throw argument_error("unsupported matrix file extension (want .json or .csv): " + path);
}

void save_matrix(const std::string& path, const RationalMatrix& X) {
  if (has_extension(path, "json")) {
    write_file(path, matrix_to_json(X) + "\n");
  } else if (has_extension(path, "csv")) {
    write_file(path, matrix_to_csv(X));
  } else {
    throw argument_error("unsupported matrix file extension (want .json or .csv): " + path);
  }
}

Ladder load_ladder(const std::string& path) {
  if (has_extension(path, "json")) return ladder_from_json(read_file(path));
  throw argument_error("unsupported ladder file extension (want .json): " + path);
}

void save_ladder(const std::string& path, const Ladder& L) {
  if (has_extension(path, "json")) {
    write_file(path, ladder_to_json(L) + "\n");
  } else {
    throw argument_error("unsupported ladder file extension (want .json): " + path);
  }
}

}  // namespace laddermat
