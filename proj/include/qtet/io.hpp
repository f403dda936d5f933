#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qtet/report.hpp"
#include "qtet/scalar.hpp"
#include "qtet/tetra.hpp"

namespace qtet {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline nlohmann::json matrix_to_json(const Matrix<Rat>& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix<Rat> matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw io_error("matrix must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw io_error("matrix row must be a non-empty array");
  int cols = static_cast<int>(j[0].size());
  Matrix<Rat> m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw io_error("matrix rows must all have the same length");
    for (int c = 0; c < cols; ++c) {
      if (!j[i][c].is_string()) throw io_error("matrix entries must be scalar strings");
      try {
        m(i, c) = parse_rat(j[i][c].get<std::string>());
      } catch (const std::exception& e) {
        throw io_error(std::string("bad scalar '") + j[i][c].get<std::string>() + "': " + e.what());
      }
    }
  }
  return m;
}

struct ModuleFile {
  Rat q;
  GenAssignment<Rat> assignment;
};

inline nlohmann::json module_to_json(const Rat& q, const GenAssignment<Rat>& a) {
  nlohmann::json gens;
  for (const auto& g : all_generators()) gens[g.name()] = matrix_to_json(a.at(g));
  return {{"q", to_string(q)}, {"dim", a.dim()}, {"generators", std::move(gens)}};
}

inline ModuleFile module_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("dim") || !j.contains("generators"))
    throw io_error("module file needs keys q, dim, generators");
  if (!j["q"].is_string()) throw io_error("q must be a scalar string");
  Rat q;
  try {
    q = parse_rat(j["q"].get<std::string>());
  } catch (const std::exception& e) {
    throw io_error(std::string("bad q: ") + e.what());
  }
  if (!j["dim"].is_number_integer()) throw io_error("dim must be an integer");
  int n = j["dim"].get<int>();
  if (n < 1) throw io_error("dim must be positive");
  GenAssignment<Rat> a(n);
  for (const auto& g : all_generators()) {
    if (!j["generators"].contains(g.name())) throw io_error("missing generator " + g.name());
    Matrix<Rat> m = matrix_from_json(j["generators"][g.name()]);
    if (m.rows() != n || m.cols() != n) throw io_error("generator " + g.name() + " is not dim x dim");
    a.set(g, m);
  }
  return {std::move(q), std::move(a)};
}

struct PairFile {
  Rat q;
  Matrix<Rat> first;
  Matrix<Rat> second;
  bool tridiagonal;  // true when keyed A/Astar, false when K/Kstar
};

inline nlohmann::json pair_to_json(const Rat& q, const Matrix<Rat>& k, const Matrix<Rat>& kstar,
                                   bool tridiagonal) {
  nlohmann::json j = {{"q", to_string(q)}, {"dim", k.rows()}};
  j[tridiagonal ? "A" : "K"] = matrix_to_json(k);
  j[tridiagonal ? "Astar" : "Kstar"] = matrix_to_json(kstar);
  return j;
}

inline PairFile pair_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("dim")) throw io_error("pair file needs keys q, dim");
  bool td = j.contains("A") && j.contains("Astar");
  bool inv = j.contains("K") && j.contains("Kstar");
  if (td == inv) throw io_error("pair file needs either K/Kstar or A/Astar");
  if (!j["q"].is_string()) throw io_error("q must be a scalar string");
  Rat q;
  try {
    q = parse_rat(j["q"].get<std::string>());
  } catch (const std::exception& e) {
    throw io_error(std::string("bad q: ") + e.what());
  }
  if (!j["dim"].is_number_integer()) throw io_error("dim must be an integer");
  int n = j["dim"].get<int>();
  Matrix<Rat> a = matrix_from_json(j[td ? "A" : "K"]);
  Matrix<Rat> b = matrix_from_json(j[td ? "Astar" : "Kstar"]);
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n)
    throw io_error("pair matrices must be dim x dim");
  return {std::move(q), std::move(a), std::move(b), td};
}

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json item = {{"check", e.check}, {"location", e.location}};
    if (!e.detail.empty()) item["residual"] = e.detail;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace qtet
