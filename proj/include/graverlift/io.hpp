#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "graverlift/errors.hpp"
#include "graverlift/exact.hpp"
#include "graverlift/lift.hpp"
#include "graverlift/nfold.hpp"
#include "graverlift/relation.hpp"

namespace graverlift {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Plain matrix text format: first data line "rows cols", then the rows as
// whitespace-separated integers. Lines starting with '#' are comments.

inline IntMatrix read_matrix(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  if (tokens.size() < 2) throw ParseError("matrix header missing");

  auto parse_count = [](const std::string& t) -> std::size_t {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(t, &pos);
      if (pos != t.size() || v < 0) throw ParseError("bad count: " + t);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError("bad count: " + t);
    }
  };
  const std::size_t rows = parse_count(tokens[0]);
  const std::size_t cols = parse_count(tokens[1]);
  if (tokens.size() != 2 + rows * cols)
    throw ParseError("expected " + std::to_string(rows * cols) +
                     " entries, found " + std::to_string(tokens.size() - 2));
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    try {
      m(i / cols, i % cols) = Int(tokens[2 + i]);
    } catch (const std::exception&) {
      throw ParseError("bad integer: " + tokens[2 + i]);
    }
  }
  return m;
}

inline IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_matrix(in);
}

inline void write_matrix(std::ostream& out, const IntMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON. Integers in documents are JSON numbers; values outside the signed
// 64-bit range are refused rather than rounded.

inline json int_to_json(const Int& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max())
    throw ParseError("integer too large for the JSON document: " + v.str());
  return json(static_cast<std::int64_t>(v));
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  throw ParseError("expected an integer, found " + j.dump());
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array");
  std::vector<IntVector> rows;
  for (const json& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    IntVector r;
    for (const json& e : row) r.push_back(int_from_json(e));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

inline json brick_vector_to_json(const BrickVector& x) {
  json rows = json::array();
  for (std::size_t i = 0; i < x.copies(); ++i) {
    json row = json::array();
    for (const Int& e : x.brick(i)) row.push_back(int_to_json(e));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json relation_to_json(const PrimitiveRelation& rel) {
  json doc;
  doc["base_matrix"] = matrix_to_json(rel.base_matrix);
  doc["copies"] = rel.copies;
  json elements = json::array();
  for (const BrickVector& e : rel.elements)
    elements.push_back(brick_vector_to_json(e));
  doc["elements"] = std::move(elements);
  json coeffs = json::array();
  for (const Int& h : rel.coefficients) coeffs.push_back(int_to_json(h));
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

inline PrimitiveRelation relation_from_json(const json& doc) {
  for (const char* key : {"base_matrix", "copies", "elements", "coefficients"})
    if (!doc.contains(key))
      throw ParseError(std::string("relation document misses \"") + key + "\"");

  PrimitiveRelation rel;
  rel.base_matrix = matrix_from_json(doc["base_matrix"]);
  if (!doc["copies"].is_number_unsigned() && !doc["copies"].is_number_integer())
    throw ParseError("\"copies\" must be an integer");
  const long long copies = doc["copies"].get<long long>();
  if (copies < 1) throw ParseError("\"copies\" must be positive");
  rel.copies = static_cast<std::size_t>(copies);

  const std::size_t c = rel.base_matrix.cols();
  for (const json& el : doc["elements"]) {
    if (!el.is_array() || el.size() != rel.copies)
      throw ParseError("element must have one row per copy");
    std::vector<IntVector> bricks;
    for (const json& row : el) {
      if (!row.is_array() || row.size() != c)
        throw ParseError("element row length must match the base column count");
      IntVector b;
      for (const json& e : row) b.push_back(int_from_json(e));
      bricks.push_back(std::move(b));
    }
    rel.elements.push_back(BrickVector::from_bricks(bricks));
  }
  for (const json& h : doc["coefficients"])
    rel.coefficients.push_back(int_from_json(h));
  if (rel.elements.empty() || rel.elements.size() != rel.coefficients.size())
    throw ParseError("element and coefficient counts differ");
  return rel;
}

inline PrimitiveRelation read_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return relation_from_json(doc);
}

inline void write_relation_file(const std::string& path,
                                const PrimitiveRelation& rel) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << relation_to_json(rel).dump(2) << '\n';
}

inline json bound_to_json(const BoundResult& b) {
  json doc;
  doc["formula"] = formula_id(b.formula);
  json params = json::object();
  for (const auto& [name, value] : b.params) params[name] = int_to_json(value);
  doc["params"] = std::move(params);
  doc["value"] = b.value.str();  // decimal string, unbounded
  return doc;
}

// ---------------------------------------------------------------------------
// Human-readable output.

/// Prints the table view, one brick per line.
inline void print_table(std::ostream& out, const BrickVector& x,
                        const std::string& indent = "  ") {
  for (std::size_t i = 0; i < x.copies(); ++i)
    out << indent << to_string(x.brick(i)) << '\n';
}

inline void print_relation(std::ostream& out, const PrimitiveRelation& rel) {
  out << rel.size() << " elements on " << rel.copies << " copies, coefficient sum "
      << rel.coefficient_sum_abs() << '\n';
  for (std::size_t i = 0; i < rel.size(); ++i) {
    out << "coefficient " << rel.coefficients[i] << ":\n";
    print_table(out, rel.elements[i]);
  }
}

inline void print_report(std::ostream& out, const VerificationReport& rep) {
  auto line = [&](const char* name, CheckResult r) {
    if (r != CheckResult::not_run)
      out << name << ": " << to_string(r) << '\n';
  };
  line("sum-zero", rep.sum_zero);
  line("coefficients-nonzero", rep.coefficients_nonzero);
  line("coefficients-coprime", rep.coefficients_coprime);
  line("kernel-dim-1", rep.kernel_dim_one);
  for (std::size_t i = 0; i < rep.membership.size(); ++i)
    out << "membership[" << i << "]: " << to_string(rep.membership[i]) << '\n';
}

inline json report_to_json(const VerificationReport& rep) {
  auto put = [](json& doc, const char* name, CheckResult r) {
    if (r != CheckResult::not_run) doc[name] = to_string(r);
  };
  json doc;
  put(doc, "sum_zero", rep.sum_zero);
  put(doc, "coefficients_nonzero", rep.coefficients_nonzero);
  put(doc, "coefficients_coprime", rep.coefficients_coprime);
  put(doc, "kernel_dim_one", rep.kernel_dim_one);
  if (!rep.membership.empty()) {
    json ms = json::array();
    for (CheckResult r : rep.membership) ms.push_back(to_string(r));
    doc["membership"] = std::move(ms);
  }
  doc["overall"] = rep.overall();
  return doc;
}

}  // namespace graverlift
