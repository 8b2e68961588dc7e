#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "opcurve/errors.hpp"
#include "opcurve/matrix_polynomial.hpp"
#include "opcurve/rational.hpp"
#include "opcurve/rational_matrix.hpp"

namespace opcurve {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational entry_from_json(const Json& value, const std::string& where) {
  if (value.is_number_integer())
    return Rational(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": entry must be an integer or a rational string");
}

}  // namespace detail

// Input document: {"n": <size>, "coefficients": [M0, M1, ...]} where Mi is
// the n x n matrix multiplying lambda^i, entries given as integers or
// "p/q" strings, rows in row-major order. The top coefficient must be a
// nonzero matrix.
inline MatrixPolynomial matrix_polynomial_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("input document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError("field \"n\": missing or not an integer");
  const std::int64_t n_raw = doc["n"].get<std::int64_t>();
  if (n_raw < 1 || n_raw > 16)
    throw ParseError("field \"n\": matrix size must be in 1..16");
  const std::size_t n = static_cast<std::size_t>(n_raw);
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array() ||
      doc["coefficients"].empty())
    throw ParseError("field \"coefficients\": missing or empty");

  std::vector<RationalMatrix> coeff;
  const auto& list = doc["coefficients"];
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "coefficients[" + std::to_string(k) + "]";
    const auto& mat = list[k];
    if (!mat.is_array() || mat.size() != n)
      throw ParseError(where + ": expected " + std::to_string(n) + " rows");
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& row = mat[i];
      if (!row.is_array() || row.size() != n)
        throw ParseError(where + " row " + std::to_string(i) + ": expected " +
                         std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = detail::entry_from_json(
            row[j], where + " entry (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
    }
    coeff.push_back(std::move(m));
  }
  if (coeff.back().is_zero())
    throw ParseError("top coefficient matrix is zero");
  return MatrixPolynomial(n, std::move(coeff));
}

inline MatrixPolynomial parse_input(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_polynomial_from_json(doc);
}

inline MatrixPolynomial parse_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_input(buffer.str());
}

// Canonical re-serialization of an input document (entries as rational
// strings). Parsing this output reproduces the same curve.
inline Json matrix_polynomial_to_json(const MatrixPolynomial& L) {
  Json doc;
  doc["n"] = L.size();
  Json coeffs = Json::array();
  for (const auto& m : L.coefficients()) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < L.size(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < L.size(); ++j)
        row.push_back(to_string(m.at(i, j)));
      rows.push_back(std::move(row));
    }
    coeffs.push_back(std::move(rows));
  }
  doc["coefficients"] = std::move(coeffs);
  return doc;
}

}  // namespace opcurve
