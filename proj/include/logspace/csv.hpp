#pragma once

#include <complex>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "logspace/measure.hpp"
#include "logspace/modular.hpp"

namespace logspace {

struct CsvError : std::runtime_error {
  CsvError(const std::string& path, std::size_t line, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what) {}
};

namespace detail {

inline std::vector<std::string> csv_fields(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

inline double csv_number(const std::string& s, const std::string& path, std::size_t line) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw CsvError(path, line, "expected a number, got '" + s + "'");
  }
  if (used != s.size()) throw CsvError(path, line, "trailing characters in '" + s + "'");
  return x;
}

}  // namespace detail

// Measure file: one atom per row, "label,mass".  Labels that parse as
// numbers double as atom coordinates; otherwise the row index is used.
inline MeasurePtr load_measure_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure file '" + path + "'");
  std::vector<double> points, masses;
  std::vector<std::string> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = detail::csv_fields(line);
    if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
    if (lineno == 1 && fields.size() == 2 && fields[0] == "label" && fields[1] == "mass") {
      continue;  // optional header
    }
    if (fields.size() != 2) {
      throw CsvError(path, lineno, "expected 2 fields (label,mass), got " +
                                       std::to_string(fields.size()));
    }
    const double mass = detail::csv_number(fields[1], path, lineno);
    if (!(mass > 0.0)) throw CsvError(path, lineno, "mass must be strictly positive");
    double point = static_cast<double>(points.size());
    try {
      std::size_t used = 0;
      const double parsed = std::stod(fields[0], &used);
      if (used == fields[0].size()) point = parsed;
    } catch (const std::exception&) {
      // non-numeric label; keep the index coordinate
    }
    labels.push_back(fields[0]);
    points.push_back(point);
    masses.push_back(mass);
  }
  if (masses.empty()) throw std::runtime_error("measure file '" + path + "' has no atoms");
  return make_measure(std::move(points), std::move(masses), std::move(labels));
}

// Function file: one sample per row, "index,re,im", indices 0..N-1 in order.
// When no measure is supplied the samples live on the uniform probability
// measure over their row count.
inline SampledFunction load_function_csv(const std::string& path, MeasurePtr measure = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function file '" + path + "'");
  std::vector<std::complex<double>> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto fields = detail::csv_fields(line);
    if (fields.empty() || (fields.size() == 1 && fields[0].empty())) continue;
    if (lineno == 1 && fields.size() == 3 && fields[0] == "index" && fields[1] == "re" &&
        fields[2] == "im") {
      continue;
    }
    if (fields.size() != 3) {
      throw CsvError(path, lineno, "expected 3 fields (index,re,im), got " +
                                       std::to_string(fields.size()));
    }
    const double idx = detail::csv_number(fields[0], path, lineno);
    if (idx != static_cast<double>(values.size())) {
      throw CsvError(path, lineno, "expected index " + std::to_string(values.size()) +
                                       ", got '" + fields[0] + "'");
    }
    values.emplace_back(detail::csv_number(fields[1], path, lineno),
                        detail::csv_number(fields[2], path, lineno));
  }
  if (values.empty()) throw std::runtime_error("function file '" + path + "' has no samples");
  if (!measure) {
    std::vector<double> points(values.size());
    for (std::size_t k = 0; k < points.size(); ++k) points[k] = static_cast<double>(k);
    measure = make_measure(std::move(points), std::vector<double>(values.size(), 1.0 / values.size()));
  } else if (measure->size() != values.size()) {
    throw std::runtime_error("function file '" + path + "' has " +
                             std::to_string(values.size()) + " samples but the measure has " +
                             std::to_string(measure->size()) + " atoms");
  }
  return SampledFunction(std::move(measure), std::move(values));
}

}  // namespace logspace
