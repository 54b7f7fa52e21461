#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qpr/scaled_value.hpp"

namespace qpr::cli {

enum class ColumnType { kInt, kReal, kComplex, kText };

struct Column {
  std::string name;
  ColumnType type;
};

using Cell = std::variant<std::int64_t, double, Complex, std::string>;

/// One command's result: a fixed schema plus rows in emission order.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

/// Header line, then one line per row. Complex columns split into _re/_im;
/// reals use 17 significant digits.
void write_csv(const Table& table, std::ostream& out);

/// {"metadata": ..., "records": [...]} with complex values as [re, im] and
/// non-finite reals as null.
void write_json(const Table& table, std::ostream& out);

std::string format_real(double v);

}  // namespace qpr::cli
