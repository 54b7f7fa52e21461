#include "qpr/cli/output.hpp"

#include <cmath>
#include <cstdio>

namespace qpr::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  bool first = true;
  auto sep = [&] {
    if (!first) out << ',';
    first = false;
  };
  for (const Column& c : table.columns) {
    if (c.type == ColumnType::kComplex) {
      sep();
      out << c.name << "_re";
      sep();
      out << c.name << "_im";
    } else {
      sep();
      out << c.name;
    }
  }
  out << '\n';
  for (const auto& row : table.rows) {
    first = true;
    for (const Cell& cell : row) {
      if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        sep();
        out << *i;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        sep();
        out << format_real(*d);
      } else if (const auto* z = std::get_if<Complex>(&cell)) {
        sep();
        out << format_real(z->real());
        sep();
        out << format_real(z->imag());
      } else {
        sep();
        out << std::get<std::string>(cell);
      }
    }
    out << '\n';
  }
}

namespace {

nlohmann::ordered_json real_json(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

void write_json(const Table& table, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["metadata"] = table.metadata;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& key = table.columns[i].name;
      const Cell& cell = row[i];
      if (const auto* n = std::get_if<std::int64_t>(&cell)) {
        rec[key] = *n;
      } else if (const auto* d = std::get_if<double>(&cell)) {
        rec[key] = real_json(*d);
      } else if (const auto* z = std::get_if<Complex>(&cell)) {
        rec[key] = nlohmann::ordered_json::array({real_json(z->real()), real_json(z->imag())});
      } else {
        rec[key] = std::get<std::string>(cell);
      }
    }
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);
  out << doc.dump(2) << '\n';
}

}  // namespace qpr::cli
