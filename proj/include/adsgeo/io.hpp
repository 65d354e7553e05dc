#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "adsgeo/horizontality.hpp"

namespace adsgeo::io {

inline constexpr const char* kVersion = "1.0.0";

/// Column order of the integrate output.
const std::vector<std::string>& integrate_columns();

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column(const std::string& name) const;  ///< throws std::out_of_range
};

struct Meta {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    std::string version = kVersion;
};

enum class Format { Csv, Json };
Format format_from_string(const std::string& s);  ///< "csv" | "json"; std::invalid_argument otherwise

/// Rows: s, x1..x4, xi1..xi4, H, manifold_residual, horiz_residual, hcoord1, hcoord2.
/// Missing momenta or diagnostics are written as NaN.
Table integrate_table(const Trajectory& t);

/// Rows: s, x1..x4, v1..v4, manifold_residual, then the other diagnostic series in name order.
Table curve_table(const Trajectory& t);

void write_csv(std::ostream& os, const Table& t);
Table read_csv(std::istream& is);

/// Object {"meta": {command, params, version}, "samples": [{col: value, ...}, ...]}.
void write_json(std::ostream& os, const Table& t, const Meta& meta);
Table read_json(std::istream& is, Meta* meta = nullptr);

void write_file(const std::string& path, const Table& t, const Meta& meta, Format f);

}  // namespace adsgeo::io
