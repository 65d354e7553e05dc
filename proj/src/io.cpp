#include "adsgeo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace adsgeo::io {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double diag_at(const Trajectory& t, const char* name, std::size_t i) {
    const auto it = t.diagnostics.find(name);
    return it != t.diagnostics.end() && i < it->second.size() ? it->second[i] : kNaN;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

const std::vector<std::string>& integrate_columns() {
    static const std::vector<std::string> cols{"s",   "x1",   "x2",   "x3",   "x4",
                                               "xi1", "xi2",  "xi3",  "xi4",  "H",
                                               "manifold_residual", "horiz_residual", "hcoord1", "hcoord2"};
    return cols;
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw std::out_of_range("no column '" + name + "'");
}

Format format_from_string(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + s + "' (expected csv or json)");
}

Table integrate_table(const Trajectory& t) {
    Table tab{integrate_columns(), {}};
    tab.rows.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& x = t.points[i];
        std::vector<double> r{t.params[i], x[0], x[1], x[2], x[3]};
        for (int k = 0; k < 4; ++k) r.push_back(i < t.momenta.size() ? t.momenta[i][k] : kNaN);
        r.push_back(diag_at(t, "H", i));
        r.push_back(manifold_residual(x.coords()));
        r.push_back(diag_at(t, "horiz_residual", i));
        r.push_back(diag_at(t, "hcoord1", i));
        r.push_back(diag_at(t, "hcoord2", i));
        tab.rows.push_back(std::move(r));
    }
    return tab;
}

Table curve_table(const Trajectory& t) {
    Table tab{{"s", "x1", "x2", "x3", "x4", "v1", "v2", "v3", "v4", "manifold_residual"}, {}};
    for (const auto& [name, _] : t.diagnostics)
        if (name != "manifold_residual") tab.columns.push_back(name);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& x = t.points[i];
        std::vector<double> r{t.params[i], x[0], x[1], x[2], x[3]};
        for (int k = 0; k < 4; ++k) r.push_back(i < t.velocities.size() ? t.velocities[i][k] : kNaN);
        r.push_back(manifold_residual(x.coords()));
        for (const auto& [name, v] : t.diagnostics)
            if (name != "manifold_residual") r.push_back(i < v.size() ? v[i] : kNaN);
        tab.rows.push_back(std::move(r));
    }
    return tab;
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << fmt17(r[j]);
        os << '\n';
    }
}

Table read_csv(std::istream& is) {
    Table t;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("csv: missing header");
    t.columns = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.columns.size()) throw std::runtime_error("csv: ragged row");
        std::vector<double> r;
        r.reserve(cells.size());
        for (const auto& c : cells) r.push_back(std::strtod(c.c_str(), nullptr));
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_json(std::ostream& os, const Table& t, const Meta& meta) {
    nlohmann::ordered_json j;
    j["meta"] = {{"command", meta.command}, {"params", meta.params}, {"version", meta.version}};
    auto samples = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (std::size_t k = 0; k < t.columns.size(); ++k) {
            if (std::isfinite(r[k]))
                row[t.columns[k]] = r[k];
            else
                row[t.columns[k]] = nullptr;
        }
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    os << j.dump() << '\n';
}

Table read_json(std::istream& is, Meta* meta) {
    const auto j = nlohmann::ordered_json::parse(is);
    if (meta) {
        meta->command = j.at("meta").at("command").get<std::string>();
        meta->params = nlohmann::json::parse(j.at("meta").at("params").dump());
        meta->version = j.at("meta").at("version").get<std::string>();
    }
    Table t;
    const auto& samples = j.at("samples");
    if (!samples.empty())
        for (const auto& [k, _] : samples.front().items()) t.columns.push_back(k);
    for (const auto& s : samples) {
        std::vector<double> r;
        for (const auto& c : t.columns) {
            const auto& v = s.at(c);
            r.push_back(v.is_null() ? kNaN : v.get<double>());
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_file(const std::string& path, const Table& t, const Meta& meta, Format f) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (f == Format::Csv)
        write_csv(os, t);
    else
        write_json(os, t, meta);
}

}  // namespace adsgeo::io
