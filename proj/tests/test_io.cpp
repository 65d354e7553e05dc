#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "adsgeo/geodesics.hpp"
#include "adsgeo/hamiltonian.hpp"
#include "adsgeo/io.hpp"

using namespace adsgeo;

namespace {

Trajectory sample_flow() {
    IntegratorConfig cfg;
    cfg.s1 = 1.0;
    cfg.step = 0.05;
    const PointAdS e{{1, 0, 0, 0}};
    return integrate({e.coords(), covector_from_pairings(e, 1.0 / 3.0, std::sqrt(2.0), 0.1)}, Distribution::SpanTX,
                     cfg);
}

}  // namespace

TEST(Io, IntegrateHeaderIsExact) {
    std::ostringstream os;
    io::write_csv(os, io::integrate_table(sample_flow()));
    std::string first;
    std::getline(std::istringstream(os.str()) >> std::ws, first);
    EXPECT_EQ(first,
              "s,x1,x2,x3,x4,xi1,xi2,xi3,xi4,H,manifold_residual,horiz_residual,hcoord1,hcoord2");
}

TEST(Io, CsvRoundTrip) {
    const auto t = io::integrate_table(sample_flow());
    std::stringstream ss;
    io::write_csv(ss, t);
    const auto r = io::read_csv(ss);
    ASSERT_EQ(r.columns, t.columns);
    ASSERT_EQ(r.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.columns.size(); ++j)
            EXPECT_LE(std::abs(r.rows[i][j] - t.rows[i][j]), 1e-15 * std::max(1.0, std::abs(t.rows[i][j])));
}

TEST(Io, JsonRoundTripIsBitIdentical) {
    auto t = io::curve_table(sample_flow());
    t.rows[0].back() = std::numeric_limits<double>::quiet_NaN();
    io::Meta m;
    m.command = "integrate";
    m.params = {{"distribution", "tx"}, {"step", 0.05}};
    std::stringstream ss;
    io::write_json(ss, t, m);
    io::Meta back;
    const auto r = io::read_json(ss, &back);
    EXPECT_EQ(back.command, "integrate");
    EXPECT_EQ(back.version, io::kVersion);
    EXPECT_EQ(back.params, m.params);
    ASSERT_EQ(r.columns, t.columns);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        for (std::size_t j = 0; j < t.columns.size(); ++j) {
            if (std::isnan(t.rows[i][j]))
                EXPECT_TRUE(std::isnan(r.rows[i][j]));
            else
                EXPECT_EQ(r.rows[i][j], t.rows[i][j]);
        }
}

TEST(Io, CurveTableListsDiagnosticsInNameOrder) {
    const auto t = io::curve_table(sample_flow());
    const std::vector<std::string> head{"s", "x1", "x2", "x3", "x4", "v1", "v2", "v3", "v4", "manifold_residual"};
    ASSERT_GT(t.columns.size(), head.size());
    EXPECT_TRUE(std::equal(head.begin(), head.end(), t.columns.begin()));
    EXPECT_TRUE(std::is_sorted(t.columns.begin() + head.size(), t.columns.end()));
    EXPECT_EQ(t.column("s"), 0u);
    EXPECT_THROW(t.column("nope"), std::out_of_range);
}

TEST(Io, MissingMomentaBecomeNaN) {
    Trajectory c;
    for (double s : {0.0, 0.5, 1.0}) {
        const ConstGeodesicSpec spec{};
        c.params.push_back(s);
        c.points.push_back(const_geodesic(spec, s));
        c.velocities.push_back(const_geodesic_velocity(spec, s));
    }
    const auto t = io::integrate_table(c);
    EXPECT_TRUE(std::isnan(t.rows[1][t.column("xi1")]));
    EXPECT_EQ(t.rows[1][t.column("s")], 0.5);
}

TEST(Io, FormatsAndMalformedInput) {
    EXPECT_EQ(io::format_from_string("csv"), io::Format::Csv);
    EXPECT_EQ(io::format_from_string("json"), io::Format::Json);
    EXPECT_THROW(io::format_from_string("xml"), std::invalid_argument);
    std::istringstream bad("a,b\n1,2,3\n");
    EXPECT_ANY_THROW(io::read_csv(bad));
    std::istringstream notjson("{");
    EXPECT_ANY_THROW(io::read_json(notjson));
}
