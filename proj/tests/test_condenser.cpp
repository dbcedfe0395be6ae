#include <algorithm>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "robincap/closed_forms.hpp"
#include "robincap/condenser.hpp"
#include "robincap/domain_io.hpp"
#include "robincap/field_export.hpp"
#include "robincap/study.hpp"
#include "support.hpp"

using namespace robincap;

namespace {

Condenser radial(double r, double t = 1.0) {
    Condenser c;
    c.marked = resolve_domain("disk");
    c.plates = {{Complex(0.0), 1.0, 1.0, t}};
    c.r = r;
    return c;
}

Condenser two_plate(double r) {
    Condenser c;
    c.marked = resolve_domain("disk");
    c.plates = {{Complex(0.5), 1.0, 1.0, 1.0}, {Complex(-0.5), 1.0, 1.0, -1.0}};
    c.r = r;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(CondenserCapacity, RadialCapacitor) {
    const auto res = condenser_capacity(radial(0.1));
    EXPECT_NEAR(res.capacity / (2 * kPi / std::log(10.0)), 1.0, 0.01);
    EXPECT_NEAR(dirichlet_energy(*res.potential), res.capacity, 1e-12 * res.capacity);
}

TEST(CondenserCapacity, ZeroAndScaledPotentials) {
    EXPECT_NEAR(condenser_capacity(radial(0.1, 0.0)).capacity, 0.0, 1e-14);
    const double c1 = condenser_capacity(radial(0.2, 1.0)).capacity;
    const double c3 = condenser_capacity(radial(0.2, 3.0)).capacity;
    EXPECT_NEAR(c3 / c1, 9.0, 1e-9);
}

TEST(CondenserCapacity, InvalidPlates) {
    Condenser overlap = two_plate(0.6);
    EXPECT_THROW(condenser_capacity(overlap), InputError);
    Condenser touching = radial(0.1);
    touching.plates[0].center = Complex(0.95);
    EXPECT_THROW(condenser_capacity(touching), InputError);
}

TEST(AsymptoticCapacity, RadialSecondTermVanishes) {
    const RobinData data = disk_robin_data({0.0});
    EXPECT_DOUBLE_EQ(data.radii[0], 1.0);
    EXPECT_NEAR(asymptotic_capacity(radial(0.1).plates, data, 0.1), 2 * kPi / std::log(10.0), 1e-12);
}

TEST(AsymptoticCapacity, TwoPlateUsesDiskGreen) {
    const RobinData data = disk_robin_data({0.5, -0.5});
    EXPECT_NEAR(data.green[0][1], std::log(1.25), 1e-15);
    EXPECT_NEAR(data.green[0][1], oracle::disk_green(0.5, -0.5), 1e-15);
    const double r = 1e-3, L = std::log(r);
    const double first = 2 * kPi * 2 * (-1 / L);
    const double second = -2 * kPi * (2 * std::log(0.75) - 2 * std::log(1.25)) / (L * L);
    EXPECT_NEAR(asymptotic_capacity(two_plate(r).plates, data, r), first + second, 1e-12);
}

TEST(AsymptoticCapacity, Preconditions) {
    const RobinData data = disk_robin_data({0.0});
    EXPECT_THROW(asymptotic_capacity(radial(0.1, 0.0).plates, data, 0.1), InputError);
    EXPECT_THROW(asymptotic_capacity(radial(0.1).plates, data, 1.5), InputError);
}

TEST(ResidualStudy, ListChecks) {
    const RobinData data = disk_robin_data({0.0});
    EXPECT_THROW(residual_study(radial(0.1), data, {1e-2}), InputError);
    EXPECT_THROW(residual_study(radial(0.1), data, {1e-2, 1e-3, 1e-3}), InputError);
    EXPECT_THROW(residual_study(radial(0.1), data, {1e-2, 1e-3, 1e-7}), InputError);
}

TEST(ResidualStudy, RadialResidualsNegligible) {
    const Study s = load_study(test::data_dir() / "studies/radial.scn");
    const auto study = residual_study(s.condenser, s.robin_data(), s.r_list);
    ASSERT_EQ(study.rows.size(), 3u);
    for (const auto& row : study.rows) EXPECT_LE(std::abs(row.residual), 1e-2 * row.direct);
    EXPECT_TRUE(study.passed);
    const auto path = test::temp_path("residual.csv");
    write_residual_csv(study, path);
    const std::string csv = slurp(path);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "r,direct_cap,asym_cap,residual,residual_times_log2r");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
    std::filesystem::remove(path);
}

TEST(Study, ParseFile) {
    const Study s = load_study(test::data_dir() / "studies/two_plate.scn");
    EXPECT_EQ(s.id, "two_plate");
    ASSERT_EQ(s.condenser.plates.size(), 2u);
    EXPECT_EQ(s.condenser.plates[1].potential, -1.0);
    EXPECT_EQ(s.r_list, (std::vector<double>{1e-2, 1e-3, 1e-4}));
    EXPECT_FALSE(s.condenser.shape);
    EXPECT_TRUE(load_study(test::data_dir() / "studies/two_plate_mobius.scn").condenser.shape);
}

TEST(Study, ParseErrors) {
    try {
        parse_study("id = x\nplate.1 = 0, 1, 1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2);
    }
    EXPECT_THROW(parse_study("id = x\nbogus = 1\nplate.1 = 0, 1, 1, 1\n"), ParseError);
    EXPECT_THROW(parse_study("id = x\nrobin = maybe\nplate.1 = 0, 1, 1, 1\n"), InputError);
    EXPECT_THROW(parse_study("id = x\nplate.1 = inf, 1, 1, 1\n").robin_data(), InputError);
}

TEST(FieldExport, DiskGreenGrid) {
    const RobinResult r = green_function(unit_disk(), Complex(0.0));
    const auto path = test::temp_path("green.csv");
    const auto value = [&r](Complex z) { return r.try_green(z); };
    export_field(value, default_window(unit_disk()), 64, 64, path);
    const std::string first = slurp(path);
    EXPECT_EQ(std::count(first.begin(), first.end(), '\n'), 4097);  // header + 4096 rows
    EXPECT_EQ(first.substr(0, first.find('\n')), "x,y,value");

    // outside points are empty, boundary rows are close to zero
    std::istringstream in(first);
    std::string line;
    std::getline(in, line);
    int empty = 0, near_gamma = 0;
    while (std::getline(in, line)) {
        double x = 0, y = 0;
        std::sscanf(line.c_str(), "%lf,%lf", &x, &y);
        const std::string v = line.substr(line.rfind(',') + 1);
        const double rad = std::hypot(x, y);
        if (v.empty()) {
            ++empty;
            EXPECT_GE(rad, 1.0 - 1e-9);
        } else if (rad > 0.99) {
            ++near_gamma;
            EXPECT_NEAR(std::stod(v), 0.0, 2e-2);
        }
    }
    EXPECT_GT(empty, 0);
    EXPECT_GT(near_gamma, 0);

    export_field(value, default_window(unit_disk()), 64, 64, path);
    EXPECT_EQ(slurp(path), first);
    std::filesystem::remove(path);
    EXPECT_THROW(export_field(value, default_window(unit_disk()), 4, 4, "/nonexistent/dir/x.csv"), InputError);
    EXPECT_THROW(export_field(value, default_window(unit_disk()), 0, 4, path), InputError);
}
