#pragma once

// Shared helpers for the test executables.

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>

#include "robincap/types.hpp"

#ifndef ROBINCAP_DATA_DIR
#define ROBINCAP_DATA_DIR "data"
#endif
#ifndef ROBINCAP_GOLDEN_DIR
#define ROBINCAP_GOLDEN_DIR "tests/golden"
#endif

namespace robincap::test {

inline std::filesystem::path data_dir() { return ROBINCAP_DATA_DIR; }
inline std::filesystem::path golden_dir() { return ROBINCAP_GOLDEN_DIR; }

// Seeded generator; every property test names its seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    Complex in_disk(double rmax) { return std::polar(rmax * std::sqrt(uniform(0, 1)), uniform(0, 2 * kPi)); }
    Complex in_quadrant(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

private:
    std::mt19937_64 engine_;
};

inline std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("robincap_test_" + name);
}

}  // namespace robincap::test
