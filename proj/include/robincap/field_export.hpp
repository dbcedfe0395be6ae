#pragma once

// Plot-ready CSV of a scalar field sampled on a regular grid.

#include <filesystem>
#include <functional>
#include <optional>

#include "robincap/geometry.hpp"

namespace robincap {

struct GridWindow {
    double x0, x1, y0, y1;
};

/// Bounding box of a bounded domain; a fixed window for unbounded ones.
GridWindow default_window(const DomainSpec& d);

/// Rows `x,y,value`; points where `value` returns nothing get an empty value
/// field. Numbers carry 17 significant digits.
void export_field(const std::function<std::optional<double>(Complex)>& value, const GridWindow& window, int nx,
                  int ny, const std::filesystem::path& path);

}  // namespace robincap
