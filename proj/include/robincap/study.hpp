#pragma once

// Condenser study files, `key = value` lines:
//
//   id = radial
//   domain = disk                  # domain descriptor, see resolve_domain
//   plate.1 = 0, 1, 1, 1           # center, mu, nu, potential t
//   r = 0.1                        # plate parameter for a single solve
//   r_list = 1e-2, 1e-3, 1e-4      # residual study values, strictly decreasing
//   h = 0.02
//   shape = disk_auto(z, 0.3)      # optional: plates become images of disks
//   robin = oracle | solver        # Robin data for the expansion

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "robincap/condenser.hpp"

namespace robincap {

struct Study {
    std::string id;
    std::string domain_descriptor = "disk";
    std::string shape_text;
    Condenser condenser;
    std::vector<double> r_list;
    double h = 0.02;
    std::string robin = "auto";

    /// Robin radii and Green values at the plate centers (closed forms on the
    /// unit disk with the whole circle marked unless robin = solver).
    RobinData robin_data(const RobinOptions& options = {}) const;
};

Study parse_study(std::string_view text, const std::filesystem::path& base = {});
Study load_study(const std::filesystem::path& path);

}  // namespace robincap
