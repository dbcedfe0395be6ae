#pragma once

// Text format for marked domains.
//
//   domain <id>
//   model upper_halfplane | right_halfplane | quadrant | strip
//   exterior
//   loop <name>
//     circle  c=<complex> r=<real>
//     arc     c=<complex> r=<real> t0=<real> t1=<real>
//     segment a=<complex> b=<complex>
//   gamma <name> = <ref> [<ref> ...]
//
// A <ref> is `<loop>` (the whole loop), `<loop>.<k>` (piece k), or
// `<loop>.<k>@<s0>:<s1>` (a parameter interval of piece k). Model domains use
// `edge<k>` in place of `<loop>.<k>`; `inf` and `-inf` are allowed there.
// Values are constant expressions (`pi/2`, `0.5-0.2i`). `#` starts a comment.

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "robincap/geometry.hpp"

namespace robincap {

struct DomainFile {
    DomainSpec domain;
    std::vector<std::pair<std::string, std::vector<GammaPiece>>> gammas;

    /// Marked domain for the named gamma; an empty name picks the first one
    /// (or the full boundary when the file declares none).
    MarkedDomain marked(std::string_view gamma_name = {}) const;
};

DomainFile parse_domain(std::string_view text);
DomainFile load_domain(const std::filesystem::path& path);

/// Writes numbers with 17 significant digits so parse(serialize(d)) == d.
std::string serialize_domain(const DomainFile& file);

/// Resolves a domain descriptor: a builtin such as `disk`, `disk_arcs(t0,t1,...)`,
/// `annulus(rho)`, `annulus_outer(rho)`, `annulus_inner(rho)`,
/// `annulus_arcs(rho,t0,t1,...)`, `half_disk`, `halfplane`,
/// `halfplane_interval(a,b)`, `right_halfplane`, `quadrant`, `quadrant_full`,
/// `strip`, `strip_full`, or a
/// path `file.dom[:gamma]` relative to `base`.
MarkedDomain resolve_domain(std::string_view descriptor, const std::filesystem::path& base = {});

}  // namespace robincap
