#pragma once

// Distortion scenarios: a holomorphic map between two marked domains, the
// points and weights of one inequality, and the boundary hypotheses that
// make the inequality applicable.
//
// Scenario files are plain `key = value` lines:
//
//   id = twopoint22_mobius
//   kind = TwoPoint22
//   source = disk                  # domain descriptor, see resolve_domain
//   target = disk
//   map = disk_auto(z, 0.3+0.2i)
//   points = 0.2, -0.4i
//   weights = 1, -1
//   h = 0.02
//   aux.<name> = <value>           # kind-specific parameters
//
// Optional keys: description, targets (the w_l of PValent43), w0, valence.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robincap/expr.hpp"
#include "robincap/geometry.hpp"

namespace robincap {

enum class ScenarioKind {
    TwoPoint21,
    TwoPoint22,
    Major31,
    Major32,
    Pommerenke32cor,
    Nehari33,
    Schwarzian34,
    Cor35,
    Boundary36,
    Annulus37,
    Lindelof41,
    Radius42,
    PValent43,
    Invariant51,
    Multiplicity52,
    QuarterPlane53,
};

inline constexpr int kScenarioKindCount = 16;

/// Splits "a, f(b, c), d" at commas outside parentheses, trimming blanks.
std::vector<std::string> split_list(const std::string& s);

ScenarioKind parse_kind(std::string_view name);
const char* to_string(ScenarioKind kind);

struct Scenario {
    std::string id;
    std::string description;
    ScenarioKind kind = ScenarioKind::TwoPoint21;
    std::string source_descriptor = "disk";
    std::string target_descriptor = "disk";
    MarkedDomain source;
    MarkedDomain target;
    std::string map_text = "z";
    std::optional<HolomorphicMap> map;
    std::vector<Complex> points;
    std::vector<double> weights;
    std::vector<Complex> targets;
    std::optional<Complex> w0;
    int valence = 1;
    double h = 0.02;
    std::map<std::string, std::string> aux;

    const HolomorphicMap& f() const;
    /// Numeric aux parameter, or `fallback` when absent.
    double aux_real(const std::string& key, double fallback) const;
    Complex aux_complex(const std::string& key, Complex fallback) const;
    std::string aux_text(const std::string& key, const std::string& fallback = {}) const;
};

/// Parses a scenario; relative domain paths are resolved against `base`.
Scenario parse_scenario(std::string_view text, const std::filesystem::path& base = {});
Scenario load_scenario(const std::filesystem::path& path);
/// Text form that parses back to the same scenario (17 significant digits).
std::string serialize_scenario(const Scenario& s);
/// All `*.scn` files of a directory, sorted by file name.
std::vector<Scenario> load_scenario_dir(const std::filesystem::path& dir);

// ------------------------------------------------------------- hypotheses

/// Thrown when a boundary or inclusion hypothesis fails on the samples.
class HypothesisFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kHypothesisSamples = 256;
inline constexpr double kHypothesisTol = 1e-6;

/// f(B) in G, checked on interior samples.
void check_maps_into(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g);
/// f(gamma) in Gamma, checked on samples of gamma.
void check_gamma_into(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g);
/// f(dB \ gamma) in the closure of dG \ Gamma, checked on samples of the free boundary.
void check_free_into_free(const HolomorphicMap& f, const MarkedDomain& b, const MarkedDomain& g);
/// Univalence on B for rational maps (preimage counts at a few samples).
void check_univalent(const HolomorphicMap& f, const MarkedDomain& b);

}  // namespace robincap
