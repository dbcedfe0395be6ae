#pragma once

// Verification of one distortion scenario: both sides of the inequality in
// logarithmic form, the signed margin, and the verdict against the numeric
// budget of the routes that produced the Robin quantities.
//
// margin = dir * (lhs_log - rhs_log) with dir = +1 for ">=" and -1 for "<=",
// so a satisfied inequality has margin >= -budget whatever its direction.

#include <string>
#include <utility>
#include <vector>

#include "robincap/provider.hpp"
#include "robincap/scenario.hpp"

namespace robincap {

enum class VerdictStatus { Satisfied, Violated, HypothesisFailed, Error };
const char* to_string(VerdictStatus s);

struct VerificationReport {
    std::string id;
    ScenarioKind kind = ScenarioKind::TwoPoint21;
    std::string relation = ">=";  // lhs relation rhs
    double lhs = 0.0, rhs = 0.0;
    double lhs_log = 0.0, rhs_log = 0.0;
    double margin = 0.0;
    bool satisfied = false;
    bool equality = false;
    VerdictStatus status = VerdictStatus::Error;
    std::string message;
    double budget = 1e-9;
    double h = 0.02;
    std::vector<std::string> routes;
    std::vector<std::pair<std::string, double>> details;

    double detail(const std::string& key) const;
};

/// Smallest margin still counted as equality: max(1e-6, budget).
double equality_threshold(double budget);

VerificationReport verify(const Scenario& s, bool parallel = true);

/// log |Df(z)| = log r(B,gamma,z) + log|f'(z)| - log r(G,Gamma,f(z)).
double log_weighted_derivative(RobinProvider& b, RobinProvider& g, const HolomorphicMap& f, Complex z);
double weighted_derivative(RobinProvider& b, RobinProvider& g, const HolomorphicMap& f, Complex z);

/// Verifies scenarios on `threads` workers; reports come back ordered by id.
std::vector<VerificationReport> verify_all(const std::vector<Scenario>& scenarios, int threads);

/// One JSON object per report, numbers with 17 significant digits.
std::string report_json(const VerificationReport& r, const Scenario& s);

}  // namespace robincap
