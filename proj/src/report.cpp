#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "robincap/json_out.hpp"
#include "robincap/verify.hpp"

namespace robincap {

namespace {

Json complex_list(const std::vector<Complex>& v) {
    Json a = Json::array();
    for (Complex z : v) a.push_back(Json::array({z.real(), z.imag()}));
    return a;
}

}  // namespace

std::string report_json(const VerificationReport& r, const Scenario& s) {
    Json j;
    j["id"] = r.id;
    j["kind"] = to_string(r.kind);
    j["status"] = to_string(r.status);
    j["relation"] = r.relation;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["lhs_log"] = r.lhs_log;
    j["rhs_log"] = r.rhs_log;
    j["margin"] = r.margin;
    j["satisfied"] = r.satisfied;
    j["equality"] = r.equality;
    j["budget"] = r.budget;
    j["equality_threshold"] = equality_threshold(r.budget);
    j["h"] = r.h;
    j["routes"] = r.routes;
    if (!r.message.empty()) j["message"] = r.message;
    Json in;
    in["source"] = s.source_descriptor;
    in["target"] = s.target_descriptor;
    in["map"] = s.map_text;
    in["points"] = complex_list(s.points);
    in["weights"] = s.weights;
    if (!s.targets.empty()) in["targets"] = complex_list(s.targets);
    if (s.w0) in["w0"] = Json::array({s.w0->real(), s.w0->imag()});
    in["valence"] = s.valence;
    in["hypothesis_samples"] = kHypothesisSamples;
    in["hypothesis_tolerance"] = kHypothesisTol;
    for (const auto& [k, v] : s.aux) in["aux"][k] = v;
    j["inputs"] = in;
    Json d = Json::object();
    for (const auto& [k, v] : r.details) d[k] = v;
    j["details"] = d;
    return json17(j);
}

std::vector<VerificationReport> verify_all(const std::vector<Scenario>& scenarios, int threads) {
    std::vector<std::size_t> order(scenarios.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scenarios[a].id < scenarios[b].id; });
    std::vector<VerificationReport> out(scenarios.size());
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(scenarios.size())));
    // with several workers each scenario runs its kernels serially
    const bool inner_parallel = n == 1;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < order.size();)
            out[i] = verify(scenarios[order[i]], inner_parallel);
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < n; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace robincap
