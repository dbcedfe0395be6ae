// Command-line front end.
//
// Exit status: 0 success, 1 verification failure (with --strict) or a
// numerical failure, 2 input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "robincap/closed_forms.hpp"
#include "robincap/condenser.hpp"
#include "robincap/domain_io.hpp"
#include "robincap/field_export.hpp"
#include "robincap/json_out.hpp"
#include "robincap/robin.hpp"
#include "robincap/scenario_gen.hpp"
#include "robincap/study.hpp"
#include "robincap/verify.hpp"

#ifndef ROBINCAP_DATA_DIR
#define ROBINCAP_DATA_DIR "data"
#endif

using namespace robincap;

namespace {

struct ExitCode {
    int code;
};

int thread_count(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("ROBINCAP_THREADS")) {
        try {
            if (const int n = std::stoi(env); n > 0) return n;
        } catch (const std::exception&) {
            throw InputError("ROBINCAP_THREADS must be a positive integer");
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Json point_json(ExtendedPoint p) {
    if (p.is_infinite()) return "inf";
    return Json::array({p.value().real(), p.value().imag()});
}

ExtendedPoint parse_point(const std::string& text) {
    if (text == "inf" || text == "infinity") return ExtendedPoint::infinity();
    return expr::parse_constant(text);
}

std::vector<Complex> parse_points(const std::string& text) {
    std::vector<Complex> out;
    for (const auto& p : split_list(text)) out.push_back(expr::parse_constant(p));
    return out;
}

MarkedDomain domain_from(const std::string& descriptor, const std::string& gamma) {
    if (gamma.empty()) return resolve_domain(descriptor);
    if (descriptor.find('(') != std::string::npos || descriptor.find(".dom") == std::string::npos)
        throw InputError("--gamma applies to domain files only");
    return resolve_domain(descriptor + ":" + gamma);
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text << "\n";
    if (!out) throw InputError("write to '" + path + "' failed");
}

std::pair<int, int> parse_grid(const std::string& text) {
    int nx = 0, ny = 0;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> nx >> x >> ny) || (x != 'x' && x != 'X') || nx < 2 || ny < 2)
        throw InputError("--grid expects NXxNY with both at least 2, e.g. 64x64");
    return {nx, ny};
}

// ------------------------------------------------------------ robin / green

struct SolveArgs {
    std::string domain, gamma, pole = "0", output, field_csv, grid = "64x64", at;
    double h = 0.02;
    bool no_richardson = false;
};

void add_solve_options(CLI::App* cmd, SolveArgs& a, bool with_gamma) {
    cmd->add_option("--domain", a.domain, "domain descriptor or .dom file")->required();
    if (with_gamma) cmd->add_option("--gamma", a.gamma, "named gamma of a domain file");
    cmd->add_option("--pole", a.pole, "pole, a complex constant or inf");
    cmd->add_option("--h", a.h, "mesh size")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-richardson", a.no_richardson, "single solve, no extrapolation");
    cmd->add_option("--at", a.at, "comma-separated points at which to report g");
    cmd->add_option("--field-csv", a.field_csv, "write g on a grid to this CSV file");
    cmd->add_option("--grid", a.grid, "grid for --field-csv, NXxNY");
    cmd->add_option("-o,--output", a.output, "JSON output file (default stdout)");
}

int run_solve(const SolveArgs& a, bool full) {
    MarkedDomain md = full ? mark_full(resolve_domain(a.domain).domain) : domain_from(a.domain, a.gamma);
    RobinOptions opt;
    opt.h = a.h;
    opt.richardson = !a.no_richardson;
    const ExtendedPoint pole = parse_point(a.pole);
    const RobinResult r = robin_function(md, pole, opt);
    Json j;
    j["command"] = full ? "green" : "robin";
    j["domain"] = a.domain;
    j["gamma"] = md.gamma_name;
    j["pole"] = point_json(pole);
    j["radius"] = r.radius();
    j["capacity"] = r.capacity();
    j["log_radius"] = std::log(r.radius());
    j["method"] = r.method();
    j["h"] = a.h;
    if (r.fine_radius) j["fine_radius"] = *r.fine_radius;
    if (r.coarse_radius) j["coarse_radius"] = *r.coarse_radius;
    if (!a.at.empty()) {
        Json g = Json::array();
        for (Complex z : parse_points(a.at)) g.push_back({{"z", point_json(z)}, {"value", r.green(z)}});
        j["green"] = g;
    }
    if (!a.field_csv.empty()) {
        const auto [nx, ny] = parse_grid(a.grid);
        export_field([&r](Complex z) { return r.try_green(z); }, default_window(md.domain), nx, ny, a.field_csv);
        j["field_csv"] = a.field_csv;
    }
    emit(json17(j), a.output);
    return 0;
}

// ------------------------------------------------------------------ capacity

struct CapacityArgs {
    std::string domain, gamma, pole, arcs, output;
    double h = 0.02;
};

int run_capacity(const CapacityArgs& a) {
    Json j;
    j["command"] = "capacity";
    if (!a.arcs.empty()) {
        // compact set of arcs of the unit circle
        std::vector<double> t;
        for (Complex v : parse_points(a.arcs)) t.push_back(v.real());
        if (t.empty() || t.size() % 2) throw InputError("--arcs expects pairs t0,t1");
        CompactSet set;
        for (std::size_t k = 0; k < t.size(); k += 2) {
            if (!(t[k] < t[k + 1])) throw InputError("--arcs needs t0 < t1");
            set.pieces.push_back(ArcSegment::arc(0.0, 1.0, t[k], t[k + 1]));
        }
        j["arcs"] = t;
        j["log_capacity"] = log_capacity(set);
        if (t.size() == 2) j["arc_oracle"] = oracle::arc_capacity(t[1] - t[0]);
        j["method"] = "bem";
    } else {
        if (a.domain.empty()) throw InputError("capacity needs --domain or --arcs");
        RobinOptions opt;
        opt.h = a.h;
        const MarkedDomain md = domain_from(a.domain, a.gamma);
        j["domain"] = a.domain;
        j["h"] = a.h;
        if (a.pole.empty()) {
            if (md.domain.kind != DomainKind::Exterior)
                throw InputError("without --pole the domain must be exterior (logarithmic capacity)");
            j["log_capacity"] = log_capacity(md.domain, opt);
        } else {
            const ExtendedPoint p = parse_point(a.pole);
            j["pole"] = point_json(p);
            j["robin_capacity"] = robin_capacity(md, p, opt);
        }
    }
    emit(json17(j), a.output);
    return 0;
}

// ------------------------------------------------------ condenser / studies

struct StudyArgs {
    std::string study, r_list, csv, output;
    double r = -1, h = -1;
    bool strict = false;
};

int run_condenser(const StudyArgs& a) {
    Study s = load_study(a.study);
    if (a.r > 0) s.condenser.r = a.r;
    if (a.h > 0) s.h = a.h;
    CondenserOptions opt;
    opt.h = s.h;
    const auto res = condenser_capacity(s.condenser, opt);
    Json j;
    j["command"] = "condenser";
    j["study"] = s.id;
    j["r"] = s.condenser.r;
    j["h"] = s.h;
    j["capacity"] = res.capacity;
    if (!s.condenser.shape) {
        try {
            j["asymptotic"] = asymptotic_capacity(s.condenser.plates, s.robin_data({s.h}), s.condenser.r);
        } catch (const InputError& e) {
            j["asymptotic_note"] = e.what();
        }
    }
    emit(json17(j), a.output);
    return 0;
}

int run_asymptotics(const StudyArgs& a) {
    Study s = load_study(a.study);
    if (!a.r_list.empty()) {
        s.r_list.clear();
        for (Complex v : parse_points(a.r_list)) s.r_list.push_back(v.real());
    }
    if (a.h > 0) s.h = a.h;
    CondenserOptions opt;
    opt.h = s.h;
    const auto study = residual_study(s.condenser, s.robin_data({s.h}), s.r_list, opt);
    if (a.csv.empty() || a.csv == "-") {
        std::printf("r,direct_cap,asym_cap,residual,residual_times_log2r\n");
        for (const auto& row : study.rows)
            std::printf("%.17g,%.17g,%.17g,%.17g,%.17g\n", row.r, row.direct, row.asymptotic, row.residual,
                        row.residual_times_log2r);
    } else {
        write_residual_csv(study, a.csv);
    }
    std::fprintf(stderr, "residual study %s: %s\n", s.id.c_str(), study.passed ? "passed" : "FAILED");
    return a.strict && !study.passed ? 1 : 0;
}

// -------------------------------------------------------------------- oracle

int run_oracle(const std::string& name, const std::string& args, const std::string& output) {
    const auto tag = oracle::parse_oracle_tag(name);
    const auto values = parse_points(args);
    Json j;
    j["command"] = "oracle";
    j["name"] = name;
    Json in = Json::array();
    for (Complex v : values) in.push_back(point_json(v));
    j["args"] = in;
    j["value"] = oracle::evaluate(tag, values);
    emit(json17(j), output);
    return 0;
}

// ------------------------------------------------------------ verify/report

struct VerifyArgs {
    std::vector<std::string> scenarios;
    std::string dir, output;
    bool all = false, strict = false;
    int random = 0, threads = 0;
    std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& a) {
    std::vector<Scenario> list;
    for (const auto& p : a.scenarios) list.push_back(load_scenario(p));
    if (a.all) {
        const std::filesystem::path dir = a.dir.empty() ? std::filesystem::path(ROBINCAP_DATA_DIR) / "scenarios" : std::filesystem::path(a.dir);
        auto more = load_scenario_dir(dir);
        list.insert(list.end(), more.begin(), more.end());
    }
    if (a.random > 0) {
        auto more = random_suite(a.random, a.seed);
        list.insert(list.end(), more.begin(), more.end());
    }
    if (list.empty()) throw InputError("nothing to verify: give --scenario, --all or --random");
    const auto reports = verify_all(list, thread_count(a.threads));
    std::map<std::string, const Scenario*> by_id;
    for (const auto& s : list)
        if (!by_id.emplace(s.id, &s).second) throw InputError("duplicate scenario id '" + s.id + "'");
    std::string text;
    int failures = 0, violated = 0, hypothesis = 0, errors = 0;
    for (const auto& r : reports) {
        text += report_json(r, *by_id.at(r.id)) + "\n";
        violated += r.status == VerdictStatus::Violated;
        hypothesis += r.status == VerdictStatus::HypothesisFailed;
        errors += r.status == VerdictStatus::Error;
    }
    failures = violated + hypothesis + errors;
    text.pop_back();
    emit(text, a.output);
    std::fprintf(stderr, "%zu scenarios: %d violated, %d hypothesis failures, %d errors\n", reports.size(), violated,
                 hypothesis, errors);
    return a.strict && failures ? 1 : 0;
}

int run_report(const std::string& input, const std::string& output) {
    std::ifstream in(input);
    if (!in) throw InputError("cannot read '" + input + "'");
    std::map<std::string, Json> kinds;
    std::map<std::string, int> statuses;
    std::string line;
    int n = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        Json r;
        try {
            r = Json::parse(line);
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("malformed report: ") + e.what(), lineno, 1);
        }
        ++n;
        const std::string kind = r.at("kind"), status = r.at("status");
        ++statuses[status];
        auto& k = kinds.try_emplace(kind, Json::object()).first->second;
        k["count"] = k.value("count", 0) + 1;
        k[status] = k.value(status, 0) + 1;
        if (r.at("margin").is_number()) {
            const double m = r["margin"];
            if (!k.contains("min_margin") || m < k["min_margin"].get<double>()) {
                k["min_margin"] = m;
                k["min_margin_id"] = r.at("id");
            }
        }
        if (r.value("equality", false)) k["equalities"] = k.value("equalities", 0) + 1;
    }
    Json j;
    j["command"] = "report";
    j["reports"] = n;
    for (const auto& [s, c] : statuses) j["status"][s] = c;
    for (const auto& [k, v] : kinds) j["kinds"][k] = v;
    emit(json17(j), output);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Robin functions, condenser capacities and distortion-theorem verification"};
    app.require_subcommand(1);
    // -h is not help here: --h is the mesh size
    app.set_help_flag("--help", "print this help and exit");

    SolveArgs robin_args, green_args;
    auto* robin = app.add_subcommand("robin", "Robin radius and function of a marked domain");
    add_solve_options(robin, robin_args, true);
    auto* green = app.add_subcommand("green", "Green function (whole boundary marked)");
    add_solve_options(green, green_args, false);

    CapacityArgs cap_args;
    auto* capacity = app.add_subcommand("capacity", "logarithmic or Robin capacity");
    capacity->add_option("--domain", cap_args.domain, "domain descriptor or .dom file");
    capacity->add_option("--gamma", cap_args.gamma, "named gamma of a domain file");
    capacity->add_option("--pole", cap_args.pole, "pole for the Robin capacity");
    capacity->add_option("--arcs", cap_args.arcs, "arcs t0,t1,... of the unit circle");
    capacity->add_option("--h", cap_args.h, "mesh size")->check(CLI::PositiveNumber);
    capacity->add_option("-o,--output", cap_args.output, "JSON output file");

    StudyArgs cond_args, asym_args;
    auto* condenser = app.add_subcommand("condenser", "capacity of a generalized condenser");
    condenser->add_option("--study", cond_args.study, "study file")->required();
    condenser->add_option("--r", cond_args.r, "plate parameter r in (0,1)");
    condenser->add_option("--h", cond_args.h, "mesh size")->check(CLI::PositiveNumber);
    condenser->add_option("-o,--output", cond_args.output, "JSON output file");
    auto* asymptotics = app.add_subcommand("asymptotics", "residual study of the small-plate expansion");
    asymptotics->add_option("--study", asym_args.study, "study file")->required();
    asymptotics->add_option("--r", asym_args.r_list, "comma-separated r values, strictly decreasing");
    asymptotics->add_option("--h", asym_args.h, "mesh size")->check(CLI::PositiveNumber);
    asymptotics->add_option("--csv", asym_args.csv, "CSV output file (default stdout)");
    asymptotics->add_flag("--strict", asym_args.strict, "exit 1 when the study fails");

    std::string oracle_name, oracle_args, oracle_out;
    auto* oracle_cmd = app.add_subcommand("oracle", "evaluate a closed form");
    oracle_cmd->add_option("--name", oracle_name, "disk-green, halfplane-green, quarterplane-robin, strip-delta, "
                                                  "bracket, arc-capacity, segment-capacity")
        ->required();
    oracle_cmd->add_option("--args", oracle_args, "comma-separated arguments")->required();
    oracle_cmd->add_option("-o,--output", oracle_out, "JSON output file");

    VerifyArgs ver_args;
    auto* verify_cmd = app.add_subcommand("verify", "verify distortion scenarios (JSON lines)");
    verify_cmd->add_option("--scenario", ver_args.scenarios, "scenario files");
    verify_cmd->add_flag("--all", ver_args.all, "the bundled scenario suite");
    verify_cmd->add_option("--dir", ver_args.dir, "scenario directory for --all");
    verify_cmd->add_option("--random", ver_args.random, "add N random instances per kind");
    verify_cmd->add_option("--seed", ver_args.seed, "seed for --random");
    verify_cmd->add_flag("--strict", ver_args.strict, "exit 1 on any violation, hypothesis failure or error");
    verify_cmd->add_option("--threads", ver_args.threads, "worker count (default ROBINCAP_THREADS or all cores)");
    verify_cmd->add_option("-o,--output", ver_args.output, "JSON-lines output file");

    std::string report_in, report_out;
    auto* report = app.add_subcommand("report", "summarize a JSON-lines verification report");
    report->add_option("--input", report_in, "JSON-lines file from verify")->required();
    report->add_option("-o,--output", report_out, "JSON output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*robin) return run_solve(robin_args, false);
        if (*green) return run_solve(green_args, true);
        if (*capacity) return run_capacity(cap_args);
        if (*condenser) return run_condenser(cond_args);
        if (*asymptotics) return run_asymptotics(asym_args);
        if (*oracle_cmd) return run_oracle(oracle_name, oracle_args, oracle_out);
        if (*verify_cmd) return run_verify(ver_args);
        if (*report) return run_report(report_in, report_out);
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
