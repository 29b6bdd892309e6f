#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cosetdht/coset_spectrum.hpp"
#include "cosetdht/error_model.hpp"
#include "cosetdht/errors.hpp"
#include "cosetdht/exponents.hpp"
#include "cosetdht/gf2_codes.hpp"
#include "cosetdht/montecarlo.hpp"
#include "cosetdht/spectrum_opt.hpp"
#include "sha256.hpp"

namespace {

using nlohmann::ordered_json;
using namespace cosetdht;

constexpr const char* kVersion = "0.1.0";

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string num12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Where the payload goes and what the run manifest records.  stdout output
// carries no manifest; with --out the payload lands in the file and the
// manifest in <out>.manifest.json beside it.
struct RunContext {
    std::string command;
    ordered_json parameters = ordered_json::object();
    std::vector<std::string> inputs;
    std::string out_path;

    void deliver(const std::string& payload) const {
        if (out_path.empty()) {
            std::cout << payload;
            return;
        }
        {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw InputError("cannot write " + out_path);
            out << payload;
        }
        ordered_json manifest;
        manifest["command"] = command;
        manifest["parameters"] = parameters;
        manifest["version"] = kVersion;
        ordered_json digests = ordered_json::object();
        for (const std::string& path : inputs)
            digests[path] = sha256::hex_digest(read_file_bytes(path));
        manifest["inputs"] = digests;
        manifest["timestamp"] = utc_timestamp();
        const std::string mpath = out_path + ".manifest.json";
        std::ofstream mout(mpath, std::ios::binary);
        if (!mout) throw InputError("cannot write " + mpath);
        mout << manifest.dump(2) << '\n';
    }
};

BinaryLinearCode load_code_source(const std::string& name, const std::string& gen_file,
                                  RunContext& ctx) {
    if (!gen_file.empty()) {
        ctx.inputs.push_back(gen_file);
        return load_generator_file(gen_file);
    }
    return catalog_lookup(name);
}

// ---- spectrum ----

struct SpectrumArgs {
    std::string code;
    std::string gen_file;
    std::string table_out;
    std::string out;
    bool as_json = false;
};

void run_spectrum(const SpectrumArgs& a) {
    RunContext ctx;
    ctx.command = "spectrum";
    ctx.parameters = {{"code", a.code},     {"gen_file", a.gen_file}, {"json", a.as_json},
                      {"table_out", a.table_out}, {"out", a.out}};
    ctx.out_path = a.out;

    BinaryLinearCode code = load_code_source(a.code, a.gen_file, ctx);
    EnumerationResult res = enumerate_spectrum(code, !a.table_out.empty());
    if (!a.table_out.empty()) save_leader_table(*res.table, a.table_out);

    std::string payload =
        (a.as_json ? spectrum_to_json(res.spectrum) : spectrum_to_csv(res.spectrum)) + "\n";
    ctx.deliver(payload);
}

void setup_spectrum(CLI::App& app, SpectrumArgs& a) {
    CLI::App* sp = app.add_subcommand("spectrum", "Coset leader spectrum of a code");
    CLI::App* src = sp->add_option_group("source");
    src->add_option("--code", a.code, "catalog code name");
    src->add_option("--gen-file", a.gen_file, "generator matrix file");
    src->require_option(1);
    sp->add_flag("--json", a.as_json, "emit JSON instead of the one-line CSV");
    sp->add_option("--table-out", a.table_out, "also dump the coset leader table (binary)");
    sp->add_option("--out", a.out, "write to file and record a run manifest");
    sp->callback([&a] { run_spectrum(a); });
}

// ---- roc ----

struct RocArgs {
    std::string code;
    std::string gen_file;
    std::string spectrum_file;
    std::string out;
    double p0 = 0.0;
    bool bounds = false;
};

void run_roc(const RocArgs& a) {
    RunContext ctx;
    ctx.command = "roc";
    ctx.parameters = {{"code", a.code},   {"gen_file", a.gen_file},
                      {"spectrum_file", a.spectrum_file}, {"p0", a.p0},
                      {"bounds", a.bounds}, {"out", a.out}};
    ctx.out_path = a.out;

    CosetLeaderSpectrum s;
    if (!a.spectrum_file.empty()) {
        ctx.inputs.push_back(a.spectrum_file);
        s = load_spectrum_file(a.spectrum_file);
    } else {
        BinaryLinearCode code = load_code_source(a.code, a.gen_file, ctx);
        s = enumerate_spectrum(code, false).spectrum;
    }

    std::string payload = a.bounds ? bounds_csv(s, a.p0) : curve_to_csv(roc_curve(s, a.p0));
    ctx.deliver(payload);
}

void setup_roc(CLI::App& app, RocArgs& a) {
    CLI::App* sp = app.add_subcommand("roc", "Exact (alpha, beta) per threshold");
    CLI::App* src = sp->add_option_group("source");
    src->add_option("--code", a.code, "catalog code name");
    src->add_option("--gen-file", a.gen_file, "generator matrix file");
    src->add_option("--spectrum-file", a.spectrum_file, "spectrum JSON (hypothetical code)");
    src->require_option(1);
    sp->add_option("--p0", a.p0, "crossover probability under H0")->required();
    sp->add_flag("--bounds", a.bounds, "add exponent bound columns");
    sp->add_option("--out", a.out, "write to file and record a run manifest");
    sp->callback([&a] { run_roc(a); });
}

// ---- optimize ----

struct OptimizeArgs {
    int n = 0;
    int k = 0;
    double p0 = 0.0;
    double epsilon = 0.0;
    std::string out;
};

void run_optimize(const OptimizeArgs& a) {
    RunContext ctx;
    ctx.command = "optimize";
    ctx.parameters = {
        {"n", a.n}, {"k", a.k}, {"p0", a.p0}, {"epsilon", a.epsilon}, {"out", a.out}};
    ctx.out_path = a.out;

    OptimizationOutcome o = run_algorithm1(a.n, a.k, a.p0, a.epsilon);
    ctx.deliver(outcome_to_json(o) + "\n");
}

void setup_optimize(CLI::App& app, OptimizeArgs& a) {
    CLI::App* sp =
        app.add_subcommand("optimize", "Best spectrum and smallest threshold meeting alpha <= epsilon");
    sp->add_option("--n", a.n, "block length")->required();
    sp->add_option("--k", a.k, "code dimension")->required();
    sp->add_option("--p0", a.p0, "crossover probability under H0")->required();
    sp->add_option("--epsilon", a.epsilon, "Type-I error budget")->required();
    sp->add_option("--out", a.out, "write to file and record a run manifest");
    sp->callback([&a] { run_optimize(a); });
}

// ---- exponents ----

struct ExponentsArgs {
    double p0 = 0.0;
    std::string t_grid;
    std::string out;
};

void parse_t_grid(const std::string& s, double& start, double& stop, int& count) {
    char extra = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d%c", &start, &stop, &count, &extra) != 3)
        throw InputError("t-grid must be start:stop:count, got '" + s + "'");
    if (count < 1) throw InputError("t-grid count must be >= 1");
    if (count == 1 && start != stop)
        throw InputError("t-grid with count 1 needs start == stop");
    if (stop < start) throw InputError("t-grid stop must be >= start");
}

void run_exponents(const ExponentsArgs& a) {
    RunContext ctx;
    ctx.command = "exponents";
    ctx.parameters = {{"p0", a.p0}, {"t_grid", a.t_grid}, {"out", a.out}};
    ctx.out_path = a.out;

    double start = 0.0, stop = 0.0;
    int count = 0;
    parse_t_grid(a.t_grid, start, stop, count);

    std::string payload = "t,e0,e1\n";
    for (int i = 0; i < count; ++i) {
        // endpoints taken verbatim so boundary grids hit the validity window exactly
        double t = (i == 0) ? start
                 : (i == count - 1) ? stop
                                    : start + (stop - start) * i / (count - 1);
        ExponentPoint p = exponents(t, a.p0);
        payload += num12(p.t) + "," + num12(p.e0) + "," + num12(p.e1) + "\n";
    }
    ctx.deliver(payload);
}

void setup_exponents(CLI::App& app, ExponentsArgs& a) {
    CLI::App* sp = app.add_subcommand("exponents", "Error exponent pairs on a threshold grid");
    sp->add_option("--p0", a.p0, "crossover probability under H0")->required();
    sp->add_option("--t-grid", a.t_grid, "normalized thresholds start:stop:count")->required();
    sp->add_option("--out", a.out, "write to file and record a run manifest");
    sp->callback([&a] { run_exponents(a); });
}

// ---- simulate ----

struct SimulateArgs {
    std::string code;
    std::string gen_file;
    std::string table_in;
    std::string hypothesis = "H0";
    std::string out;
    double p0 = 0.0;
    int gamma_t = 0;
    uint64_t trials = 1000000;
    uint64_t seed = 1;
};

void run_simulate(const SimulateArgs& a) {
    RunContext ctx;
    ctx.command = "simulate";
    ctx.parameters = {{"code", a.code},       {"gen_file", a.gen_file},
                      {"p0", a.p0},           {"gamma_t", a.gamma_t},
                      {"hypothesis", a.hypothesis}, {"trials", a.trials},
                      {"seed", a.seed},       {"table_in", a.table_in},
                      {"out", a.out}};
    ctx.out_path = a.out;

    BinaryLinearCode code = load_code_source(a.code, a.gen_file, ctx);
    CosetLeaderTable table;
    CosetLeaderSpectrum s;
    if (!a.table_in.empty()) {
        ctx.inputs.push_back(a.table_in);
        table = load_leader_table(a.table_in, code);
        s = spectrum_from_table(table);
    } else {
        EnumerationResult res = enumerate_spectrum(code, true);
        table = std::move(*res.table);
        s = res.spectrum;
    }

    Hypothesis h = parse_hypothesis(a.hypothesis);
    SimulationConfig cfg;
    cfg.code = &code;
    cfg.table = &table;
    cfg.p0 = a.p0;
    cfg.gamma_t = a.gamma_t;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    cfg.hypothesis = h;
    EmpiricalEstimate est = simulate(cfg);

    double analytic = (h == Hypothesis::H0) ? alpha_exact(s, a.p0, a.gamma_t)
                                            : beta_exact(s, a.gamma_t);

    ordered_json j;
    j["code"] = a.code.empty() ? a.gen_file : a.code;
    j["p0"] = a.p0;
    j["gamma_t"] = a.gamma_t;
    j["hypothesis"] = hypothesis_name(h);
    j["trials"] = est.trials;
    j["seed"] = a.seed;
    j["rate"] = est.rate;
    j["ci_low"] = est.ci_low;
    j["ci_high"] = est.ci_high;
    j["analytic"] = analytic;
    j["z_score"] = z_score(est.rate, analytic, est.trials);
    ctx.deliver(j.dump(2) + "\n");
}

void setup_simulate(CLI::App& app, SimulateArgs& a) {
    CLI::App* sp = app.add_subcommand("simulate", "Monte Carlo error rate vs the analytic value");
    CLI::App* src = sp->add_option_group("source");
    src->add_option("--code", a.code, "catalog code name");
    src->add_option("--gen-file", a.gen_file, "generator matrix file");
    src->require_option(1);
    sp->add_option("--p0", a.p0, "crossover probability under H0")->required();
    sp->add_option("--gamma-t", a.gamma_t, "decision threshold")->required();
    sp->add_option("--hypothesis", a.hypothesis, "H0 or H1 (default H0)");
    sp->add_option("--trials", a.trials, "number of trials (default 1000000)");
    sp->add_option("--seed", a.seed, "RNG seed (default 1)");
    sp->add_option("--table-in", a.table_in, "reuse a leader table dumped by spectrum");
    sp->add_option("--out", a.out, "write to file and record a run manifest");
    sp->callback([&a] { run_simulate(a); });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hypothesis testing with binary linear code quantizers"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    RocArgs roc_args;
    OptimizeArgs optimize_args;
    ExponentsArgs exponents_args;
    SimulateArgs simulate_args;

    setup_spectrum(app, spectrum_args);
    setup_roc(app, roc_args);
    setup_optimize(app, optimize_args);
    setup_exponents(app, exponents_args);
    setup_simulate(app, simulate_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cosetdht::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
