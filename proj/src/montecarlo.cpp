#include "cosetdht/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace cosetdht {

Hypothesis parse_hypothesis(const std::string& s) {
    if (s == "H0") return Hypothesis::H0;
    if (s == "H1") return Hypothesis::H1;
    throw InputError("hypothesis must be H0 or H1, got '" + s + "'");
}

std::string hypothesis_name(Hypothesis h) { return h == Hypothesis::H0 ? "H0" : "H1"; }

BitVector md_quantize(const BinaryLinearCode& code, const CosetLeaderTable& table,
                      const BitVector& x) {
    if (x.length() != code.n())
        throw LengthMismatch("md_quantize: vector length " + std::to_string(x.length()) +
                             " != code length " + std::to_string(code.n()));
    return BitVector(code.n(), x.bits() ^ table.leader[code.syndrome_bits(x.bits())]);
}

namespace {

uint64_t run_chunk(const SimulationConfig& cfg, uint64_t first, uint64_t count) {
    const BinaryLinearCode& code = *cfg.code;
    const std::vector<uint64_t>& leader = cfg.table->leader;
    int n = code.n();
    uint64_t mask = (n == 64) ? ~0ull : (1ull << n) - 1;
    bool h0 = cfg.hypothesis == Hypothesis::H0;
    // u < threshold has probability p0 up to one part in 2^53
    uint64_t threshold = static_cast<uint64_t>(std::ldexp(cfg.p0, 64));
    uint64_t errors = 0;
    for (uint64_t t = 0; t < count; ++t) {
        TrialRng rng(cfg.seed, first + t);
        uint64_t x = rng.next() & mask;
        uint64_t w;
        if (h0) {
            w = 0;
            if (threshold != 0)
                for (int j = 0; j < n; ++j) w |= static_cast<uint64_t>(rng.next() < threshold) << j;
        } else {
            w = rng.next() & mask;
        }
        uint64_t y = x ^ w;
        uint64_t xq = x ^ leader[code.syndrome_bits(x)];
        int stat = std::popcount(xq ^ y);
        bool decide_h0 = stat <= cfg.gamma_t;
        errors += h0 ? !decide_h0 : decide_h0;
    }
    return errors;
}

}  // namespace

EmpiricalEstimate simulate(const SimulationConfig& cfg) {
    if (cfg.code == nullptr || cfg.table == nullptr)
        throw InputError("simulate: config needs a code and a leader table");
    if (cfg.table->n != cfg.code->n() || cfg.table->k != cfg.code->k())
        throw InputError("simulate: leader table does not match the code");
    if (!(cfg.p0 >= 0.0 && cfg.p0 < 0.5))
        throw OutOfRange("simulate: p0 = " + std::to_string(cfg.p0) + " outside [0, 1/2)");
    if (cfg.gamma_t < 0 || cfg.gamma_t > cfg.code->n())
        throw OutOfRange("simulate: gamma_t outside [0, n]");
    if (cfg.trials < 1) throw OutOfRange("simulate: need at least one trial");

    uint64_t threads = static_cast<uint64_t>(thread_cap());
    if (threads > cfg.trials) threads = cfg.trials;
    uint64_t errors = 0;
    if (threads <= 1) {
        errors = run_chunk(cfg, 0, cfg.trials);
    } else {
        std::vector<uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        uint64_t chunk = cfg.trials / threads, extra = cfg.trials % threads;
        uint64_t first = 0;
        for (uint64_t i = 0; i < threads; ++i) {
            uint64_t count = chunk + (i < extra ? 1 : 0);
            pool.emplace_back(
                [&cfg, &partial, i, first, count] { partial[i] = run_chunk(cfg, first, count); });
            first += count;
        }
        for (auto& th : pool) th.join();
        for (uint64_t e : partial) errors += e;
    }
    EmpiricalEstimate est = wilson_from_counts(errors, cfg.trials);
    return est;
}

EmpiricalEstimate wilson_from_counts(uint64_t errors, uint64_t trials) {
    if (trials < 1) throw OutOfRange("wilson_from_counts: need at least one trial");
    if (errors > trials) throw OutOfRange("wilson_from_counts: errors exceed trials");
    const double z = 3.0;
    double m = static_cast<double>(trials);
    double p = static_cast<double>(errors) / m;
    double z2 = z * z;
    double denom = 1.0 + z2 / m;
    double center = (p + z2 / (2.0 * m)) / denom;
    double half = (z / denom) * std::sqrt(p * (1.0 - p) / m + z2 / (4.0 * m * m));
    EmpiricalEstimate est;
    est.rate = p;
    est.ci_low = std::max(0.0, center - half);
    est.ci_high = std::min(1.0, center + half);
    // at the extremes the interval endpoint is exact, not a rounding artifact
    if (errors == 0) est.ci_low = 0.0;
    if (errors == trials) est.ci_high = 1.0;
    est.trials = trials;
    est.errors = errors;
    return est;
}

double z_score(double rate, double analytic, uint64_t trials) {
    if (analytic <= 0.0 || analytic >= 1.0) {
        if (rate == analytic) return 0.0;
        return std::numeric_limits<double>::infinity();
    }
    double sigma = std::sqrt(analytic * (1.0 - analytic) / static_cast<double>(trials));
    return (rate - analytic) / sigma;
}

int thread_cap() {
    const char* env = std::getenv("COSET_DHT_THREADS");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == nullptr || *end != '\0' || v < 1)
            throw InputError("COSET_DHT_THREADS must be a positive integer, got '" +
                             std::string(env) + "'");
        return static_cast<int>(std::min<long>(v, 1024));
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace cosetdht
