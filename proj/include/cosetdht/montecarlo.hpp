#pragma once

#include <cstdint>
#include <string>

#include "cosetdht/coset_spectrum.hpp"
#include "cosetdht/gf2_codes.hpp"

namespace cosetdht {

enum class Hypothesis { H0, H1 };

Hypothesis parse_hypothesis(const std::string& s);
std::string hypothesis_name(Hypothesis h);

struct SimulationConfig {
    const BinaryLinearCode* code = nullptr;
    const CosetLeaderTable* table = nullptr;
    double p0 = 0.0;
    int gamma_t = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    Hypothesis hypothesis = Hypothesis::H0;
};

struct EmpiricalEstimate {
    double rate = 0.0;
    double ci_low = 0.0;   // 3-sigma Wilson interval
    double ci_high = 0.0;
    uint64_t trials = 0;
    uint64_t errors = 0;
};

// Counter-based stream: state is derived from (seed, trial), so any trial's
// draws can be produced without generating the preceding ones.
struct TrialRng {
    uint64_t state;
    TrialRng(uint64_t seed, uint64_t trial)
        : state(seed ^ mix(trial * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull)) {}
    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        return mix(state);
    }
};

// Nearest-codeword map: x_q = x xor leader(syndrome(x)).
BitVector md_quantize(const BinaryLinearCode& code, const CosetLeaderTable& table,
                      const BitVector& x);

// Per trial: x uniform, w ~ Bern(p)^n with p = p0 under H0 and 1/2 under H1,
// y = x xor w; decide H0 iff d_H(x_q, y) <= gamma_t.  Returns the frequency of
// wrong decisions under the configured hypothesis.  Trials are split across
// threads (COSET_DHT_THREADS caps the count); the estimate does not depend on
// the split.
EmpiricalEstimate simulate(const SimulationConfig& cfg);

EmpiricalEstimate wilson_from_counts(uint64_t errors, uint64_t trials);

// Standardized deviation of an empirical rate from its analytic value; 0 when
// the analytic value is degenerate and matched, infinite when mismatched.
double z_score(double rate, double analytic, uint64_t trials);

// COSET_DHT_THREADS when set (must be a positive integer), else the hardware
// concurrency.
int thread_cap();

}  // namespace cosetdht
