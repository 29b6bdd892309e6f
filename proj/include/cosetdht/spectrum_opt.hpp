#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetdht/coset_spectrum.hpp"

namespace cosetdht {

// Minimize sum_i weights[i] * N_i subject to 0 <= N_i <= capacities[i] and
// sum_i N_i = total (indices follow leader weights 1..rho).
struct IlpInstance {
    std::vector<double> weights;
    std::vector<uint64_t> capacities;
    uint64_t total = 0;
};

// Exact: greedy fill in ascending weight order (ties to the smaller index) is
// optimal for a linear objective over a box intersected with one simplex
// equality, and returns the lexicographically greatest optimal point.
std::vector<uint64_t> solve_ilp(const IlpInstance& inst);

// Exhaustive verification oracle; requires prod(capacity_i + 1) <= 1e7.
// Matches solve_ilp's tie rule (lexicographically greatest optimum).
std::vector<uint64_t> bruteforce_ilp(const IlpInstance& inst);

struct OptimizationOutcome {
    int n = 0;
    int k = 0;
    double p0 = 0.0;
    double epsilon = 0.0;
    int gamma_t_star = 0;
    CosetLeaderSpectrum spectrum_star;
    double alpha_achieved = 0.0;
    double beta_achieved = 0.0;
    int iterations = 0;
};

// Smallest r with sum_{i<=r} C(n,i) >= 2^(n-k); the optimal hypothetical
// spectrum always reaches exactly this covering radius.
int sphere_covering_rho(int n, int k);

// Threshold scan: starting at gamma_t = 0, recompute the Type-I weights,
// solve the ILP with rho = n - k, and stop at the first gamma_t whose optimal
// spectrum meets alpha <= epsilon.  Terminates since alpha = 0 at gamma_t = n.
OptimizationOutcome run_algorithm1(int n, int k, double p0, double epsilon);

std::string outcome_to_json(const OptimizationOutcome& o);

}  // namespace cosetdht
