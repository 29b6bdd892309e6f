#pragma once

#include <string>
#include <vector>

#include "cosetdht/coset_spectrum.hpp"

namespace cosetdht {

struct ExponentPoint {
    double t;   // normalized threshold gamma_t / n
    double e0;  // Type-I exponent, bits per symbol
    double e1;  // Type-II exponent, bits per symbol
};

double binary_entropy(double t);

// D_b(p || q) in bits, with 0 log 0 = 0.  q in {0,1} is allowed only when p = q.
double binary_kl(double p, double q);

// E0 = D_b(t || p0), E1 = 1 - H_b(t); valid for p0 <= t <= 1/2.
ExponentPoint exponents(double t, double p0);

struct BetaBounds {
    double lower = 0.0;
    double upper = 0.0;
    double log2_lower = 0.0;
    double log2_upper = 0.0;
};

// [8 gamma_t (1 - gamma_t/n)]^(-1/2) 2^(-n D) <= beta_n <= 2^(-n D) with
// D = D_b(1 - gamma_t/n || 1/2); valid for 1 <= gamma_t <= n/2.
BetaBounds beta_bounds(int n, int gamma_t);

struct AlphaBounds {
    double lower = 0.0;
    double upper = 0.0;
    double delta = 0.0;        // sum_i (kappa^(i/2) - kappa^(-i/2)) N_i, kappa = ((1-p0)/p0)^2
    double delta_prime = 0.0;  // 4 pi^2 e^-3 sum_{i>=1} i^(-1/2) (p0/(1-p0))^(i+2) N_i
    double log2_lower = 0.0;
    double log2_upper = 0.0;
};

// upper = (delta/N) 2^(-n D), lower = (delta_prime/N) [8(gamma_t+1)(1-(gamma_t+1)/n)]^(-1/2)
// 2^(-n D) with D = D_b((gamma_t+1)/n || p0).  Valid for 0 < p0 <= (gamma_t+1)/n
// and gamma_t <= n-2.  The delta_prime sum starts at i = 1; its i = 0 term is
// singular.  Evaluated in the log2 domain throughout.
AlphaBounds alpha_bounds(const CosetLeaderSpectrum& s, double p0, int gamma_t);

struct ConvergenceRow {
    int n = 0;
    int gamma_t = 0;
    double alpha_exponent = 0.0;  // -(1/n) log2 of the alpha proxy
    double beta_exponent = 0.0;   // -(1/n) log2 of the exact beta
    double e0 = 0.0;
    double e1 = 0.0;
};

// For each n: gamma_t = round(t*n), beta from the closed-form binomial sum
// (log domain, so n is unrestricted), alpha proxy = geometric midpoint of the
// spectrum-free binomial-tail sandwich around P(Bin(n, p0) > gamma_t).
std::vector<ConvergenceRow> exponent_convergence_report(double t, double p0,
                                                        const std::vector<int>& n_list);

// log2 of sum_{gamma <= gamma_t} C(n, gamma); works for any n via lgamma.
double log2_binomial_head(int n, int gamma_t);

// ROC rows with bound columns on their validity windows (blank elsewhere):
// gamma_t,alpha,alpha_lower,alpha_upper,beta,beta_lower,beta_upper plus the
// same columns in log2 with the _log2 suffix.
std::string bounds_csv(const CosetLeaderSpectrum& s, double p0);

}  // namespace cosetdht
