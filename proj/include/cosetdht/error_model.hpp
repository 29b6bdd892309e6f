#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosetdht/coset_spectrum.hpp"

namespace cosetdht {

// H0: Y = X xor W with W ~ Bern(p0); H1: W ~ Bern(1/2) so X, Y are independent.
struct HypothesisConfig {
    double p0 = 0.0;
    double p1 = 0.5;
    double epsilon = 0.0;

    void validate() const;
};

struct ErrorPair {
    int gamma_t;
    double alpha;
    double beta;
};

// Gamma_{gamma,i,u} = C(i,u) * C(n-i, gamma-u).  Counts the weight-gamma
// outcomes of e_i xor w that flip u of the i support bits; such w has weight
// j = i + gamma - 2u.
unsigned __int128 gamma_coefficient(int n, int gamma, int i, int u);

// W_alpha[i] = P( wt(e_i xor W) > gamma_t ), W ~ Bern(p0)^n: the Type-I
// contribution of one coset with leader weight i.
std::vector<double> alpha_weights(int n, int rho, double p0, int gamma_t);

// W_beta[i] = 2^-n * sum_{gamma <= gamma_t} sum_u Gamma_{gamma,i,u}.  Every
// entry collapses to the same binomial tail; computed by the double sum so the
// identity stays a real test.
std::vector<double> beta_weights(int n, int rho, int gamma_t);

// alpha_n = (1/N) sum_i W_alpha[i] * N_i over the spectrum.
double alpha_exact(const CosetLeaderSpectrum& s, double p0, int gamma_t);

// beta_n = 2^-n * sum_{gamma <= gamma_t} C(n, gamma), independent of the code.
double beta_closed_form(int n, int gamma_t);

// Evaluates the weight decomposition and cross-checks it against the closed
// form (relative 1e-12); returns the closed form.
double beta_exact(const CosetLeaderSpectrum& s, int gamma_t);

// One (alpha, beta) point per threshold gamma_t = 0..n.
std::vector<ErrorPair> roc_curve(const CosetLeaderSpectrum& s, double p0);

// Header gamma_t,alpha,beta; probabilities with 12 significant digits.
std::string curve_to_csv(const std::vector<ErrorPair>& curve);

}  // namespace cosetdht
