#include "cosetdht/error_model.hpp"

#include <cmath>
#include <cstdio>

#include "cosetdht/binomial.hpp"
#include "numeric.hpp"

namespace cosetdht {

void HypothesisConfig::validate() const {
    if (!(p0 >= 0.0 && p0 < 0.5))
        throw OutOfRange("p0 = " + std::to_string(p0) + " outside [0, 1/2)");
    if (p1 != 0.5) throw OutOfRange("p1 must be 1/2 for the independence test");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw OutOfRange("epsilon = " + std::to_string(epsilon) + " outside (0, 1)");
}

unsigned __int128 gamma_coefficient(int n, int gamma, int i, int u) {
    if (n < 0 || n > 64 || gamma < 0 || gamma > n || i < 0 || i > n)
        throw OutOfRange("gamma_coefficient: need 0 <= gamma, i <= n <= 64");
    if (u < 0 || u > std::min(gamma, i) || gamma - u > n - i)
        throw OutOfRange("gamma_coefficient: u = " + std::to_string(u) +
                         " outside [max(0, gamma-(n-i)), min(gamma, i)]");
    return static_cast<unsigned __int128>(binomial(i, u)) * binomial(n - i, gamma - u);
}

namespace {

void check_weight_args(int n, int rho, int gamma_t) {
    if (n < 1 || n > 64) throw OutOfRange("n = " + std::to_string(n) + " outside [1, 64]");
    if (rho < 0 || rho > n) throw OutOfRange("rho = " + std::to_string(rho) + " outside [0, n]");
    if (gamma_t < 0 || gamma_t > n)
        throw OutOfRange("gamma_t = " + std::to_string(gamma_t) + " outside [0, n]");
}

}  // namespace

std::vector<double> alpha_weights(int n, int rho, double p0, int gamma_t) {
    check_weight_args(n, rho, gamma_t);
    if (!(p0 >= 0.0 && p0 < 0.5))
        throw OutOfRange("p0 = " + std::to_string(p0) + " outside [0, 1/2)");

    std::vector<double> w(static_cast<size_t>(rho) + 1);
    if (p0 == 0.0) {
        // noiseless: the statistic equals the leader weight exactly
        for (int i = 0; i <= rho; ++i) w[static_cast<size_t>(i)] = (i > gamma_t) ? 1.0 : 0.0;
        return w;
    }
    double lp = std::log2(p0), lq = std::log2(1.0 - p0);
    for (int i = 0; i <= rho; ++i) {
        KahanSum acc;
        for (int gamma = gamma_t + 1; gamma <= n; ++gamma) {
            int u_lo = std::max(0, gamma - (n - i)), u_hi = std::min(gamma, i);
            for (int u = u_lo; u <= u_hi; ++u) {
                int j = i + gamma - 2 * u;
                acc.add(std::exp2(log2_u128(gamma_coefficient(n, gamma, i, u)) + j * lp +
                                  (n - j) * lq));
            }
        }
        w[static_cast<size_t>(i)] = std::min(acc.sum, 1.0);
    }
    return w;
}

std::vector<double> beta_weights(int n, int rho, int gamma_t) {
    check_weight_args(n, rho, gamma_t);
    std::vector<double> w(static_cast<size_t>(rho) + 1);
    for (int i = 0; i <= rho; ++i) {
        unsigned __int128 sum = 0;  // sum of Gamma over gamma <= gamma_t can reach 2^n
        for (int gamma = 0; gamma <= gamma_t; ++gamma) {
            int u_lo = std::max(0, gamma - (n - i)), u_hi = std::min(gamma, i);
            for (int u = u_lo; u <= u_hi; ++u) sum += gamma_coefficient(n, gamma, i, u);
        }
        w[static_cast<size_t>(i)] = std::ldexp(u128_to_double(sum), -n);
    }
    return w;
}

double alpha_exact(const CosetLeaderSpectrum& s, double p0, int gamma_t) {
    std::string err = check_spectrum(s);
    if (!err.empty()) throw InputError("alpha_exact: " + err);
    if (gamma_t < 0 || gamma_t > s.n)
        throw OutOfRange("gamma_t = " + std::to_string(gamma_t) + " outside [0, n]");
    int rho = s.rho();
    double inv_n_cosets = std::ldexp(1.0, -(s.n - s.k));
    std::vector<double> w = alpha_weights(s.n, rho, p0, gamma_t);
    KahanSum acc;
    for (int i = 0; i <= rho; ++i)
        acc.add(w[static_cast<size_t>(i)] * static_cast<double>(s.counts[static_cast<size_t>(i)]));
    return std::min(acc.sum * inv_n_cosets, 1.0);
}

double beta_closed_form(int n, int gamma_t) {
    check_weight_args(n, 0, gamma_t);
    unsigned __int128 sum = 0;
    for (int gamma = 0; gamma <= gamma_t; ++gamma) sum += binomial(n, gamma);
    return std::ldexp(u128_to_double(sum), -n);
}

double beta_exact(const CosetLeaderSpectrum& s, int gamma_t) {
    std::string err = check_spectrum(s);
    if (!err.empty()) throw InputError("beta_exact: " + err);
    int rho = s.rho();
    std::vector<double> w = beta_weights(s.n, rho, gamma_t);
    double inv_n_cosets = std::ldexp(1.0, -(s.n - s.k));
    KahanSum acc;
    for (int i = 0; i <= rho; ++i)
        acc.add(w[static_cast<size_t>(i)] * static_cast<double>(s.counts[static_cast<size_t>(i)]));
    double decomposed = acc.sum * inv_n_cosets;
    double closed = beta_closed_form(s.n, gamma_t);
    if (std::abs(decomposed - closed) > 1e-12 * closed)
        throw InternalError("beta decomposition " + std::to_string(decomposed) +
                            " disagrees with the closed form " + std::to_string(closed));
    return closed;
}

std::vector<ErrorPair> roc_curve(const CosetLeaderSpectrum& s, double p0) {
    std::vector<ErrorPair> curve;
    curve.reserve(static_cast<size_t>(s.n) + 1);
    for (int gamma_t = 0; gamma_t <= s.n; ++gamma_t)
        curve.push_back({gamma_t, alpha_exact(s, p0, gamma_t), beta_exact(s, gamma_t)});
    for (size_t i = 1; i < curve.size(); ++i) {
        if (curve[i].alpha > curve[i - 1].alpha + 1e-12)
            throw InternalError("alpha is not non-increasing along the ROC curve");
        if (curve[i].beta < curve[i - 1].beta - 1e-12)
            throw InternalError("beta is not non-decreasing along the ROC curve");
    }
    return curve;
}

std::string curve_to_csv(const std::vector<ErrorPair>& curve) {
    std::string out = "gamma_t,alpha,beta\n";
    char buf[80];
    for (const auto& p : curve) {
        std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g\n", p.gamma_t, p.alpha, p.beta);
        out += buf;
    }
    return out;
}

}  // namespace cosetdht
