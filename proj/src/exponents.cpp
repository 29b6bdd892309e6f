#include "cosetdht/exponents.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "cosetdht/error_model.hpp"
#include "numeric.hpp"

namespace cosetdht {

double binary_entropy(double t) {
    if (!(t >= 0.0 && t <= 1.0))
        throw OutOfRange("binary_entropy: t = " + std::to_string(t) + " outside [0, 1]");
    if (t == 0.0 || t == 1.0) return 0.0;
    return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t);
}

double binary_kl(double p, double q) {
    if (!(p >= 0.0 && p <= 1.0))
        throw OutOfRange("binary_kl: p = " + std::to_string(p) + " outside [0, 1]");
    if (!(q > 0.0 && q < 1.0)) {
        if (q == p) return 0.0;  // degenerate but identical distributions
        throw OutOfRange("binary_kl: q = " + std::to_string(q) + " outside (0, 1)");
    }
    double d = 0.0;
    if (p > 0.0) d += p * std::log2(p / q);
    if (p < 1.0) d += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
    return d;
}

ExponentPoint exponents(double t, double p0) {
    if (!(p0 >= 0.0 && p0 < 0.5))
        throw OutOfRange("exponents: p0 = " + std::to_string(p0) + " outside [0, 1/2)");
    if (!(t >= p0 && t <= 0.5))
        throw OutOfRange("exponents: t = " + std::to_string(t) + " outside [p0, 1/2]");
    return {t, binary_kl(t, p0), 1.0 - binary_entropy(t)};
}

BetaBounds beta_bounds(int n, int gamma_t) {
    if (n < 1 || n > 64) throw OutOfRange("beta_bounds: n = " + std::to_string(n) + " outside [1, 64]");
    if (gamma_t < 1 || 2 * gamma_t > n)
        throw OutOfRange("beta_bounds: gamma_t = " + std::to_string(gamma_t) +
                         " outside [1, n/2]");
    double t = static_cast<double>(gamma_t) / n;
    BetaBounds b;
    b.log2_upper = -n * binary_kl(1.0 - t, 0.5);
    b.log2_lower = b.log2_upper - 0.5 * std::log2(8.0 * gamma_t * (1.0 - t));
    b.upper = std::exp2(b.log2_upper);
    b.lower = std::exp2(b.log2_lower);
    return b;
}

AlphaBounds alpha_bounds(const CosetLeaderSpectrum& s, double p0, int gamma_t) {
    std::string err = check_spectrum(s);
    if (!err.empty()) throw InputError("alpha_bounds: " + err);
    if (p0 == 0.0) throw DegenerateP0("alpha_bounds: p0 = 0 makes kappa infinite");
    if (!(p0 > 0.0 && p0 < 0.5))
        throw OutOfRange("alpha_bounds: p0 = " + std::to_string(p0) + " outside (0, 1/2)");
    if (s.coset_count() < 2)
        throw OutOfRange("alpha_bounds: spectrum must describe at least two cosets");
    int n = s.n;
    if (gamma_t < 0 || gamma_t > n - 2)
        throw OutOfRange("alpha_bounds: gamma_t = " + std::to_string(gamma_t) +
                         " outside [0, n-2]");
    double t1 = static_cast<double>(gamma_t + 1) / n;
    if (t1 < p0)
        throw OutOfRange("alpha_bounds: (gamma_t+1)/n = " + std::to_string(t1) +
                         " below p0 = " + std::to_string(p0));

    double log2_kappa = 2.0 * (std::log2(1.0 - p0) - std::log2(p0));
    double log2_ratio = -0.5 * log2_kappa;  // log2(p0 / (1-p0))
    std::vector<double> dterms, dpterms;
    for (int i = 1; i <= s.rho(); ++i) {
        uint64_t ni = s.counts[static_cast<size_t>(i)];
        if (ni == 0) continue;
        double log2_ni = std::log2(static_cast<double>(ni));
        // kappa^(i/2) - kappa^(-i/2) = kappa^(i/2) (1 - kappa^-i)
        dterms.push_back(log2_ni + 0.5 * i * log2_kappa +
                         std::log1p(-std::exp2(-i * log2_kappa)) / M_LN2);
        dpterms.push_back(log2_ni - 0.5 * std::log2(static_cast<double>(i)) +
                          (i + 2) * log2_ratio);
    }
    double log2_delta = log2_sum_exp2(dterms);
    double log2_delta_prime =
        std::log2(4.0 * M_PI * M_PI) - 3.0 / M_LN2 + log2_sum_exp2(dpterms);

    double log2_n_cosets = static_cast<double>(s.n - s.k);
    double nd = n * binary_kl(t1, p0);
    AlphaBounds b;
    b.log2_upper = log2_delta - log2_n_cosets - nd;
    b.log2_lower = log2_delta_prime - log2_n_cosets - nd -
                   0.5 * std::log2(8.0 * (gamma_t + 1) * (1.0 - t1));
    b.delta = std::exp2(log2_delta);
    b.delta_prime = std::exp2(log2_delta_prime);
    b.upper = std::exp2(b.log2_upper);
    b.lower = std::exp2(b.log2_lower);
    return b;
}

double log2_binomial_head(int n, int gamma_t) {
    if (n < 1) throw OutOfRange("log2_binomial_head: n = " + std::to_string(n) + " < 1");
    if (gamma_t < 0 || gamma_t > n)
        throw OutOfRange("log2_binomial_head: gamma_t outside [0, n]");
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(gamma_t) + 1);
    double lg_n1 = std::lgamma(n + 1.0);
    for (int g = 0; g <= gamma_t; ++g)
        terms.push_back((lg_n1 - std::lgamma(g + 1.0) - std::lgamma(n - g + 1.0)) / M_LN2);
    return log2_sum_exp2(terms);
}

std::vector<ConvergenceRow> exponent_convergence_report(double t, double p0,
                                                        const std::vector<int>& n_list) {
    ExponentPoint pt = exponents(t, p0);  // also validates t and p0
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        if (n < 1) throw OutOfRange("convergence report: n = " + std::to_string(n) + " < 1");
        int gamma_t = static_cast<int>(std::llround(t * n));
        ConvergenceRow row;
        row.n = n;
        row.gamma_t = gamma_t;
        row.beta_exponent = -(log2_binomial_head(n, gamma_t) - n) / n;
        if (gamma_t + 1 < n) {
            double t1 = static_cast<double>(gamma_t + 1) / n;
            // geometric midpoint of the binomial-tail sandwich around P(Bin(n,p0) > gamma_t)
            double log2_mid =
                -n * binary_kl(t1, p0) - 0.25 * std::log2(8.0 * (gamma_t + 1) * (1.0 - t1));
            row.alpha_exponent = -log2_mid / n;
        } else {
            row.alpha_exponent = std::numeric_limits<double>::quiet_NaN();
        }
        row.e0 = pt.e0;
        row.e1 = pt.e1;
        rows.push_back(row);
    }
    return rows;
}

std::string bounds_csv(const CosetLeaderSpectrum& s, double p0) {
    std::vector<ErrorPair> curve = roc_curve(s, p0);
    std::string out =
        "gamma_t,alpha,alpha_lower,alpha_upper,beta,beta_lower,beta_upper,"
        "alpha_log2,alpha_lower_log2,alpha_upper_log2,beta_log2,beta_lower_log2,beta_upper_log2\n";
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.12g", v);
        return std::string(buf);
    };
    int n = s.n;
    for (const auto& p : curve) {
        bool a_ok = p0 > 0.0 && p.gamma_t <= n - 2 &&
                    static_cast<double>(p.gamma_t + 1) / n >= p0 && s.coset_count() >= 2;
        bool b_ok = p.gamma_t >= 1 && 2 * p.gamma_t <= n;
        std::string al, au, all2, aul2, bl, bu, bll2, bul2;
        if (a_ok) {
            AlphaBounds ab = alpha_bounds(s, p0, p.gamma_t);
            al = num(ab.lower);
            au = num(ab.upper);
            all2 = num(ab.log2_lower);
            aul2 = num(ab.log2_upper);
        }
        if (b_ok) {
            BetaBounds bb = beta_bounds(n, p.gamma_t);
            bl = num(bb.lower);
            bu = num(bb.upper);
            bll2 = num(bb.log2_lower);
            bul2 = num(bb.log2_upper);
        }
        out += std::to_string(p.gamma_t) + "," + num(p.alpha) + "," + al + "," + au + "," +
               num(p.beta) + "," + bl + "," + bu + "," + num(std::log2(p.alpha)) + "," + all2 +
               "," + aul2 + "," + num(std::log2(p.beta)) + "," + bll2 + "," + bul2 + "\n";
    }
    return out;
}

}  // namespace cosetdht
