#include "cosetdht/spectrum_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "cosetdht/binomial.hpp"
#include "cosetdht/error_model.hpp"
#include "numeric.hpp"

namespace cosetdht {

namespace {

void check_instance(const IlpInstance& inst) {
    if (inst.weights.size() != inst.capacities.size())
        throw InputError("ILP instance: weights and capacities have different sizes");
    if (inst.weights.empty()) throw InputError("ILP instance: no variables");
    unsigned __int128 cap_sum = 0;
    for (size_t i = 0; i < inst.weights.size(); ++i) {
        if (!(inst.weights[i] >= 0.0))
            throw InputError("ILP instance: weight " + std::to_string(i + 1) + " is negative");
        if (inst.capacities[i] < 1)
            throw InputError("ILP instance: capacity " + std::to_string(i + 1) + " is zero");
        cap_sum += inst.capacities[i];
    }
    if (cap_sum < inst.total)
        throw Infeasible("ILP instance: capacities sum below total = " +
                         std::to_string(inst.total));
}

}  // namespace

std::vector<uint64_t> solve_ilp(const IlpInstance& inst) {
    check_instance(inst);
    size_t rho = inst.weights.size();
    std::vector<size_t> order(rho);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return inst.weights[a] < inst.weights[b]; });
    std::vector<uint64_t> counts(rho, 0);
    uint64_t left = inst.total;
    for (size_t idx : order) {
        uint64_t take = std::min(left, inst.capacities[idx]);
        counts[idx] = take;
        left -= take;
        if (left == 0) break;
    }
    return counts;
}

namespace {

struct BruteState {
    const IlpInstance* inst;
    std::vector<uint64_t> point;
    std::vector<uint64_t> best_point;
    double best_obj = HUGE_VAL;
    std::vector<unsigned __int128> cap_suffix;  // capacity available at index >= i

    void rec(size_t i, uint64_t left, double obj) {
        if (left > cap_suffix[i]) return;  // cannot place the remainder
        if (i == inst->weights.size()) {
            if (obj < best_obj || (obj == best_obj && point > best_point)) {
                best_obj = obj;
                best_point = point;
            }
            return;
        }
        uint64_t hi = std::min<uint64_t>(left, inst->capacities[i]);
        for (uint64_t v = 0; v <= hi; ++v) {
            point[i] = v;
            rec(i + 1, left - v, obj + inst->weights[i] * static_cast<double>(v));
        }
        point[i] = 0;
    }
};

}  // namespace

std::vector<uint64_t> bruteforce_ilp(const IlpInstance& inst) {
    check_instance(inst);
    unsigned __int128 points = 1;
    for (uint64_t c : inst.capacities) {
        points *= c + 1;
        if (points > 10000000)
            throw TooLarge("bruteforce_ilp: feasible box exceeds 1e7 points");
    }
    BruteState st;
    st.inst = &inst;
    st.point.assign(inst.weights.size(), 0);
    st.cap_suffix.assign(inst.weights.size() + 1, 0);
    for (size_t i = inst.weights.size(); i-- > 0;)
        st.cap_suffix[i] = st.cap_suffix[i + 1] + inst.capacities[i];
    st.rec(0, inst.total, 0.0);
    if (st.best_point.empty())
        throw InternalError("bruteforce_ilp found no feasible point in a feasible instance");
    return st.best_point;
}

int sphere_covering_rho(int n, int k) {
    unsigned __int128 need = static_cast<unsigned __int128>(1) << (n - k);
    unsigned __int128 balls = 0;
    for (int r = 0; r <= n; ++r) {
        balls += binomial(n, r);
        if (balls >= need) return r;
    }
    throw InternalError("sphere_covering_rho: 2^n below 2^(n-k)");
}

OptimizationOutcome run_algorithm1(int n, int k, double p0, double epsilon) {
    if (n < 2 || n > 64 || k < 1 || k >= n)
        throw OutOfRange("need 1 <= k < n <= 64, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
    HypothesisConfig cfg{p0, 0.5, epsilon};
    cfg.validate();

    int rho = n - k;  // Singleton bound
    IlpInstance inst;
    inst.capacities.resize(static_cast<size_t>(rho));
    for (int i = 1; i <= rho; ++i)
        inst.capacities[static_cast<size_t>(i - 1)] = binomial(n, i);
    inst.total = (1ull << rho) - 1;

    double inv_n_cosets = std::ldexp(1.0, -rho);
    for (int gamma_t = 0; gamma_t <= n; ++gamma_t) {
        std::vector<double> w = alpha_weights(n, rho, p0, gamma_t);
        inst.weights.assign(w.begin() + 1, w.end());
        std::vector<uint64_t> counts = solve_ilp(inst);
        KahanSum acc;
        acc.add(w[0]);
        for (int i = 1; i <= rho; ++i)
            acc.add(w[static_cast<size_t>(i)] * static_cast<double>(counts[static_cast<size_t>(i - 1)]));
        double alpha = std::min(acc.sum * inv_n_cosets, 1.0);
        if (alpha <= epsilon) {
            std::vector<uint64_t> full(1, 1);
            full.insert(full.end(), counts.begin(), counts.end());
            while (full.size() > 1 && full.back() == 0) full.pop_back();
            OptimizationOutcome out;
            out.n = n;
            out.k = k;
            out.p0 = p0;
            out.epsilon = epsilon;
            out.gamma_t_star = gamma_t;
            out.spectrum_star = CosetLeaderSpectrum{n, k, std::move(full)};
            std::string err = check_spectrum(out.spectrum_star);
            if (!err.empty()) throw InternalError("optimizer produced an invalid spectrum: " + err);
            out.alpha_achieved = alpha;
            out.beta_achieved = beta_exact(out.spectrum_star, gamma_t);
            out.iterations = gamma_t + 1;
            return out;
        }
    }
    throw InternalError("threshold scan passed gamma_t = n without meeting the constraint");
}

std::string outcome_to_json(const OptimizationOutcome& o) {
    nlohmann::ordered_json j;
    j["n"] = o.n;
    j["k"] = o.k;
    j["p0"] = o.p0;
    j["epsilon"] = o.epsilon;
    j["gamma_t_star"] = o.gamma_t_star;
    j["rho_star"] = o.spectrum_star.rho();
    j["counts"] = o.spectrum_star.counts;
    j["alpha"] = o.alpha_achieved;
    j["beta"] = o.beta_achieved;
    j["sphere_covering_rho"] = sphere_covering_rho(o.n, o.k);
    j["note"] =
        "hypothetical spectrum: lowest weights filled to capacity, so rho_star equals the "
        "sphere-covering minimum; no linear code is claimed to realize these counts";
    return j.dump();
}

}  // namespace cosetdht
