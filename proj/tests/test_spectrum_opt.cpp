#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cosetdht/binomial.hpp"
#include "cosetdht/coset_spectrum.hpp"
#include "cosetdht/error_model.hpp"
#include "cosetdht/gf2_codes.hpp"
#include "cosetdht/spectrum_opt.hpp"

using namespace cosetdht;

namespace {

double objective(const IlpInstance& inst, const std::vector<uint64_t>& point) {
    double obj = 0.0;
    for (size_t i = 0; i < point.size(); ++i)
        obj += inst.weights[i] * static_cast<double>(point[i]);
    return obj;
}

IlpInstance weight_fill_instance(int n, int k, double p0, int gamma_t) {
    int rho = n - k;
    std::vector<double> w = alpha_weights(n, rho, p0, gamma_t);
    IlpInstance inst;
    inst.weights.assign(w.begin() + 1, w.end());
    for (int i = 1; i <= rho; ++i) inst.capacities.push_back(binomial(n, i));
    inst.total = (1ull << rho) - 1;
    return inst;
}

}  // namespace

TEST_CASE("solve_ilp greedy fill") {
    SUBCASE("ascending weights reproduce dense low-weight fills") {
        IlpInstance h74 = weight_fill_instance(7, 4, 0.05, 2);
        CHECK(solve_ilp(h74) == std::vector<uint64_t>{7, 0, 0});

        IlpInstance golay24 = weight_fill_instance(24, 12, 0.05, 3);
        std::vector<uint64_t> expect(12, 0);
        expect[0] = 24;
        expect[1] = 276;
        expect[2] = 2024;
        expect[3] = 1771;
        CHECK(solve_ilp(golay24) == expect);
    }
    SUBCASE("non-monotone weights") {
        IlpInstance inst{{5.0, 1.0, 3.0}, {2, 2, 2}, 4};
        std::vector<uint64_t> point = solve_ilp(inst);
        CHECK(point == std::vector<uint64_t>{0, 2, 2});
        CHECK(objective(inst, point) == 8.0);
        CHECK(bruteforce_ilp(inst) == point);
    }
    SUBCASE("ties go to the smaller index") {
        IlpInstance inst{{2.0, 2.0}, {5, 5}, 6};
        CHECK(solve_ilp(inst) == std::vector<uint64_t>{5, 1});
        CHECK(bruteforce_ilp(inst) == std::vector<uint64_t>{5, 1});
    }
    SUBCASE("degenerate instances") {
        CHECK(solve_ilp({{1.0, 2.0}, {3, 3}, 0}) == std::vector<uint64_t>{0, 0});
        CHECK(solve_ilp({{1.0}, {4}, 4}) == std::vector<uint64_t>{4});
        CHECK(bruteforce_ilp({{1.0, 2.0}, {3, 3}, 0}) == std::vector<uint64_t>{0, 0});
        CHECK(bruteforce_ilp({{1.0}, {4}, 4}) == std::vector<uint64_t>{4});
    }
    SUBCASE("infeasible and malformed instances") {
        CHECK_THROWS_AS(solve_ilp({{1.0, 1.0}, {2, 2}, 5}), Infeasible);
        CHECK_THROWS_AS(bruteforce_ilp({{1.0, 1.0}, {2, 2}, 5}), Infeasible);
        CHECK_THROWS_AS(solve_ilp({{1.0}, {2, 2}, 1}), InputError);       // size mismatch
        CHECK_THROWS_AS(solve_ilp({{-1.0, 1.0}, {2, 2}, 1}), InputError); // negative weight
        CHECK_THROWS_AS(solve_ilp({{1.0, 1.0}, {0, 2}, 1}), InputError);  // zero capacity
    }
    SUBCASE("bruteforce size guard") {
        IlpInstance big{std::vector<double>(9, 1.0), std::vector<uint64_t>(9, 20), 10};
        CHECK_THROWS_AS(bruteforce_ilp(big), TooLarge);
        CHECK_NOTHROW(solve_ilp(big));
    }
}

TEST_CASE("greedy matches brute force on random instances") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<int> rho_dist(1, 5);
    std::uniform_int_distribution<uint64_t> cap_dist(1, 20);
    std::uniform_real_distribution<double> weight_dist(0.0, 1.0);

    SUBCASE("continuous weights, optimum almost surely unique") {
        for (int trial = 0; trial < 300; ++trial) {
            CAPTURE(trial);
            IlpInstance inst;
            int rho = rho_dist(rng);
            uint64_t cap_sum = 0;
            for (int i = 0; i < rho; ++i) {
                inst.weights.push_back(weight_dist(rng));
                inst.capacities.push_back(cap_dist(rng));
                cap_sum += inst.capacities.back();
            }
            inst.total = std::uniform_int_distribution<uint64_t>(0, cap_sum)(rng);

            std::vector<uint64_t> fast = solve_ilp(inst);
            std::vector<uint64_t> slow = bruteforce_ilp(inst);
            CHECK(objective(inst, fast) == doctest::Approx(objective(inst, slow)).epsilon(1e-12));
            CHECK(fast == slow);
        }
    }
    SUBCASE("dyadic weights, frequent exact ties") {
        // eighths keep all products and sums exact, so equal objectives are
        // mathematically equal and the lexicographic tie rule is well-defined
        std::uniform_int_distribution<int> eighths(0, 16);
        for (int trial = 0; trial < 300; ++trial) {
            CAPTURE(trial);
            IlpInstance inst;
            int rho = rho_dist(rng);
            uint64_t cap_sum = 0;
            for (int i = 0; i < rho; ++i) {
                inst.weights.push_back(eighths(rng) / 8.0);
                inst.capacities.push_back(cap_dist(rng));
                cap_sum += inst.capacities.back();
            }
            inst.total = std::uniform_int_distribution<uint64_t>(0, cap_sum)(rng);

            std::vector<uint64_t> fast = solve_ilp(inst);
            std::vector<uint64_t> slow = bruteforce_ilp(inst);
            CHECK(objective(inst, fast) == objective(inst, slow));
            CHECK(fast == slow);  // both resolve ties to the lexicographically greatest point
        }
    }
}

TEST_CASE("sphere_covering_rho") {
    CHECK(sphere_covering_rho(7, 4) == 1);
    CHECK(sphere_covering_rho(8, 4) == 2);
    CHECK(sphere_covering_rho(15, 11) == 1);
    CHECK(sphere_covering_rho(16, 5) == 4);
    CHECK(sphere_covering_rho(23, 12) == 3);
    CHECK(sphere_covering_rho(24, 12) == 4);
    CHECK(sphere_covering_rho(31, 11) == 7);
    CHECK(sphere_covering_rho(31, 26) == 1);
}

TEST_CASE("threshold scan on [7,4]") {
    OptimizationOutcome o = run_algorithm1(7, 4, 0.05, 0.06);
    CHECK(o.n == 7);
    CHECK(o.k == 4);
    CHECK(o.gamma_t_star == 2);
    CHECK(o.spectrum_star.counts == std::vector<uint64_t>{1, 7});
    CHECK(o.spectrum_star.rho() == 1);
    CHECK(o.alpha_achieved == doctest::Approx(0.0278104306640625).epsilon(1e-12));
    CHECK(o.beta_achieved == doctest::Approx(29.0 / 128.0).epsilon(1e-15));
    CHECK(o.iterations == 3);
    CHECK(check_spectrum(o.spectrum_star).empty());

    SUBCASE("a permissive budget stops at the first threshold") {
        OptimizationOutcome easy = run_algorithm1(7, 4, 0.05, 0.999);
        CHECK(easy.gamma_t_star == 0);
        CHECK(easy.spectrum_star.counts == std::vector<uint64_t>{1, 7});
        CHECK(easy.iterations == 1);
    }
    SUBCASE("gamma_t_star is minimal") {
        // the same optimal spectrum one threshold earlier still violates the budget
        CHECK(alpha_exact(o.spectrum_star, 0.05, o.gamma_t_star - 1) > 0.06);
    }
}

TEST_CASE("threshold scan reproduces every catalog spectrum") {
    const struct {
        int n, k;
        std::vector<uint64_t> counts;
    } cases[] = {
        {7, 4, {1, 7}},
        {8, 4, {1, 8, 7}},
        {15, 11, {1, 15}},
        {23, 12, {1, 23, 253, 1771}},
        {24, 12, {1, 24, 276, 2024, 1771}},
        {31, 26, {1, 31}},
    };
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        OptimizationOutcome o = run_algorithm1(c.n, c.k, 0.05, 0.06);
        CHECK(o.spectrum_star.counts == c.counts);
        CHECK(o.alpha_achieved <= 0.06);
        CHECK(o.spectrum_star.rho() == sphere_covering_rho(c.n, c.k));
    }
}

TEST_CASE("threshold scan on the larger hypothetical codes") {
    OptimizationOutcome o31 = run_algorithm1(31, 11, 0.05, 0.06);
    CHECK(o31.spectrum_star.rho() == 7);
    CHECK(o31.spectrum_star.counts ==
          std::vector<uint64_t>{1, 31, 465, 4495, 31465, 169911, 736281, 105927});
    CHECK(o31.alpha_achieved <= 0.06);

    OptimizationOutcome o16 = run_algorithm1(16, 5, 0.05, 0.06);
    CHECK(o16.spectrum_star.rho() == 4);
    CHECK(o16.spectrum_star.counts == std::vector<uint64_t>{1, 16, 120, 560, 1351});
    CHECK(o16.alpha_achieved <= 0.06);
}

TEST_CASE("beta grows as the budget tightens") {
    double prev_beta = -1.0;
    int prev_gamma = -1;
    for (double eps : {0.5, 0.2, 0.06, 0.01, 1e-4}) {
        OptimizationOutcome o = run_algorithm1(23, 12, 0.05, eps);
        CHECK(o.alpha_achieved <= eps);
        CHECK(o.gamma_t_star >= prev_gamma);
        CHECK(o.beta_achieved >= prev_beta);
        prev_gamma = o.gamma_t_star;
        prev_beta = o.beta_achieved;
    }
}

TEST_CASE("run_algorithm1 validates its inputs") {
    CHECK_THROWS_AS(run_algorithm1(7, 7, 0.05, 0.06), InputError);
    CHECK_THROWS_AS(run_algorithm1(7, 0, 0.05, 0.06), InputError);
    CHECK_THROWS_AS(run_algorithm1(65, 4, 0.05, 0.06), InputError);
    CHECK_THROWS_AS(run_algorithm1(7, 4, 0.5, 0.06), OutOfRange);
    CHECK_THROWS_AS(run_algorithm1(7, 4, -0.1, 0.06), OutOfRange);
    CHECK_THROWS_AS(run_algorithm1(7, 4, 0.05, 0.0), OutOfRange);
    CHECK_THROWS_AS(run_algorithm1(7, 4, 0.05, 1.0), OutOfRange);
}

TEST_CASE("outcome JSON shape") {
    OptimizationOutcome o = run_algorithm1(7, 4, 0.05, 0.06);
    std::string j = outcome_to_json(o);
    CHECK(j.find("\"n\":7") != std::string::npos);
    CHECK(j.find("\"k\":4") != std::string::npos);
    CHECK(j.find("\"gamma_t_star\":2") != std::string::npos);
    CHECK(j.find("\"rho_star\":1") != std::string::npos);
    CHECK(j.find("\"counts\":[1,7]") != std::string::npos);
    CHECK(j.find("\"sphere_covering_rho\":1") != std::string::npos);
    CHECK(j.find("\"note\":") != std::string::npos);
}
