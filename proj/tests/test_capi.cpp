// SPDX-License-Identifier: Apache-2.0
// Exercises the C interface end to end through files only, the way an
// external caller would.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "robuc.h"

namespace {

const std::string kData = ROBUC_DATA_DIR;

// small deterministic availability history for the 1-bus system's wind farm
std::string write_series(const std::string& path) {
    std::ofstream out(path);
    double u = 0.0;
    unsigned state = 12345;
    auto noise = [&state]() {  // uniform-ish in [-1, 1], fully deterministic
        state = state * 1664525u + 1013904223u;
        return static_cast<double>((state >> 8) % 2001) / 1000.0 - 1.0;
    };
    for (int day = 0; day < 40; ++day) {
        if (day > 0) out << "\n";
        for (int t = 0; t < 6; ++t) {
            u = 0.5 * u + noise();
            const double mw = std::min(70.0, std::max(0.0, 35.0 + 6.0 * u));
            out << t << " w1 " << mw << "\n";
        }
    }
    return path;
}

}  // namespace

TEST_CASE("version and error reporting") {
    CHECK(robuc_version() != nullptr);
    CHECK(std::string(robuc_version()).find('.') != std::string::npos);

    robuc_system* sys = nullptr;
    CHECK(robuc_system_read("/nonexistent/x.sys", &sys) == ROBUC_ERR_PARSE);
    CHECK(sys == nullptr);
    CHECK(std::string(robuc_last_error()).find("x.sys") != std::string::npos);
    CHECK(robuc_system_read(nullptr, &sys) == ROBUC_ERR_PARSE);
}

TEST_CASE("system accessors") {
    robuc_system* sys = nullptr;
    REQUIRE(robuc_system_read((kData + "/bus1.sys").c_str(), &sys) == ROBUC_OK);
    CHECK(robuc_system_horizon(sys) == 6);
    CHECK(robuc_system_num_gen(sys) == 2);
    CHECK(robuc_system_num_ren(sys) == 1);
    robuc_system_free(sys);

    REQUIRE(robuc_system_read((kData + "/bus6.sys").c_str(), &sys) == ROBUC_OK);
    CHECK(robuc_system_horizon(sys) == 12);
    CHECK(robuc_system_num_gen(sys) == 4);
    CHECK(robuc_system_num_ren(sys) == 3);
    robuc_system_free(sys);
}

TEST_CASE("estimate, solve, simulate through the C surface") {
    robuc_system* sys = nullptr;
    REQUIRE(robuc_system_read((kData + "/bus1.sys").c_str(), &sys) == ROBUC_OK);
    const std::string series = write_series("/tmp/capi_series.ts");

    robuc_set* set = nullptr;
    double captured = 0.0;
    REQUIRE(robuc_estimate(sys, series.c_str(), 6, 1, 1, 1.0, 1.0, "linf", &set,
                           &captured) == ROBUC_OK);
    REQUIRE(set != nullptr);
    CHECK(captured == doctest::Approx(1.0));  // one factor for one unit
    CHECK(robuc_set_gamma(set) == doctest::Approx(1.0));

    // set file round trip preserves the budget
    REQUIRE(robuc_set_write("/tmp/capi_set.dus", set) == ROBUC_OK);
    robuc_set* set2 = nullptr;
    REQUIRE(robuc_set_read("/tmp/capi_set.dus", &set2) == ROBUC_OK);
    CHECK(robuc_set_gamma(set2) == doctest::Approx(1.0));
    robuc_set_free(set2);

    robuc_set* wide = nullptr;
    REQUIRE(robuc_set_with_gamma(set, 2.0, &wide) == ROBUC_OK);
    CHECK(robuc_set_gamma(wide) == doctest::Approx(2.0));

    robuc_uc_options opts;
    robuc_uc_options_init(&opts);
    CHECK(opts.gap == doctest::Approx(0.01));
    CHECK(opts.screening == 1);
    opts.gap = 1e-4;

    robuc_solution* sol = nullptr;
    REQUIRE(robuc_solve_uc(sys, set, &opts, &sol) == ROBUC_OK);
    REQUIRE(sol != nullptr);
    CHECK(robuc_solution_certified(sol) == 1);
    const double obj = robuc_solution_objective(sol);
    CHECK(obj > 0.0);
    CHECK(obj == doctest::Approx(robuc_solution_commitment_cost(sol) +
                                 robuc_solution_worst_case_cost(sol)));

    // widening the budget cannot cheapen the robust solution
    robuc_solution* sol_wide = nullptr;
    REQUIRE(robuc_solve_uc(sys, wide, &opts, &sol_wide) == ROBUC_OK);
    CHECK(robuc_solution_objective(sol_wide) >= obj - 1e-6);
    robuc_solution_free(sol_wide);
    robuc_set_free(wide);

    REQUIRE(robuc_solution_write("/tmp/capi_sol.ucs", sol) == ROBUC_OK);
    robuc_solution* sol2 = nullptr;
    REQUIRE(robuc_solution_read("/tmp/capi_sol.ucs", &sol2) == ROBUC_OK);
    CHECK(robuc_solution_objective(sol2) == doctest::Approx(obj).epsilon(1e-9));
    robuc_solution_free(sol2);

    robuc_solution* det = nullptr;
    REQUIRE(robuc_solve_det_uc(sys, set, 1.0, 50, 7, &det) == ROBUC_OK);
    CHECK(robuc_solution_objective(det) > 0.0);
    CHECK(robuc_solution_certified(det) == 1);

    robuc_sim_options sopts;
    robuc_sim_options_init(&sopts);
    CHECK(sopts.trajectories == 100);
    CHECK(sopts.penalty_price == doctest::Approx(5000.0));
    sopts.trajectories = 8;
    sopts.seed = 3;

    robuc_report* rep = nullptr;
    REQUIRE(robuc_simulate(sys, sol, set, &sopts, &rep) == ROBUC_OK);
    REQUIRE(rep != nullptr);
    CHECK(robuc_report_metric(rep, "completed") == doctest::Approx(8.0));
    CHECK(robuc_report_metric(rep, "partial") == doctest::Approx(0.0));
    CHECK(robuc_report_metric(rep, "cost_avg") > 0.0);
    CHECK(robuc_report_metric(rep, "cost_cvar") >=
          robuc_report_metric(rep, "cost_avg") - 1e-9);
    CHECK(std::isnan(robuc_report_metric(rep, "no_such_metric")));

    char buf[600];
    CHECK(robuc_report_summary(rep, buf, sizeof buf) > 0);
    CHECK(std::string(buf).find("Cost Avg") != std::string::npos);

    REQUIRE(robuc_report_write("/tmp/capi_rep.txt", rep) == ROBUC_OK);
    robuc_report* rep2 = nullptr;
    REQUIRE(robuc_report_read("/tmp/capi_rep.txt", &rep2) == ROBUC_OK);
    CHECK(robuc_report_metric(rep2, "cost_avg") ==
          doctest::Approx(robuc_report_metric(rep, "cost_avg")).epsilon(1e-11));
    robuc_report_free(rep2);

    // seed determinism across separate simulate calls
    robuc_report* rep3 = nullptr;
    REQUIRE(robuc_simulate(sys, sol, set, &sopts, &rep3) == ROBUC_OK);
    CHECK(robuc_report_metric(rep3, "cost_avg") ==
          robuc_report_metric(rep, "cost_avg"));
    robuc_report_free(rep3);

    robuc_report_free(rep);
    robuc_solution_free(det);
    robuc_solution_free(sol);

    // unit-count mismatch between system and set surfaces as a parse error
    robuc_system* big = nullptr;
    REQUIRE(robuc_system_read((kData + "/bus6.sys").c_str(), &big) == ROBUC_OK);
    robuc_solution* bad = nullptr;
    CHECK(robuc_solve_uc(big, set, &opts, &bad) != ROBUC_OK);
    CHECK(bad == nullptr);
    CHECK(robuc_last_error()[0] != '\0');
    robuc_system_free(big);

    robuc_set_free(set);
    robuc_system_free(sys);
}
