#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "common/error.hpp"
#include "common/rng.hpp"
#include "helpers.hpp"
#include "lg/closed_form.hpp"
#include "lg/covariance_engine.hpp"
#include "lg/lg_values.hpp"
#include "lg/pathway.hpp"
#include "sv/estimator.hpp"
#include "sv/value_functions.hpp"

using namespace svpkg;
using svpkg::testing::random_lg_instance;

TEST_CASE("pathway conventions: identity at t = i-1, zero before") {
    ProcessInstance inst = random_lg_instance(5, 3, 2, 301);
    PathwayCoefficients paths(inst.lg, inst.policy);
    for (int i = 1; i <= 5; ++i) {
        CHECK(paths.block(i, i - 1) == Eigen::MatrixXd::Identity(3, 3));
        if (i >= 3) CHECK(paths.block(i, i - 3) == Eigen::MatrixXd::Zero(3, 3));
    }
}

TEST_CASE("zero policy collapses the pathway to pure state gains") {
    ProcessInstance inst = random_lg_instance(4, 2, 1, 303);
    PolicySpec zero_policy = inst.policy.zeroed();
    PathwayCoefficients paths(inst.lg, zero_policy);
    Eigen::MatrixXd expected =
        inst.lg.beta_s[1].transpose() * inst.lg.beta_s[0].transpose();
    CHECK((paths.block(1, 2) - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("scalar chain pathway product") {
    // beta_s = 0.5, beta_a = 0.2, theta = 1 each period: R_{1,2} = 0.7^2
    ProcessInstance inst = random_lg_instance(3, 1, 1, 305);
    for (auto& b : inst.lg.beta_s) b.setConstant(0.5);
    for (auto& b : inst.lg.beta_a) b.setConstant(0.2);
    for (auto& th : inst.policy.theta) th.setConstant(1.0);
    PathwayCoefficients paths(inst.lg, inst.policy);
    CHECK(paths.block(1, 2)(0, 0) == doctest::Approx(0.49).epsilon(1e-14));
}

TEST_CASE("recursive table equals literal products") {
    for (int trial = 0; trial < 20; ++trial) {
        int H = 3 + trial % 5;
        int n = 1 + trial % 3;
        int m = 1 + trial % 2;
        ProcessInstance inst = random_lg_instance(H, n, m, 400 + trial);
        PathwayCoefficients paths(inst.lg, inst.policy);
        for (int i = 1; i <= H; ++i)
            for (int t = 0; t <= H - 1; ++t) {
                Eigen::MatrixXd direct =
                    pathway_product_direct(inst.lg, inst.policy, i, t);
                CHECK((paths.block(i, t) - direct).cwiseAbs().maxCoeff() < 1e-12);
            }
    }
}

TEST_CASE("covariance engine matches the hand-expanded scalar chain") {
    ProcessInstance inst = random_lg_instance(2, 1, 1, 307);
    inst.lg.beta_s[0].setConstant(0.5);
    inst.lg.beta_a[0].setZero();
    inst.policy.theta[0].setZero();
    inst.lg.noise.scales.setConstant(1.0);
    inst.reward = RewardSpec::zero(1, 1, 2);
    inst.reward.state_coeff[0][0] = 1.0;
    inst.reward.state_coeff[1][0] = 1.0;
    CovarianceTable table = covariance_engine(inst.lg, inst.policy, inst.reward);
    CHECK(table.cov(1, 1)(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(table.cov(2, 2)(0, 0) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(table.cov(1, 2)(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(table.cumulative_reward_variance == doctest::Approx(3.25).epsilon(1e-14));
}

TEST_CASE("zero residual covariance produces zero output covariance") {
    ProcessInstance inst = random_lg_instance(4, 2, 1, 309);
    inst.lg.noise.scales.setZero();
    CovarianceTable table = covariance_engine(inst.lg, inst.policy, inst.reward);
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) CHECK(table.cov(a, b).cwiseAbs().maxCoeff() == 0.0);
    CHECK(table.cumulative_reward_variance == 0.0);
}

TEST_CASE("masking every policy entry equals supplying the zero policy") {
    ProcessInstance inst = random_lg_instance(4, 2, 1, 311);
    PolicySpec zeroed = inst.policy.zeroed();
    CovarianceTable a = covariance_engine(inst.lg, zeroed, inst.reward);
    // mask through the value function with an empty subset
    LgValueOptions opts;
    opts.mode = ValueMode::Variance;
    LgPolicyValue value(inst, opts);
    std::vector<std::uint8_t> none(static_cast<std::size_t>(value.input_count()), 0);
    Eigen::VectorXd masked = value.evaluate(none, 0, 0);
    Eigen::VectorXd direct = lg_variance_outputs(inst.lg, zeroed, inst.reward);
    CHECK((masked - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("engine covariances match direct sums on randomized instances") {
    for (int trial = 0; trial < 20; ++trial) {
        int H = 3 + trial % 8;
        int n = 1 + trial % 4;
        int m = 1 + trial % 3;
        ProcessInstance inst =
            random_lg_instance(H, n, m, 500 + trial, /*correlated=*/trial % 2 == 1);
        PathwayCoefficients paths(inst.lg, inst.policy);
        CovarianceTable table = covariance_engine(inst.lg, inst.policy, inst.reward);
        double worst = 0.0;
        for (int t1 = 0; t1 <= H - 1; ++t1)
            for (int t2 = t1; t2 <= H - 1; ++t2) {
                Eigen::MatrixXd direct = covariance_direct(inst.lg, paths, t1, t2);
                worst = std::max(worst, (direct - table.cov(t1 + 1, t2 + 1))
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        CHECK(worst < 1e-10);
        const double var_direct =
            cumulative_reward_variance_direct(inst.lg, inst.policy, inst.reward);
        CHECK(table.cumulative_reward_variance ==
              doctest::Approx(var_direct).epsilon(1e-10));
    }
}

TEST_CASE("closed forms: degenerate and linearity properties") {
    ProcessInstance inst = random_lg_instance(3, 2, 1, 313);
    SUBCASE("zero pinned deviation gives zero predictive values") {
        SVReport report = sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                     inst.posterior, 0.0, 0);
        CHECK(report.sv.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("doubling the pinned deviation doubles every value") {
        SVReport one = sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                  inst.posterior, 1.0, 0);
        SVReport two = sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                  inst.posterior, 2.0, 0);
        CHECK((two.sv - 2.0 * one.sv).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("single-period chain owns its variance; symmetric factors split it") {
    SUBCASE("one factor owns everything at H = 1") {
        ProcessInstance inst = random_lg_instance(1, 1, 1, 315);
        inst.lg.noise.scales.setConstant(0.9);
        inst.posterior = ProcessInstance::degenerate_posterior(inst.lg);
        SVReport report = sv_random_variance_exact(inst.lg, inst.policy, inst.reward,
                                                   inst.posterior, 0);
        CHECK(report.sv(0, 0) == doctest::Approx(0.81).epsilon(1e-12));
    }
    SUBCASE("two symmetric factors each take half") {
        // s2 = s1 + e2 with s1 = e1 and unit gains: both factors enter
        // symmetrically; each owns half the variance of s2
        ProcessInstance inst = random_lg_instance(2, 1, 1, 317);
        inst.lg.beta_s[0].setConstant(1.0);
        inst.lg.beta_a[0].setZero();
        inst.policy.theta[0].setZero();
        inst.lg.noise.scales.setConstant(1.0);
        inst.posterior = ProcessInstance::degenerate_posterior(inst.lg);
        SVReport report = sv_random_variance_exact(inst.lg, inst.policy, inst.reward,
                                                   inst.posterior, 0);
        const int s2 = 1;
        CHECK(report.sv(0, s2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.sv(1, s2) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.value_full[s2] == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("closed forms agree with the exhaustive oracle on randomized instances") {
    double worst_pred = 0.0, worst_var = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const int H = 2 + trial % 2;
        const int n = 1 + trial % 2;
        if (H * n > 6) continue;
        ProcessInstance inst =
            random_lg_instance(H, n, 1, 600 + trial, /*correlated=*/trial >= 4);
        auto perms = enumerate_permutations(H * n);

        LgRandomFactorOptions pred;
        pred.mode = ValueMode::Expectation;
        LgRandomFactorsValue value(inst, pred);
        SVReport walk = shapley_estimate(value, perms, {});
        SVReport exact = sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                    inst.posterior, 1.0, 0);
        worst_pred = std::max(worst_pred, (walk.sv - exact.sv).cwiseAbs().maxCoeff());

        LgRandomFactorOptions var;
        var.mode = ValueMode::Variance;
        LgRandomFactorsValue value2(inst, var);
        SVReport walk2 = shapley_estimate(value2, perms, {});
        SVReport exact2 = sv_random_variance_exact(inst.lg, inst.policy, inst.reward,
                                                   inst.posterior, 0);
        worst_var = std::max(worst_var, (walk2.sv - exact2.sv).cwiseAbs().maxCoeff());
    }
    CHECK(worst_pred < 1e-9);
    CHECK(worst_var < 1e-9);
}

TEST_CASE("policy value walks: zero reference policy zeroes every Shapley value") {
    ProcessInstance inst = random_lg_instance(4, 2, 1, 319);
    for (auto& th : inst.policy.theta) th.setZero();
    for (auto mode : {ValueMode::Expectation, ValueMode::Variance}) {
        LgValueOptions opts;
        opts.mode = mode;
        LgPolicyValue value(inst, opts);
        SVReport report =
            shapley_estimate(value, enumerate_permutations(value.input_count()), {});
        CHECK(report.sv.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("policy predictive walk without signal is flat") {
    ProcessInstance inst = random_lg_instance(3, 1, 1, 321);
    inst.lg.s0 = inst.lg.mu_s.front(); // s0 at the anchor
    // zero the reward's mean offsets so nothing propagates
    LgValueOptions opts;
    opts.mode = ValueMode::Expectation;
    LgPolicyValue value(inst, opts);
    SVReport report =
        shapley_estimate(value, enumerate_permutations(value.input_count()), {});
    // with s0 = mu_1, R(s0 - mu) = 0 for every theta: all values equal
    CHECK(report.sv.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("policy walks: reuse, brute force and simulation agree") {
    ProcessInstance inst = random_lg_instance(3, 1, 1, 323);
    auto perms = enumerate_permutations(2); // (H-1) * n * m = 2 inputs

    SUBCASE("predictive: recursion equals the literal-product value exactly") {
        LgValueOptions reuse;
        reuse.mode = ValueMode::Expectation;
        LgValueOptions brute = reuse;
        brute.reuse = false;
        LgPolicyValue a(inst, reuse), b(inst, brute);
        SVReport ra = shapley_estimate(a, perms, {});
        SVReport rb = shapley_estimate(b, perms, {});
        CHECK((ra.sv - rb.sv).cwiseAbs().maxCoeff() == 0.0);

        // simulation-based policy SV converges to the analytic walk
        SimulationValueConfig sim;
        sim.mode = ValueMode::Expectation;
        sim.trajectories = 40000;
        sim.seed = 67;
        PolicySimValue c(inst, sim);
        SVReport rc = shapley_estimate(c, perms, {});
        const int j_col = ra.output_index("J");
        for (int i = 0; i < ra.input_count(); ++i)
            CHECK(rc.sv(i, j_col) == doctest::Approx(ra.sv(i, j_col)).epsilon(0.1));
    }
    SUBCASE("variance: engine equals direct evaluation exactly, MC within noise") {
        LgValueOptions reuse;
        reuse.mode = ValueMode::Variance;
        LgValueOptions brute = reuse;
        brute.reuse = false;
        LgPolicyValue a(inst, reuse), b(inst, brute);
        SVReport ra = shapley_estimate(a, perms, {});
        SVReport rb = shapley_estimate(b, perms, {});
        CHECK((ra.sv - rb.sv).cwiseAbs().maxCoeff() < 1e-10);

        SimulationValueConfig sim;
        sim.mode = ValueMode::Variance;
        sim.trajectories = 60000;
        sim.seed = 71;
        PolicySimValue c(inst, sim);
        SVReport rc = shapley_estimate(c, perms, {});
        const int j_col = ra.output_index("J");
        for (int i = 0; i < ra.input_count(); ++i)
            CHECK(rc.sv(i, j_col) ==
                  doctest::Approx(ra.sv(i, j_col)).epsilon(0.1).scale(1.0));
    }
}

TEST_CASE("policy variance walk: zero residual covariance zeroes everything") {
    ProcessInstance inst = random_lg_instance(3, 2, 1, 327);
    inst.lg.noise.scales.setZero();
    LgValueOptions opts;
    opts.mode = ValueMode::Variance;
    LgPolicyValue value(inst, opts);
    SVReport report =
        shapley_estimate(value, enumerate_permutations(value.input_count()), {});
    CHECK(report.sv.cwiseAbs().maxCoeff() == 0.0);
    CHECK(report.value_full.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("model-parameter walks: boundaries and the exhaustive desk table") {
    ProcessInstance inst = random_lg_instance(2, 1, 1, 329);
    inst.lg.noise.scales.setConstant(0.5);
    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::LinearGaussian;
    for (double b : {0.2, 0.5, 0.8}) {
        LgParameterSample w;
        w.beta_s = {Eigen::MatrixXd::Constant(1, 1, b)};
        w.beta_a = {Eigen::MatrixXd::Constant(1, 1, 1.0 - b)};
        ensemble.lg_samples.push_back(w);
    }
    inst.posterior = ensemble;

    SUBCASE("degenerate single-member posterior: variance reduces to fixed-w Var") {
        ProcessInstance single = inst;
        single.posterior.lg_samples.resize(1);
        LgModelValueOptions opts;
        opts.mode = ValueMode::Variance;
        opts.exhaustive = true;
        LgModelValue value(single, opts);
        std::vector<std::uint8_t> none(2, 0);
        Eigen::VectorXd v = value.evaluate(none, 0, 0);
        LinearGaussianModel member = apply_sample(single.lg, single.posterior.lg_samples[0]);
        Eigen::VectorXd direct = lg_variance_outputs(member, single.policy, single.reward);
        CHECK((v - direct).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("U = O predictive pins everything: no outer averaging left") {
        LgModelValueOptions opts;
        opts.mode = ValueMode::Expectation;
        opts.exhaustive = true;
        LgModelValue value(inst, opts);
        std::vector<std::uint8_t> all(2, 1);
        Eigen::VectorXd v = value.evaluate(all, 0, 0);
        LinearGaussianModel pinned =
            apply_sample(inst.lg, lg_ensemble_mean(inst.posterior));
        Eigen::VectorXd direct = lg_expected_outputs(pinned, inst.policy, inst.reward);
        CHECK((v - direct).cwiseAbs().maxCoeff() < 1e-12);
    }
    SUBCASE("exhaustive nested variance matches the desk enumeration") {
        LgModelValueOptions opts;
        opts.mode = ValueMode::Variance;
        opts.exhaustive = true;
        LgModelValue value(inst, opts);
        std::vector<std::uint8_t> subset(2, 0);
        subset[0] = 1; // condition the beta_s entry
        Eigen::VectorXd nested = value.evaluate(subset, 0, 0);
        // desk enumeration with the closed-form inner expectation/variance
        const double sigma2 = 0.25;
        const double theta = inst.policy.theta[0](0, 0);
        const double bs_values[3] = {0.2, 0.5, 0.8};
        const double ba_values[3] = {0.8, 0.5, 0.2};
        auto closed = [&](double bs, double ba) {
            const double gain = bs + ba * theta;
            const double mean =
                inst.lg.mu_s[1][0] + gain * (inst.lg.s0[0] - inst.lg.mu_s[0][0]);
            const double var = gain * gain * sigma2 + sigma2;
            return std::make_pair(mean, var);
        };
        double desk = 0.0;
        for (int o = 0; o < 3; ++o) {
            double var_mean = 0.0, means[3];
            for (int i = 0; i < 3; ++i) {
                auto [mean, var] = closed(bs_values[i], ba_values[o]);
                var_mean += var / 3.0;
                means[i] = mean;
            }
            double mbar = (means[0] + means[1] + means[2]) / 3.0;
            double var_of_means = 0.0;
            for (double m : means) var_of_means += (m - mbar) * (m - mbar);
            var_of_means /= 2.0;
            desk += (var_mean + var_of_means) / 3.0;
        }
        const int s2_index = 1;
        CHECK(nested[s2_index] == doctest::Approx(desk).epsilon(1e-12));
    }
    SUBCASE("too many outer draws without replacement are refused") {
        LgModelValueOptions opts;
        opts.mode = ValueMode::Expectation;
        opts.outer = 10;
        opts.with_replacement = false;
        CHECK_THROWS_AS(LgModelValue(inst, opts), Error);
    }
}

TEST_CASE("efficiency identity is exact for full enumeration in all procedures") {
    ProcessInstance inst = random_lg_instance(3, 1, 1, 331, /*correlated=*/true);
    auto check_report = [](const SVReport& report) {
        CHECK(report.efficiency_residual.maxCoeff() < 1e-9);
    };
    {
        LgRandomFactorOptions opts;
        opts.mode = ValueMode::Expectation;
        LgRandomFactorsValue value(inst, opts);
        check_report(shapley_estimate(value, enumerate_permutations(3), {}));
        opts.mode = ValueMode::Variance;
        LgRandomFactorsValue value2(inst, opts);
        check_report(shapley_estimate(value2, enumerate_permutations(3), {}));
    }
    {
        LgValueOptions opts;
        opts.mode = ValueMode::Expectation;
        LgPolicyValue value(inst, opts);
        check_report(shapley_estimate(value, enumerate_permutations(2), {}));
        opts.mode = ValueMode::Variance;
        LgPolicyValue value2(inst, opts);
        check_report(shapley_estimate(value2, enumerate_permutations(2), {}));
    }
}

TEST_CASE("closed forms average over the posterior ensemble") {
    ProcessInstance inst = random_lg_instance(3, 2, 1, 341);
    Rng jitter(343);
    PosteriorEnsemble ensemble;
    ensemble.kind = PosteriorEnsemble::Kind::LinearGaussian;
    for (int q = 0; q < 3; ++q) {
        LgParameterSample w;
        w.beta_s = inst.lg.beta_s;
        w.beta_a = inst.lg.beta_a;
        for (auto& b : w.beta_s)
            for (long i = 0; i < b.size(); ++i) b.data()[i] += 0.1 * jitter.normal();
        ensemble.lg_samples.push_back(std::move(w));
    }
    inst.posterior = ensemble;
    SVReport joint = sv_random_predictive_exact(inst.lg, inst.policy, inst.reward,
                                                inst.posterior, 1.0, 0);
    Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(joint.sv.rows(), joint.sv.cols());
    for (int q = 0; q < 3; ++q) {
        PosteriorEnsemble single;
        single.kind = PosteriorEnsemble::Kind::LinearGaussian;
        single.lg_samples = {ensemble.lg_samples[static_cast<std::size_t>(q)]};
        mean += sv_random_predictive_exact(inst.lg, inst.policy, inst.reward, single,
                                           1.0, 0)
                    .sv;
    }
    mean /= 3.0;
    CHECK((joint.sv - mean).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("simulation-based random-factor values converge to the closed forms") {
    ProcessInstance inst = random_lg_instance(2, 1, 1, 337);
    auto perms = enumerate_permutations(2);
    LgRandomFactorOptions exact_opts;
    exact_opts.mode = ValueMode::Expectation;
    LgRandomFactorsValue exact(inst, exact_opts);
    SVReport reference = shapley_estimate(exact, perms, {});

    SimulationValueConfig sim;
    sim.mode = ValueMode::Expectation;
    sim.trajectories = 30000;
    sim.seed = 79;
    RandomFactorsSimValue value(inst, sim);
    SVReport estimate = shapley_estimate(value, perms, {});
    const int j_col = reference.output_index("J");
    for (int i = 0; i < 2; ++i)
        CHECK(estimate.sv(i, j_col) ==
              doctest::Approx(reference.sv(i, j_col)).epsilon(0.05).scale(1.0));
}
