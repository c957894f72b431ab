#pragma once

#include <memory>

#include "sv/estimator.hpp"
#include "sv/instance.hpp"

namespace svpkg {

/// Monte Carlo configuration shared by the simulation-based value functions.
struct SimulationValueConfig {
    ValueMode mode = ValueMode::Expectation;
    double lambda = 1.0;  // pinned random factors sit at mean + lambda * std
    int trajectories = 64; // L, expectation mode (and per-w draws in model analyses)
    int outer = 64;        // L_out, nested variance estimation
    int inner = 64;        // L_in
    std::uint64_t seed = 0;
};

/// g(U) for random-factor inputs by trajectory simulation (all outputs from
/// one shared pathway walk). Expectation mode pins the residuals in U at
/// mean + lambda * std and averages over the rest; variance mode pins the
/// complement per outer draw and takes the inner sample variance over U's
/// residuals.
class RandomFactorsSimValue final : public ValueFunction {
  public:
    RandomFactorsSimValue(const ProcessInstance& instance, SimulationValueConfig config);
    ~RandomFactorsSimValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

    /// Single-output variant of the same walk for reuse benchmarking: the
    /// trajectory is recomputed from scratch (up to the output's period) for
    /// the one requested output, with draws identical to evaluate().
    Eigen::VectorXd evaluate_single_output(const std::vector<std::uint8_t>& in_subset,
                                           int q, int d, int output_index) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// g(U) for policy-parameter inputs: theta entries outside U are zeroed,
/// entries in U take their configured values; Monte Carlo mean or variance
/// of the outputs under the masked policy.
class PolicySimValue final : public ValueFunction {
  public:
    PolicySimValue(const ProcessInstance& instance, SimulationValueConfig config);
    ~PolicySimValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct ModelValueConfig {
    ValueMode mode = ValueMode::Expectation;
    int trajectories = 64; // noise draws per parameter assignment
    int outer = 16;        // complement draws from the ensemble
    int inner = 16;        // conditioned draws (variance mode)
    bool exhaustive = false;
    bool with_replacement = true;
    std::uint64_t seed = 0;
};

/// g(U) for model-parameter inputs: entries in U pinned (posterior means by
/// default), the complement drawn from the posterior ensemble; expectation
/// or the nested variance decomposition, all by simulation.
class ModelParamsSimValue final : public ValueFunction {
  public:
    ModelParamsSimValue(const ProcessInstance& instance, ModelValueConfig config);
    ~ModelParamsSimValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Model-parameter label list for the instance family.
std::vector<std::string> model_parameter_labels(const ProcessInstance& instance);

} // namespace svpkg
