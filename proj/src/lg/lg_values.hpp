#pragma once

#include <memory>

#include "sv/estimator.hpp"
#include "sv/instance.hpp"

namespace svpkg {

/// Closed-form subset value functions for linear Gaussian instances. These
/// plug into the same permutation-walk estimator as the simulation-based
/// value functions but evaluate each g(U) analytically.

struct LgValueOptions {
    ValueMode mode = ValueMode::Expectation;
    /// Reuse the pathway recursion / covariance accumulators. When false,
    /// every pathway product is rebuilt from scratch per use (the
    /// brute-force benchmark variant; results are identical).
    bool reuse = true;
};

/// g(U | w) for policy-parameter inputs: theta entries outside U are zeroed;
/// expectation mode evaluates the mean outputs by the pathway recursion,
/// variance mode runs the covariance engine per prefix.
class LgPolicyValue final : public ValueFunction {
  public:
    LgPolicyValue(const ProcessInstance& instance, LgValueOptions options);
    ~LgPolicyValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct LgModelValueOptions {
    ValueMode mode = ValueMode::Expectation;
    int outer = 16; // complement draws from the ensemble
    int inner = 16; // conditioned draws (variance mode)
    bool exhaustive = false;
    bool with_replacement = true;
    std::uint64_t seed = 0;
};

/// g(U) for model-parameter inputs (transition coefficient entries):
/// U entries pinned at the ensemble means, the complement drawn from the
/// ensemble; the inner expectation/variance per assembled parameter set is
/// closed form.
class LgModelValue final : public ValueFunction {
  public:
    LgModelValue(const ProcessInstance& instance, LgModelValueOptions options);
    ~LgModelValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct LgRandomFactorOptions {
    ValueMode mode = ValueMode::Expectation;
    double lambda = 1.0;
};

/// g(U | w) for random-factor inputs in closed form: expectation mode adds
/// the propagated pathway impact of each pinned factor; variance mode sums
/// the covariance quadratic form over the subset.
class LgRandomFactorsValue final : public ValueFunction {
  public:
    LgRandomFactorsValue(const ProcessInstance& instance, LgRandomFactorOptions options);
    ~LgRandomFactorsValue() override;

    int input_count() const override;
    const std::vector<std::string>& input_labels() const override;
    const std::vector<std::string>& output_labels() const override;
    Eigen::VectorXd evaluate(const std::vector<std::uint8_t>& in_subset, int q,
                             int d) const override;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace svpkg
