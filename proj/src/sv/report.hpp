#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace svpkg {

enum class InputKind { RandomFactors, PolicyParameters, ModelParameters };
enum class ValueMode { Expectation, Variance };

InputKind input_kind_from_string(const std::string& name);
std::string to_string(InputKind kind);
ValueMode value_mode_from_string(const std::string& name);
std::string to_string(ValueMode mode);

/// Per-(input, output) Shapley estimates plus estimator diagnostics.
struct SVReport {
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;

    Eigen::MatrixXd sv;          // inputs x outputs
    Eigen::MatrixXd mc_variance; // sample variance of the marginal contributions

    Eigen::VectorXd value_full;          // mean of g(O) over (q, d)
    Eigen::VectorXd value_empty;         // mean of g(empty) over (q, d)
    Eigen::VectorXd efficiency_residual; // | sum_o Sh(o) - (g(O) - g(empty)) |

    int q_count = 0;
    int d_count = 0;
    long inner_samples = 0;
    std::uint64_t seed = 0;
    std::string method; // permutation provenance

    int input_count() const { return static_cast<int>(input_labels.size()); }
    int output_count() const { return static_cast<int>(output_labels.size()); }
    int output_index(const std::string& label) const;

    /// Wide CSV: rows = inputs, columns = outputs.
    void write_csv(const std::string& path) const;
    /// Long-form CSV: input_label, output_label, sv, mc_variance.
    void write_long_csv(const std::string& path) const;
    /// Full diagnostics.
    void write_json(const std::string& path) const;
    std::string to_json() const;
};

} // namespace svpkg
