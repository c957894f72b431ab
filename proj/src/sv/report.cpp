#include "sv/report.hpp"

#include <fstream>

#include <json.hpp>

#include "common/error.hpp"
#include "common/text.hpp"

namespace svpkg {

InputKind input_kind_from_string(const std::string& name) {
    if (name == "random-factors") return InputKind::RandomFactors;
    if (name == "policy-parameters") return InputKind::PolicyParameters;
    if (name == "model-parameters") return InputKind::ModelParameters;
    fail(ErrorCode::ConfigError, "unknown input kind: " + name);
}

std::string to_string(InputKind kind) {
    switch (kind) {
        case InputKind::RandomFactors: return "random-factors";
        case InputKind::PolicyParameters: return "policy-parameters";
        case InputKind::ModelParameters: return "model-parameters";
    }
    return "?";
}

ValueMode value_mode_from_string(const std::string& name) {
    if (name == "expectation") return ValueMode::Expectation;
    if (name == "variance") return ValueMode::Variance;
    fail(ErrorCode::ConfigError, "unknown value mode: " + name);
}

std::string to_string(ValueMode mode) {
    return mode == ValueMode::Expectation ? "expectation" : "variance";
}

int SVReport::output_index(const std::string& label) const {
    for (int i = 0; i < output_count(); ++i)
        if (output_labels[static_cast<std::size_t>(i)] == label) return i;
    fail(ErrorCode::InvalidArgument, "no output labelled '" + label + "'");
}

void SVReport::write_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << "input";
    for (const auto& label : output_labels) out << ',' << label;
    out << "\n";
    for (int i = 0; i < input_count(); ++i) {
        out << input_labels[static_cast<std::size_t>(i)];
        for (int j = 0; j < output_count(); ++j) out << ',' << format_double(sv(i, j));
        out << "\n";
    }
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

void SVReport::write_long_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << "input_label,output_label,sv,mc_variance\n";
    for (int i = 0; i < input_count(); ++i)
        for (int j = 0; j < output_count(); ++j)
            out << input_labels[static_cast<std::size_t>(i)] << ','
                << output_labels[static_cast<std::size_t>(j)] << ','
                << format_double(sv(i, j)) << ',' << format_double(mc_variance(i, j))
                << "\n";
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

std::string SVReport::to_json() const {
    nlohmann::ordered_json doc;
    doc["inputs"] = input_labels;
    doc["outputs"] = output_labels;
    doc["counts"] = {{"Q", q_count}, {"D", d_count}, {"L", inner_samples}};
    doc["seed"] = seed;
    doc["method"] = method;
    auto matrix_rows = [](const Eigen::MatrixXd& m) {
        std::vector<std::vector<double>> rows;
        rows.reserve(static_cast<std::size_t>(m.rows()));
        for (long i = 0; i < m.rows(); ++i) {
            std::vector<double> row(static_cast<std::size_t>(m.cols()));
            for (long j = 0; j < m.cols(); ++j) row[static_cast<std::size_t>(j)] = m(i, j);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["sv"] = matrix_rows(sv);
    doc["mc_variance"] = matrix_rows(mc_variance);
    doc["value_full"] = std::vector<double>(value_full.data(), value_full.data() + value_full.size());
    doc["value_empty"] =
        std::vector<double>(value_empty.data(), value_empty.data() + value_empty.size());
    doc["efficiency_residual"] = std::vector<double>(
        efficiency_residual.data(), efficiency_residual.data() + efficiency_residual.size());
    return doc.dump(2);
}

void SVReport::write_json(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << to_json() << "\n";
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

} // namespace svpkg
