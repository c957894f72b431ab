#include "model/trajectory_io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include "common/error.hpp"
#include "common/text.hpp"

namespace svpkg {

namespace {

constexpr const char* kHeader = "batch,t,X_f,C,S,N,V,F_S";

double parse_number(const std::string& field, int line_no, bool* empty = nullptr) {
    std::string s = trim(field);
    if (s.empty()) {
        if (empty) {
            *empty = true;
            return 0.0;
        }
        fail(ErrorCode::ParseError, "empty numeric field at line " + std::to_string(line_no));
    }
    if (empty) *empty = false;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    require(end && *end == '\0', ErrorCode::ParseError,
            "bad numeric field '" + s + "' at line " + std::to_string(line_no));
    return v;
}

struct Row {
    double t;
    double values[5];
    double feed;
    bool has_feed;
    int line_no;
};

} // namespace

LoadedDataset load_trajectories(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::IoError, "cannot open " + path);
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), ErrorCode::ParseError,
            "missing header in " + path);
    require(trim(line) == kHeader, ErrorCode::ParseError,
            "unexpected header in " + path + " (want '" + std::string(kHeader) + "')");

    // preserve first-appearance order of batches
    std::vector<std::string> order;
    std::map<std::string, std::vector<Row>> groups;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split(line, ',');
        require(fields.size() == 8, ErrorCode::ParseError,
                "expected 8 fields at line " + std::to_string(line_no));
        std::string batch = trim(fields[0]);
        Row row{};
        row.line_no = line_no;
        row.t = parse_number(fields[1], line_no);
        for (int k = 0; k < 5; ++k) {
            row.values[k] = parse_number(fields[2 + k], line_no);
            require(row.values[k] >= 0.0, ErrorCode::ParseError,
                    "negative measurement at line " + std::to_string(line_no));
        }
        bool empty = false;
        row.feed = parse_number(fields[7], line_no, &empty);
        row.has_feed = !empty;
        if (row.has_feed)
            require(row.feed >= 0.0, ErrorCode::ParseError,
                    "negative feed rate at line " + std::to_string(line_no));
        if (!groups.count(batch)) order.push_back(batch);
        groups[batch].push_back(row);
    }

    LoadedDataset out;
    for (const auto& batch : order) {
        auto& rows = groups[batch];
        for (std::size_t i = 1; i < rows.size(); ++i)
            require(rows[i].t > rows[i - 1].t, ErrorCode::NonMonotoneTime,
                    "non-monotone time in batch '" + batch + "' at line " +
                        std::to_string(rows[i].line_no));
        const int H = static_cast<int>(rows.size());
        Trajectory traj;
        traj.states.resize(H, 5);
        traj.actions = Eigen::MatrixXd::Zero(std::max(0, H - 1), 1);
        traj.residuals = Eigen::MatrixXd::Zero(H, 5);
        traj.rewards = Eigen::VectorXd::Zero(H);
        for (int i = 0; i < H; ++i) {
            for (int k = 0; k < 5; ++k) traj.states(i, k) = rows[static_cast<std::size_t>(i)].values[k];
            if (i < H - 1) traj.actions(i, 0) = rows[static_cast<std::size_t>(i)].feed;
        }
        out.trajectories.push_back(std::move(traj));
        out.batch_ids.push_back(batch);
    }
    return out;
}

void write_trajectories(const std::string& path, const std::vector<Trajectory>& trajectories,
                        const std::vector<std::string>& batch_ids) {
    std::ofstream out(path, std::ios::binary);
    require(out.good(), ErrorCode::IoError, "cannot open " + path + " for writing");
    out << kHeader << "\n";
    for (std::size_t b = 0; b < trajectories.size(); ++b) {
        const auto& traj = trajectories[b];
        require(traj.states.cols() == 5, ErrorCode::InvalidArgument,
                "trajectory CSV export requires the 5-state layout");
        std::string id = b < batch_ids.size() ? batch_ids[b] : std::to_string(b + 1);
        for (int t = 0; t < traj.states.rows(); ++t) {
            out << id << ',' << (t + 1);
            for (int k = 0; k < 5; ++k) out << ',' << format_double(traj.states(t, k));
            out << ',';
            if (t < traj.actions.rows()) out << format_double(traj.actions(t, 0));
            out << "\n";
        }
    }
    require(out.good(), ErrorCode::IoError, "write failed for " + path);
}

} // namespace svpkg
