#pragma once

#include <string>
#include <vector>

#include "model/linear_gaussian.hpp"

namespace svpkg {

/// Batch dataset CSV format: header `batch,t,X_f,C,S,N,V,F_S`, one row per
/// period, '.' decimal separator, UTF-8. Rows are grouped by batch and must
/// carry strictly increasing t within a batch; measurements must be
/// nonnegative. The final row of a batch has no action (empty or zero F_S
/// column is accepted).
struct LoadedDataset {
    std::vector<Trajectory> trajectories;
    std::vector<std::string> batch_ids;
};

LoadedDataset load_trajectories(const std::string& path);

/// Writes trajectories in the same format. `batch_ids` defaults to 1-based
/// indices when empty.
void write_trajectories(const std::string& path, const std::vector<Trajectory>& trajectories,
                        const std::vector<std::string>& batch_ids = {});

} // namespace svpkg
