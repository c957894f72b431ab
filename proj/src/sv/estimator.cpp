#include "sv/estimator.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "common/error.hpp"

namespace svpkg {

namespace {

struct WalkResult {
    Eigen::MatrixXd increments; // inputs x outputs
    Eigen::VectorXd g_full;
    Eigen::VectorXd g_empty;
};

WalkResult run_walk(const ValueFunction& fn, const Permutation& perm, int q, int d) {
    const int s = fn.input_count();
    const int n_out = static_cast<int>(fn.output_labels().size());
    WalkResult result;
    result.increments = Eigen::MatrixXd::Zero(s, n_out);

    std::vector<std::uint8_t> subset(static_cast<std::size_t>(s), 0);
    int prefix = 0;
    try {
        Eigen::VectorXd prev = fn.evaluate(subset, q, d);
        result.g_empty = prev;
        for (int idx : perm) {
            subset[static_cast<std::size_t>(idx - 1)] = 1;
            ++prefix;
            Eigen::VectorXd value = fn.evaluate(subset, q, d);
            result.increments.row(idx - 1) = (value - prev).transpose();
            prev = std::move(value);
        }
        result.g_full = prev;
    } catch (const Error& e) {
        fail(e.code(), "value function failed at (q=" + std::to_string(q) +
                           ", d=" + std::to_string(d) +
                           ", prefix=" + std::to_string(prefix) + "): " + e.what());
    }
    return result;
}

// Kahan-compensated accumulator for order-stable reductions.
struct Compensated {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

SVReport shapley_estimate(const ValueFunction& value_fn, const PermutationBatch& perms,
                          const EstimatorOptions& options) {
    const int s = value_fn.input_count();
    require(perms.s == s, ErrorCode::InvalidArgument,
            "permutation batch covers " + std::to_string(perms.s) + " inputs, expected " +
                std::to_string(s));
    require(options.q_count >= 1, ErrorCode::InvalidArgument, "q_count must be >= 1");
    const int q_count = options.q_count;
    const int d_count = perms.count();
    const long total = static_cast<long>(q_count) * d_count;
    const int n_out = static_cast<int>(value_fn.output_labels().size());
    const int threads =
        std::max(1, std::min<int>(options.threads, static_cast<int>(total)));

    Eigen::MatrixXd sv_sum = Eigen::MatrixXd::Zero(s, n_out);
    Eigen::MatrixXd sv_sumsq = Eigen::MatrixXd::Zero(s, n_out);
    std::vector<Compensated> full_sum(static_cast<std::size_t>(n_out));
    std::vector<Compensated> empty_sum(static_cast<std::size_t>(n_out));

    // Walks are computed in parallel blocks but reduced sequentially in
    // (q, d) order, keeping the report independent of the thread count.
    const long block_size = std::max<long>(threads, 64);
    std::vector<WalkResult> block(static_cast<std::size_t>(block_size));
    for (long block_start = 0; block_start < total; block_start += block_size) {
        const long block_end = std::min(total, block_start + block_size);
        const long count = block_end - block_start;
        if (threads == 1) {
            for (long i = 0; i < count; ++i) {
                const long task = block_start + i;
                block[static_cast<std::size_t>(i)] =
                    run_walk(value_fn, perms.perms[static_cast<std::size_t>(task % d_count)],
                             static_cast<int>(task / d_count), static_cast<int>(task % d_count));
            }
        } else {
            std::atomic<long> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto worker = [&]() {
                try {
                    for (;;) {
                        long i = next.fetch_add(1);
                        if (i >= count) return;
                        const long task = block_start + i;
                        block[static_cast<std::size_t>(i)] = run_walk(
                            value_fn, perms.perms[static_cast<std::size_t>(task % d_count)],
                            static_cast<int>(task / d_count), static_cast<int>(task % d_count));
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next.store(count); // drain the remaining tasks
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(threads));
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            if (failure) std::rethrow_exception(failure);
        }
        for (long i = 0; i < count; ++i) {
            const auto& walk = block[static_cast<std::size_t>(i)];
            sv_sum += walk.increments;
            sv_sumsq += walk.increments.cwiseProduct(walk.increments);
            for (int j = 0; j < n_out; ++j) {
                full_sum[static_cast<std::size_t>(j)].add(walk.g_full[j]);
                empty_sum[static_cast<std::size_t>(j)].add(walk.g_empty[j]);
            }
        }
    }

    SVReport report;
    report.input_labels = value_fn.input_labels();
    report.output_labels = value_fn.output_labels();
    report.q_count = q_count;
    report.d_count = d_count;
    report.seed = options.seed;
    report.method = options.method_tag.empty() ? to_string(perms.method) : options.method_tag;
    const double inv = 1.0 / static_cast<double>(total);
    report.sv = sv_sum * inv;
    if (total > 1) {
        report.mc_variance =
            (sv_sumsq - sv_sum.cwiseProduct(sv_sum) * inv) / static_cast<double>(total - 1);
        report.mc_variance = report.mc_variance.cwiseMax(0.0);
    } else {
        report.mc_variance = Eigen::MatrixXd::Zero(s, n_out);
    }
    report.value_full.resize(n_out);
    report.value_empty.resize(n_out);
    report.efficiency_residual.resize(n_out);
    for (int j = 0; j < n_out; ++j) {
        report.value_full[j] = full_sum[static_cast<std::size_t>(j)].sum * inv;
        report.value_empty[j] = empty_sum[static_cast<std::size_t>(j)].sum * inv;
        Compensated column;
        for (int i = 0; i < s; ++i) column.add(report.sv(i, j));
        report.efficiency_residual[j] =
            std::abs(column.sum - (report.value_full[j] - report.value_empty[j]));
    }
    return report;
}

Eigen::MatrixXd shapley_weighted_subsets(const ValueFunction& value_fn, int q_count) {
    const int s = value_fn.input_count();
    require(s >= 1 && s <= 20, ErrorCode::InstanceTooLarge,
            "weighted-subset Shapley is limited to 20 inputs");
    const int n_out = static_cast<int>(value_fn.output_labels().size());

    std::vector<double> log_factorial(static_cast<std::size_t>(s) + 1, 0.0);
    for (int i = 1; i <= s; ++i)
        log_factorial[static_cast<std::size_t>(i)] =
            log_factorial[static_cast<std::size_t>(i - 1)] + std::log(static_cast<double>(i));

    Eigen::MatrixXd sv = Eigen::MatrixXd::Zero(s, n_out);
    std::vector<std::uint8_t> subset(static_cast<std::size_t>(s), 0);
    for (int q = 0; q < q_count; ++q) {
        // cache g over all 2^s subsets
        std::vector<Eigen::VectorXd> values(static_cast<std::size_t>(1) << s);
        for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
            for (int i = 0; i < s; ++i) subset[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            values[mask] = value_fn.evaluate(subset, q, 0);
        }
        for (int o = 0; o < s; ++o) {
            for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
                if (mask & (1u << o)) continue;
                const int u = __builtin_popcount(mask);
                const double weight =
                    std::exp(log_factorial[static_cast<std::size_t>(s - u - 1)] +
                             log_factorial[static_cast<std::size_t>(u)] -
                             log_factorial[static_cast<std::size_t>(s)]);
                sv.row(o) += weight * (values[mask | (1u << o)] - values[mask]).transpose();
            }
        }
    }
    return sv / static_cast<double>(q_count);
}

} // namespace svpkg
