#include "symspec/series.hpp"

#include "symspec/accumulate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace symspec {

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::converged: return "converged";
    case Verdict::diverged: return "diverged";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int default_max_weight(int rank)
{
    if (rank <= 1)
        return 20000;
    if (rank == 2)
        return 500;
    return 120;
}

std::optional<TailFit> fit_tail(const std::vector<double>& blocks, int first, int last, int order)
{
    if (first < 1 || last >= static_cast<int>(blocks.size()) || last - first + 1 < ConvergenceProtocol::min_window)
        return std::nullopt;
    const int sign = blocks[static_cast<std::size_t>(last)] > 0 ? 1 : -1;
    const int rows = last - first + 1;
    const int cols = 2 + order;
    Eigen::MatrixXd design(rows, cols);
    Eigen::VectorXd rhs(rows);
    for (int k = first; k <= last; ++k) {
        const double b = blocks[static_cast<std::size_t>(k)];
        if (!(b != 0.0) || !std::isfinite(b) || (b > 0 ? 1 : -1) != sign)
            return std::nullopt;
        const int row = k - first;
        const double x = static_cast<double>(last) / k;
        design(row, 0) = 1.0;
        design(row, 1) = std::log(static_cast<double>(k) / last);
        for (int c = 0; c < order; ++c)
            design(row, 2 + c) = std::pow(x, c + 1);
        rhs(row) = std::log(std::fabs(b));
    }
    const Eigen::VectorXd beta = design.colPivHouseholderQr().solve(rhs);
    TailFit fit;
    fit.sign = sign;
    fit.exponent = beta(1);
    fit.log_scale = beta(0) - fit.exponent * std::log(static_cast<double>(last));
    if (order >= 1)
        fit.c1 = beta(2) * last;
    if (order >= 2)
        fit.c2 = beta(3) * static_cast<double>(last) * last;
    return fit;
}

double power_tail(double t, int n)
{
    // sum_{k>n} k^{-t} = n^{1-t} [1/(t-1) - 1/(2n) + t/(12 n^2) - t(t+1)(t+2)/(720 n^4)
    //                             + t(t+1)(t+2)(t+3)(t+4)/(30240 n^6)]
    const double nn = n;
    const double scaled = 1.0 / (t - 1.0) - 1.0 / (2.0 * nn) + t / (12.0 * nn * nn) -
                          t * (t + 1) * (t + 2) / (720.0 * std::pow(nn, 4)) +
                          t * (t + 1) * (t + 2) * (t + 3) * (t + 4) / (30240.0 * std::pow(nn, 6));
    return std::exp((1.0 - t) * std::log(nn)) * scaled;
}

double tail_sum(const TailFit& fit, int last)
{
    auto model = [&](double k) {
        return std::exp(fit.log_scale + fit.exponent * std::log(k) + fit.c1 / k + fit.c2 / (k * k));
    };
    // explicit model terms while c1/k is not small, then the expanded power series
    const int explicit_end = std::max(8 * last, last + 64);
    CompensatedSum acc;
    for (int k = last + 1; k <= explicit_end; ++k)
        acc.add(model(k));
    const double c1 = fit.c1;
    const double c2 = fit.c2;
    const double d[5] = {1.0, c1, c1 * c1 / 2 + c2, c1 * c1 * c1 / 6 + c1 * c2,
                         std::pow(c1, 4) / 24 + c1 * c1 * c2 / 2 + c2 * c2 / 2};
    for (int j = 0; j < 5; ++j)
        acc.add(std::exp(fit.log_scale) * d[j] * power_tail(j - fit.exponent, explicit_end));
    return fit.sign * acc.value();
}

namespace {

struct Checkpoint {
    SeriesEstimate estimate;
    std::optional<double> exponent;
};

SeriesEstimate analyze(const std::vector<double>& blocks, int n, double tolerance, const Checkpoint* previous)
{
    SeriesEstimate est;
    est.blocks_used = n;
    CompensatedSum partial;
    for (int k = 0; k <= n; ++k)
        partial.add(blocks[static_cast<std::size_t>(k)]);
    est.partial_sum = partial.value();
    est.value = est.partial_sum;

    std::ostringstream diag;
    for (int k = 0; k <= n; ++k) {
        if (!std::isfinite(blocks[static_cast<std::size_t>(k)])) {
            est.verdict = Verdict::diverged;
            est.diagnostics = "non-finite block sum at weight " + std::to_string(k);
            return est;
        }
    }

    const int first = std::max(1, n / 2);
    bool non_decreasing = blocks[static_cast<std::size_t>(n)] > 0;
    for (int k = first + 1; k <= n && non_decreasing; ++k)
        non_decreasing = blocks[static_cast<std::size_t>(k)] >= blocks[static_cast<std::size_t>(k - 1)];
    if (non_decreasing && n - first + 1 >= ConvergenceProtocol::min_window) {
        est.verdict = Verdict::diverged;
        est.diagnostics = "block sums non-decreasing over the fitting window";
        return est;
    }

    const auto fit2 = fit_tail(blocks, first, n, 2);
    const auto fit1 = fit_tail(blocks, first, n, 1);
    if (!fit2 || !fit1) {
        est.verdict = Verdict::inconclusive;
        est.diagnostics = "fitting window [" + std::to_string(first) + "," + std::to_string(n) +
                          "] has zeros, mixed signs or too few blocks";
        return est;
    }

    const double exponent = fit2->exponent;
    est.fitted_exponent = exponent;
    double resolution = ConvergenceProtocol::exponent_resolution;
    if (previous && previous->exponent)
        resolution = std::max(resolution, std::fabs(exponent - *previous->exponent));
    diag << "fitted exponent " << exponent << " (resolution " << resolution << ")";

    if (exponent >= -1.0 - resolution) {
        est.verdict = Verdict::diverged;
        est.diagnostics = diag.str();
        return est;
    }

    const double tail2 = tail_sum(*fit2, n);
    const double tail1 = tail_sum(*fit1, n);
    est.tail_estimate = tail2;
    est.value = est.partial_sum + tail2;
    double bound = std::fabs(tail2 - tail1);
    if (previous && previous->estimate.tail_bound)
        bound = std::max(bound, std::fabs(est.value - previous->estimate.value));
    bound += 16 * std::numeric_limits<double>::epsilon() * std::fabs(est.value);
    est.tail_bound = bound;

    if (exponent >= -1.0 - ConvergenceProtocol::converge_margin) {
        est.verdict = Verdict::inconclusive;
        diag << "; exponent inside the margin band below -1";
    } else if (bound < tolerance * std::fabs(est.value)) {
        est.verdict = Verdict::converged;
    } else {
        est.verdict = Verdict::inconclusive;
        diag << "; tail bound " << bound << " above tolerance";
    }
    est.diagnostics = diag.str();
    return est;
}

void attach_trace(SeriesEstimate& est, const std::vector<double>& blocks, bool keep)
{
    if (!keep)
        return;
    CompensatedSum acc;
    for (int k = 0; k <= est.blocks_used; ++k) {
        acc.add(blocks[static_cast<std::size_t>(k)]);
        est.block_trace.push_back(acc.value());
    }
}

}  // namespace

SeriesEstimate analyze_blocks(const std::vector<double>& blocks, double tolerance)
{
    if (blocks.empty())
        return {};
    return analyze(blocks, static_cast<int>(blocks.size()) - 1, tolerance, nullptr);
}

SeriesEstimate sum_graded(const TermTables& tables, const SeriesOptions& options)
{
    const int max_weight =
        std::min(options.max_weight > 0 ? options.max_weight : default_max_weight(tables.rank), tables.max_part);
    auto compute = [&](int first, int last) {
        return options.execution == Execution::parallel ? block_sums_parallel(tables, first, last)
                                                        : block_sums_serial(tables, first, last);
    };

    if (tables.m1_support) {
        const long support = static_cast<long>(*tables.m1_support) * tables.rank;
        if (support <= max_weight) {
            const int last = static_cast<int>(support);
            const auto blocks = compute(0, last);
            SeriesEstimate est;
            CompensatedSum acc;
            for (double b : blocks)
                acc.add(b);
            est.value = est.partial_sum = acc.value();
            est.blocks_used = last;
            est.tail_bound = 0.0;
            est.verdict = Verdict::converged;
            est.exact = true;
            est.diagnostics = "finite support: all terms vanish beyond weight " + std::to_string(last);
            attach_trace(est, blocks, options.keep_trace);
            return est;
        }
    }

    std::vector<double> blocks;
    std::optional<Checkpoint> previous;
    int checkpoint = std::min(ConvergenceProtocol::first_checkpoint, max_weight);
    while (true) {
        const auto fresh = compute(static_cast<int>(blocks.size()), checkpoint);
        blocks.insert(blocks.end(), fresh.begin(), fresh.end());
        auto est = analyze(blocks, checkpoint, options.tolerance, previous ? &*previous : nullptr);
        if (est.verdict == Verdict::converged || checkpoint >= max_weight) {
            if (tables.m1_support)
                est.diagnostics += "; finite support beyond max_weight";
            attach_trace(est, blocks, options.keep_trace);
            return est;
        }
        previous = Checkpoint{est, est.fitted_exponent};
        checkpoint = std::min(2 * checkpoint, max_weight);
    }
}

}  // namespace symspec
