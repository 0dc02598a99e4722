#ifndef SYMSPEC_SERIES_HPP
#define SYMSPEC_SERIES_HPP

#include "symspec/kernels.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symspec {

enum class Verdict { converged, diverged, inconclusive };

std::string to_string(Verdict verdict);

/// Result of a graded (weight-block) summation.
///
/// `value` is the partial sum plus the extrapolated tail when the tail model
/// applies; `tail_bound` estimates |value - limit| and is unset for
/// divergent series.  Invariant: converged implies
/// tail_bound < tolerance * |value|.
struct SeriesEstimate {
    double value = 0.0;
    int blocks_used = 0;  // largest weight summed
    std::optional<double> tail_bound;
    Verdict verdict = Verdict::inconclusive;

    double partial_sum = 0.0;
    double tail_estimate = 0.0;
    std::optional<double> fitted_exponent;  // decay exponent of the block sums
    bool exact = false;                      // finite support, summed completely
    std::vector<double> block_trace;         // partial sums per weight, when requested
    std::string diagnostics;
};

struct SeriesOptions {
    double tolerance = 1e-10;
    int max_weight = 0;  // 0 picks default_max_weight(rank)
    bool keep_trace = false;
    Execution execution = Execution::parallel;
};

/// 20000 at rank 1, 500 at rank 2, 120 at rank >= 3.
int default_max_weight(int rank);

/// Decision constants of the convergence protocol.
struct ConvergenceProtocol {
    /// converged needs fitted exponent < -1 - converge_margin
    static constexpr double converge_margin = 0.01;
    /// exponents within this distance below -1 are treated as -1 (divergent)
    static constexpr double exponent_resolution = 1e-6;
    static constexpr int min_window = 10;
    static constexpr int first_checkpoint = 64;
};

/// Fit of log|b_n| = A + s log n + c1/n + c2/n^2 over a window of block sums.
struct TailFit {
    double log_scale = 0.0;  // A
    double exponent = 0.0;   // s
    double c1 = 0.0;
    double c2 = 0.0;
    int sign = 1;
};

/// Least-squares fit over blocks[first..last] (indices are weights).  Empty
/// when the window has zeros, mixed signs or fewer than min_window points.
std::optional<TailFit> fit_tail(const std::vector<double>& blocks, int first, int last, int order = 2);

/// sum_{n > last} of the fitted model; requires exponent < -1.
double tail_sum(const TailFit& fit, int last);

/// sum_{k > n} k^{-t} for t > 1 by Euler-Maclaurin (n >= 10 for full accuracy).
double power_tail(double t, int n);

/// Graded summation of sum_m dim P_m * term(m) with the convergence protocol.
SeriesEstimate sum_graded(const TermTables& tables, const SeriesOptions& options);

/// Same protocol on precomputed block sums blocks[0..], used by tests.
SeriesEstimate analyze_blocks(const std::vector<double>& blocks, double tolerance);

}  // namespace symspec

#endif
