#ifndef SYMSPEC_KERNELS_HPP
#define SYMSPEC_KERNELS_HPP

#include "symspec/domain.hpp"
#include "symspec/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace symspec {

/// (lambda)_m raised to `power`; term tables multiply several of these.
struct PochhammerPower {
    Rational lambda;
    double power;
};

/// Per-coordinate lookup tables for the graded series
///     sum_m dim P_m * prod_k (lambda_k)_m^{power_k}.
/// Everything is kept in log space: term(m) = sign(m) * exp(L(m)) with
///     L(m) = sum_j log_abs[j][m_j] + sum_{i<j} log_pair[j-i][m_i - m_j].
struct TermTables {
    int rank = 1;
    int max_part = 0;
    std::vector<std::vector<double>> log_abs;        // [j][m_j], includes the diagonal dim factor
    std::vector<std::vector<signed char>> sign;      // [j][m_j], 0 marks an exact zero
    std::vector<std::vector<double>> log_pair;       // [gap][delta], gap = 1..r-1
    /// Largest m_1 with a nonzero first factor, when the first factor
    /// vanishes from some m_1 on (finite support).
    std::optional<int> m1_support;
};

/// Builds the tables for m_j in [0, max_part].  With `signed_terms` the powers
/// must be integers and signs are kept; otherwise absolute values are used.
TermTables build_term_tables(const DomainParams& domain, std::span<const PochhammerPower> factors,
                             bool signed_terms, int max_part);

/// One block sum sum_{|m| = n} term(m), compensated, in enumeration order.
double block_sum(const TermTables& tables, int n);

/// Block sums for n = first..last; serial reference.
std::vector<double> block_sums_serial(const TermTables& tables, int first, int last);

/// Same values, blocks distributed over OpenMP threads.  Each block is
/// computed by block_sum, so the output is bit-identical to the serial one.
std::vector<double> block_sums_parallel(const TermTables& tables, int first, int last);

/// Thread control for every parallel kernel; 0 restores the runtime default.
void set_thread_count(int threads);
int thread_count();

enum class Execution { serial, parallel };

}  // namespace symspec

#endif
