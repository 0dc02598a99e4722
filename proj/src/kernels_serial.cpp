#include "symspec/accumulate.hpp"
#include "symspec/errors.hpp"
#include "symspec/kernels.hpp"
#include "symspec/partitions.hpp"

#include <cmath>
#include <stdexcept>

namespace symspec {

namespace {

struct FactorColumn {
    double x;          // lambda - (a/2)(j-1)
    double power;
    std::optional<int> zero_from;  // (x)_m == 0 for m >= zero_from
};

}  // namespace

TermTables build_term_tables(const DomainParams& domain, std::span<const PochhammerPower> factors,
                             bool signed_terms, int max_part)
{
    if (max_part < 0)
        throw std::invalid_argument("max_part must be nonnegative");
    TermTables t;
    t.rank = domain.r;
    t.max_part = max_part;
    const auto width = static_cast<std::size_t>(max_part) + 1;
    t.log_abs.assign(static_cast<std::size_t>(domain.r), std::vector<double>(width, 0.0));
    t.sign.assign(static_cast<std::size_t>(domain.r), std::vector<signed char>(width, 1));

    for (const auto& f : factors) {
        if (signed_terms && f.power != std::round(f.power))
            throw std::invalid_argument("signed term tables need integer powers");
    }

    for (int j = 1; j <= domain.r; ++j) {
        std::vector<FactorColumn> columns;
        for (const auto& f : factors) {
            const Rational x = f.lambda - domain.half_a() * (j - 1);
            FactorColumn col{to_double(x), f.power, std::nullopt};
            if (is_nonpositive_integer(x)) {
                if (f.power < 0)
                    throw InternalError("zero in a denominator Pochhammer factor");
                col.zero_from = numerator(Rational(-x)).convert_to<int>() + 1;
            }
            columns.push_back(col);
        }
        // diagonal part of dim P_m: (c + m)_b / (c)_b with c = 1 + (a/2)(r-j)
        const double c = 1.0 + domain.a * (domain.r - j) / 2.0;

        auto& logs = t.log_abs[j - 1];
        auto& signs = t.sign[j - 1];
        CompensatedSum acc;
        int sign = 1;
        for (int m = 1; m <= max_part; ++m) {
            const int i = m - 1;
            for (const auto& col : columns) {
                if (col.zero_from && m >= *col.zero_from) {
                    sign = 0;
                    continue;
                }
                const double factor = col.x + i;
                acc.add(col.power * std::log(std::fabs(factor)));
                if (factor < 0 && signed_terms && static_cast<long>(col.power) % 2 != 0)
                    sign = -sign;
            }
            double log_diag = 0.0;
            for (int k = 0; k < domain.b; ++k)
                log_diag += std::log((c + m + k) / (c + k));
            logs[m] = acc.value() + log_diag;
            signs[m] = static_cast<signed char>(sign);
        }
        if (j == 1) {
            for (const auto& col : columns) {
                if (col.zero_from) {
                    const int last = *col.zero_from - 1;
                    t.m1_support = t.m1_support ? std::min(*t.m1_support, last) : last;
                }
            }
        }
    }

    t.log_pair.assign(static_cast<std::size_t>(domain.r), std::vector<double>(width, 0.0));
    for (int gap = 1; gap < domain.r; ++gap) {
        const double h = domain.a * gap / 2.0;
        const double h_prev = domain.a * (gap - 1) / 2.0;
        for (int delta = 0; delta <= max_part; ++delta) {
            double value = std::log((delta + h) / h);
            for (int k = 0; k < domain.a - 1; ++k)
                value += std::log((delta + 1 + h_prev + k) / (1 + h_prev + k));
            t.log_pair[gap][delta] = value;
        }
    }
    return t;
}

double block_sum(const TermTables& tables, int n)
{
    if (n > tables.max_part)
        throw std::out_of_range("block weight exceeds the tabulated range");
    const int r = tables.rank;
    CompensatedSum acc;
    PartitionsOfWeight stream(r, n);
    while (stream.next()) {
        const auto& m = stream.current().parts;
        int sign = 1;
        double log_value = 0.0;
        for (int j = 0; j < r; ++j) {
            sign *= tables.sign[j][m[j]];
            log_value += tables.log_abs[j][m[j]];
        }
        if (sign == 0)
            continue;
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j < r; ++j)
                log_value += tables.log_pair[j - i][m[i] - m[j]];
        }
        acc.add(sign * std::exp(log_value));
    }
    return acc.value();
}

std::vector<double> block_sums_serial(const TermTables& tables, int first, int last)
{
    std::vector<double> out;
    for (int n = first; n <= last; ++n)
        out.push_back(block_sum(tables, n));
    return out;
}

}  // namespace symspec
