#include "symspec/spectral.hpp"

#include "symspec/errors.hpp"
#include "symspec/kernels.hpp"

#include <cmath>
#include <sstream>

namespace symspec {

std::string to_string(OperatorKind kind)
{
    return kind == OperatorKind::bergman ? "bergman" : "szego";
}

OperatorSpec bergman_operator(const DomainParams& domain, const Rational& alpha, const Rational& gamma)
{
    if (gamma <= -1)
        throw NotApplicable("gamma_out_of_range", "weight gamma must exceed -1, got " + to_string(gamma));
    OperatorSpec op;
    op.domain = domain;
    op.kind = OperatorKind::bergman;
    op.alpha = alpha;
    op.gamma = gamma;
    op.nu = domain.genus + gamma;
    return op;
}

OperatorSpec szego_operator(const DomainParams& domain, const Rational& alpha)
{
    OperatorSpec op;
    op.domain = domain;
    op.kind = OperatorKind::szego;
    op.alpha = alpha;
    op.gamma = 0;
    op.nu = domain.rho;
    return op;
}

SignedLogValue eigenvalue(const OperatorSpec& op, const Partition& m)
{
    const auto numerator = pochhammer(op.domain, op.alpha, m);
    if (numerator.exact_zero)
        return SignedLogValue::zero();
    const auto denominator = pochhammer(op.domain, op.nu, m);
    if (denominator.exact_zero)
        throw InternalError("denominator Pochhammer vanished for nu = " + to_string(op.nu));
    return numerator.value / denominator.value;
}

bool ClassificationReport::in_schatten(const Rational& p) const
{
    if (p <= 0)
        return false;
    if (finite_rank)
        return true;
    return schatten_threshold.has_value() && p > *schatten_threshold;
}

namespace {

std::optional<BigInt> finite_rank_dimension(const OperatorSpec& op, int k)
{
    // nonzero eigenvalues need m_1 <= k; skip when the enumeration gets large
    const double cells = std::pow(k + 1.0, op.domain.r);
    if (cells > 2e6)
        return std::nullopt;
    BigInt total = 0;
    GradedPartitions stream(op.domain.r, k * op.domain.r);
    while (stream.next()) {
        const auto& m = stream.current();
        if (m.parts[0] > k)
            continue;
        if (!pochhammer(op.domain, op.alpha, m).exact_zero)
            total += dim_pm(op.domain, m);
    }
    return total;
}

std::string witnesses_text(const FMembership& f)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < f.witnesses.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << "(l=" << f.witnesses[i].l << ",k=" << f.witnesses[i].k << ")";
    }
    return out.str();
}

}  // namespace

ClassificationReport classify(const OperatorSpec& op)
{
    ClassificationReport report;
    report.in_f = in_f_set(op.domain, op.alpha);
    report.finite_rank = is_nonpositive_integer(op.alpha);
    report.bounded = op.alpha <= op.nu || report.finite_rank;
    report.compact = op.alpha < op.nu || report.finite_rank;
    if (op.alpha < op.nu)
        report.schatten_threshold = Rational(op.domain.genus - 1) / (op.nu - op.alpha);
    if (report.finite_rank)
        report.rank = finite_rank_dimension(op, numerator(Rational(-op.alpha)).convert_to<int>());

    if (report.in_f.member && !report.finite_rank) {
        std::ostringstream msg;
        msg << "alpha = " << to_string(op.alpha) << " lies in F = {(a/2)(l-1)-k} through " << witnesses_text(report.in_f)
            << ", but no witness has l = 1: the eigenvalues (alpha)_m/(nu)_m on m = (m1,0,...,0) are nonzero for "
               "every m1, so the operator has infinite rank. The rule 'alpha in F implies finite rank and every S_p' "
               "does not hold here; S_p membership is decided by p > (N-1)/(nu-alpha)";
        if (report.schatten_threshold)
            msg << " = " << to_string(*report.schatten_threshold);
        msg << ".";
        report.consistency_notes.push_back({"f_set_finite_rank_conflict", msg.str()});
    }
    return report;
}

namespace {

int resolve_max_weight(const OperatorSpec& op, const SeriesOptions& options)
{
    return options.max_weight > 0 ? options.max_weight : default_max_weight(op.domain.r);
}

SeriesEstimate run_series(const DomainParams& domain, const std::vector<PochhammerPower>& factors, bool signed_terms,
                          const SeriesOptions& options)
{
    const int max_weight = options.max_weight > 0 ? options.max_weight : default_max_weight(domain.r);
    const auto tables = build_term_tables(domain, factors, signed_terms, max_weight);
    SeriesOptions resolved = options;
    resolved.max_weight = max_weight;
    return sum_graded(tables, resolved);
}

}  // namespace

SeriesEstimate schatten_norm(const OperatorSpec& op, const Rational& p, const SeriesOptions& options)
{
    if (p <= 0)
        throw NotApplicable("p_out_of_range", "Schatten exponent p must be positive, got " + to_string(p));
    const double pd = to_double(p);
    SeriesOptions opts = options;
    opts.max_weight = resolve_max_weight(op, options);
    auto est = run_series(op.domain, {{op.alpha, pd}, {op.nu, -pd}}, false, opts);
    // report the norm rather than its p-th power
    const double sum = est.value;
    est.value = std::pow(sum, 1.0 / pd);
    est.partial_sum = std::pow(est.partial_sum, 1.0 / pd);
    if (est.tail_bound && sum > 0)
        *est.tail_bound *= std::pow(sum, 1.0 / pd - 1.0) / pd;
    return est;
}

SeriesEstimate trace_series(const OperatorSpec& op, const SeriesOptions& options)
{
    return run_series(op.domain, {{op.alpha, 1.0}, {op.nu, -1.0}}, true, options);
}

double trace_closed(const OperatorSpec& op)
{
    if (op.kind != OperatorKind::bergman)
        throw NotApplicable("no_closed_form", "no closed-form trace is available for the Szego-type operator; "
                                              "use the series");
    if (!(op.alpha < 1 + op.gamma))
        throw NotApplicable("not_trace_class", "B_{alpha,gamma} is trace class only for alpha < 1 + gamma (alpha = " +
                                                   to_string(op.alpha) + ", gamma = " + to_string(op.gamma) + ")");
    const auto& domain = op.domain;
    const Rational shift = domain.half_a() * (domain.r - 1) + 1 + op.gamma;
    const auto g1 = gamma_omega(domain, op.nu);
    const auto g2 = gamma_omega(domain, op.nu - op.alpha);
    const auto g3 = gamma_omega(domain, shift - op.alpha);
    const auto g4 = gamma_omega(domain, shift);
    if (g1.is_pole() || g2.is_pole() || g3.is_pole() || g4.is_pole())
        throw NotApplicable("gamma_pole", "Gindikin Gamma pole in the closed-form trace");
    return (g1.value / g2.value * g3.value / g4.value).to_double();
}

SeriesEstimate hs_norm_sq(const OperatorSpec& op, const SeriesOptions& options)
{
    return run_series(op.domain, {{op.alpha, 2.0}, {op.nu, -2.0}}, true, options);
}

BerezinReport berezin_report(const OperatorSpec& op, const Rational& p)
{
    if (p <= 0)
        throw NotApplicable("p_out_of_range", "p must be positive, got " + to_string(p));
    BerezinReport report;
    report.exponent = op.nu - op.alpha;
    report.in_lp_lambda = p * report.exponent - op.domain.genus > -1;
    report.inequality_only = op.kind == OperatorKind::szego;
    return report;
}

SeriesEstimate j_integral(const DomainParams& domain, const Rational& beta, const Rational& gamma,
                          const SeriesOptions& options)
{
    if (gamma <= -1)
        throw NotApplicable("gamma_out_of_range", "weight gamma must exceed -1, got " + to_string(gamma));
    const Rational half = (domain.genus + beta + gamma) / 2;
    return run_series(domain, {{half, 2.0}, {domain.genus + gamma, -1.0}, {Rational(domain.genus), -1.0}}, true,
                      options);
}

}  // namespace symspec
