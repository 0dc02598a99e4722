#include "symspec/integrate.hpp"

#include "symspec/accumulate.hpp"
#include "symspec/errors.hpp"
#include "symspec/gauss_jacobi.hpp"

#include <cmath>

namespace symspec {

namespace {

struct ChamberRules {
    int rank = 1;
    int a = 1;
    int b = 0;
    std::vector<QuadratureRule> axes;  // axes[i-1] carries x_i^{P_i} (1-x_i)^{Q_i}
};

// P_i = t i + (i-1) + a i (i-1)/2,  Q_i = a for i < r and 0 for i = r
ChamberRules make_rules(const DomainParams& domain, double t, int nodes)
{
    ChamberRules rules;
    rules.rank = domain.r;
    rules.a = domain.a;
    rules.b = domain.b;
    for (int i = 1; i <= domain.r; ++i) {
        const double p = t * i + (i - 1) + domain.a * i * (i - 1) / 2.0;
        const double q = i < domain.r ? domain.a : 0.0;
        rules.axes.push_back(gauss_jacobi_unit(nodes, p, q));
    }
    return rules;
}

// Polynomial remainder times the profile at one cube point.
double remainder(const ChamberRules& rules, std::span<const double> x, std::span<double> w, std::span<double> u,
                 const RadialProfile& profile)
{
    const int r = rules.rank;
    double running = 1.0;
    for (int j = r - 1; j >= 0; --j) {
        running *= x[j];
        w[j] = running;
        u[j] = 1.0 - running;
    }
    double value = 1.0;
    if (rules.b > 0) {
        for (int j = 0; j < r; ++j)
            value *= std::pow(u[j], rules.b);
    }
    for (int j = 0; j < r; ++j) {
        double ratio = x[j];
        for (int k = j + 2; k < r; ++k) {
            ratio *= x[k - 1];
            value *= std::pow(1.0 - ratio, rules.a);
        }
    }
    if (profile)
        value *= profile(u);
    return value;
}

// Sum over all axes except the first for a fixed first-axis node.
double inner_sum(const ChamberRules& rules, int first_index, const RadialProfile& profile)
{
    const int r = rules.rank;
    const int n = static_cast<int>(rules.axes[0].nodes.size());
    std::vector<double> x(static_cast<std::size_t>(r)), w(x.size()), u(x.size());
    std::vector<int> idx(static_cast<std::size_t>(r), 0);
    idx[0] = first_index;
    x[0] = rules.axes[0].nodes[static_cast<std::size_t>(first_index)];
    CompensatedSum acc;
    while (true) {
        double weight = 1.0;
        for (int i = 1; i < r; ++i) {
            x[i] = rules.axes[i].nodes[static_cast<std::size_t>(idx[i])];
            weight *= rules.axes[i].weights[static_cast<std::size_t>(idx[i])];
        }
        acc.add(weight * remainder(rules, x, w, u, profile));
        int axis = 1;
        while (axis < r && ++idx[axis] == n)
            idx[axis++] = 0;
        if (axis >= r)
            break;
    }
    return acc.value();
}

double chamber_integral(const ChamberRules& rules, const RadialProfile& profile, Execution execution)
{
    const auto& first = rules.axes[0];
    const int n = static_cast<int>(first.nodes.size());
    std::vector<double> partial(static_cast<std::size_t>(n));
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i)
            partial[static_cast<std::size_t>(i)] = inner_sum(rules, i, profile);
    } else {
        for (int i = 0; i < n; ++i)
            partial[static_cast<std::size_t>(i)] = inner_sum(rules, i, profile);
    }
    CompensatedSum acc;
    for (int i = 0; i < n; ++i)
        acc.add(first.weights[static_cast<std::size_t>(i)] * partial[static_cast<std::size_t>(i)]);
    return acc.value();
}

double normalized(const PolarSpec& spec, int nodes, Execution execution)
{
    const double t = to_double(spec.exponent);
    const auto numerator_rules = make_rules(spec.domain, t, nodes);
    const auto volume_rules = make_rules(spec.domain, 0.0, nodes);
    return chamber_integral(numerator_rules, spec.profile, execution) /
           chamber_integral(volume_rules, RadialProfile{}, execution);
}

}  // namespace

PolarResult polar_integral(const PolarSpec& spec, Execution execution)
{
    if (spec.exponent <= -1)
        throw NotApplicable("not_integrable",
                            "h(z,z)^t is integrable only for t > -1, got t = " + to_string(spec.exponent));
    if (spec.nodes_per_axis < 1)
        throw std::invalid_argument("nodes_per_axis must be positive");
    PolarResult result;
    result.nodes_per_axis = spec.nodes_per_axis;
    result.coarse = normalized(spec, spec.nodes_per_axis, execution);
    result.value = normalized(spec, 2 * spec.nodes_per_axis, execution);
    result.converged = std::fabs(result.value - result.coarse) <= 1e-10 * std::fabs(result.value);
    return result;
}

double trace_quadrature(const OperatorSpec& op, int nodes_per_axis)
{
    if (op.kind != OperatorKind::bergman)
        throw NotApplicable("bergman_only", "the trace integral applies to the Bergman-type operator only");
    if (!(op.alpha < 1 + op.gamma))
        throw NotApplicable("not_trace_class", "B_{alpha,gamma} is trace class only for alpha < 1 + gamma (alpha = " +
                                                   to_string(op.alpha) + ", gamma = " + to_string(op.gamma) + ")");
    PolarSpec shifted{op.domain, op.gamma - op.alpha, {}, nodes_per_axis};
    PolarSpec weight{op.domain, op.gamma, {}, nodes_per_axis};
    const auto top = polar_integral(shifted);
    const auto bottom = polar_integral(weight);
    if (!top.converged || !bottom.converged)
        throw NotApplicable("quadrature_inconclusive", "polar quadrature did not settle under node doubling");
    return top.value / bottom.value;
}

}  // namespace symspec
