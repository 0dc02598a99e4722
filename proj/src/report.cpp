#include "symspec/report.hpp"

#include <cmath>

namespace symspec {

Json number_json(double x)
{
    if (std::isfinite(x))
        return x;
    if (std::isnan(x))
        return "nan";
    return x > 0 ? "inf" : "-inf";
}

Json to_json(const DomainParams& domain)
{
    Json j;
    j["name"] = domain.name();
    j["label"] = domain.label ? Json(to_string(*domain.label)) : Json(nullptr);
    j["a"] = domain.a;
    j["b"] = domain.b;
    j["r"] = domain.r;
    j["d"] = domain.d;
    j["N"] = domain.genus;
    j["rho"] = to_fraction_string(domain.rho);
    return j;
}

Json to_json(const OperatorSpec& op)
{
    Json j;
    j["kind"] = to_string(op.kind);
    j["alpha"] = to_fraction_string(op.alpha);
    j["gamma"] = op.kind == OperatorKind::bergman ? Json(to_fraction_string(op.gamma)) : Json(nullptr);
    j["nu"] = to_fraction_string(op.nu);
    return j;
}

Json to_json(const SeriesEstimate& est)
{
    Json j;
    j["value"] = number_json(est.value);
    j["blocks_used"] = est.blocks_used;
    j["tail_bound"] = est.tail_bound ? number_json(*est.tail_bound) : Json(nullptr);
    j["verdict"] = to_string(est.verdict);
    j["partial_sum"] = number_json(est.partial_sum);
    j["tail_estimate"] = number_json(est.tail_estimate);
    j["fitted_exponent"] = est.fitted_exponent ? number_json(*est.fitted_exponent) : Json(nullptr);
    j["exact"] = est.exact;
    if (!est.block_trace.empty()) {
        Json trace = Json::array();
        for (double v : est.block_trace)
            trace.push_back(number_json(v));
        j["block_trace"] = std::move(trace);
    }
    if (!est.diagnostics.empty())
        j["diagnostics"] = est.diagnostics;
    return j;
}

Json to_json(const MCEstimate& est)
{
    Json j;
    j["value"] = number_json(est.value);
    j["stderr"] = number_json(est.stderr_value);
    j["n_samples"] = est.n_samples;
    j["n_accepted"] = est.n_accepted;
    j["seed"] = est.seed;
    return j;
}

Json to_json(const PolarResult& res)
{
    Json j;
    j["value"] = number_json(res.value);
    j["coarse"] = number_json(res.coarse);
    j["converged"] = res.converged;
    j["nodes_per_axis"] = res.nodes_per_axis;
    return j;
}

Json to_json(const ClassificationReport& report)
{
    Json j;
    j["bounded"] = report.bounded;
    j["compact"] = report.compact;
    j["finite_rank"] = report.finite_rank;
    j["rank"] = report.rank ? Json(report.rank->str()) : Json(nullptr);
    j["schatten_threshold"] =
        report.schatten_threshold ? Json(to_fraction_string(*report.schatten_threshold)) : Json(nullptr);
    Json f;
    f["member"] = report.in_f.member;
    Json witnesses = Json::array();
    for (const auto& w : report.in_f.witnesses)
        witnesses.push_back({{"l", w.l}, {"k", w.k.str()}});
    f["witnesses"] = std::move(witnesses);
    j["in_F"] = std::move(f);
    Json notes = Json::array();
    for (const auto& note : report.consistency_notes)
        notes.push_back({{"code", note.code}, {"message", note.message}});
    j["consistency_notes"] = std::move(notes);
    return j;
}

Json to_json(const BerezinReport& report)
{
    Json j;
    j["exponent"] = to_fraction_string(report.exponent);
    j["in_lp_lambda"] = report.in_lp_lambda;
    j["inequality_only"] = report.inequality_only;
    return j;
}

Json to_json(const TableRow& row)
{
    Json j;
    j["type"] = to_string(row.type);
    j["ambient"] = row.ambient;
    j["d"] = row.d;
    j["a"] = row.a;
    j["b"] = row.b;
    j["r"] = row.r;
    j["N"] = row.genus;
    j["F"] = row.f_description;
    j["B_gamma"] = row.b_gamma_description;
    j["S_p"] = row.schatten_condition;
    return j;
}

Json error_json(const std::string& reason, const std::string& message)
{
    return {{"reason", reason}, {"message", message}};
}

}  // namespace symspec
