#include "symspec/cli.hpp"

#include "symspec/errors.hpp"
#include "symspec/gindikin.hpp"
#include "symspec/integrate.hpp"
#include "symspec/kernels.hpp"
#include "symspec/partitions.hpp"
#include "symspec/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

namespace symspec::cli {

namespace {

// Which flags a subcommand accepts.
enum Flag : unsigned {
    f_domain = 1u << 0,
    f_alpha = 1u << 1,
    f_gamma = 1u << 2,
    f_kind = 1u << 3,
    f_p = 1u << 4,
    f_beta = 1u << 5,
    f_t = 1u << 6,
    f_max_weight = 1u << 7,
    f_tolerance = 1u << 8,
    f_nodes = 1u << 9,
    f_samples = 1u << 10,
    f_seed = 1u << 11,
    f_threads = 1u << 12,
    f_method = 1u << 13,
    f_csv = 1u << 14,
};

struct SubcommandInfo {
    const char* name;
    const char* help;
    unsigned flags;
};

constexpr unsigned series_flags = f_max_weight | f_tolerance | f_threads;
constexpr unsigned op_flags = f_domain | f_alpha | f_gamma | f_kind;

const SubcommandInfo subcommands[] = {
    {"domain", "invariants (a, b, r, d, N, rho) of a domain", f_domain},
    {"classify", "bounded / compact / finite rank / Schatten classification", op_flags},
    {"spectrum", "eigenvalues and multiplicities up to a weight", op_flags | f_max_weight | f_csv},
    {"schatten", "Schatten p-norm as a graded series", op_flags | f_p | series_flags},
    {"trace", "trace by series, closed form and polar quadrature", op_flags | f_method | f_nodes | series_flags},
    {"hs", "squared Hilbert-Schmidt norm", op_flags | series_flags},
    {"berezin", "L^p(d lambda) membership of the Berezin transform", op_flags | f_p},
    {"jintegral", "integral of J_{beta,gamma} over the domain", f_domain | f_beta | f_gamma | series_flags},
    {"quad", "polar quadrature of h(z,z)^t, or of the trace with --alpha", f_domain | f_t | f_alpha | f_gamma | f_nodes |
                                                                            f_threads},
    {"mc", "Monte Carlo trace on the matrix ball I(r,s)", f_domain | f_alpha | f_gamma | f_samples | f_seed | f_threads},
    {"table", "classification table of the six Cartan families", f_gamma},
};

struct RawOptions {
    std::string type;
    std::optional<int> r, s, n, a, b;
    std::string alpha, gamma, beta, p, t;
    bool szego = false;
    std::string kind;
    std::string method;
    std::optional<int> max_weight, nodes, threads;
    std::optional<double> tolerance;
    std::optional<long long> samples;
    std::optional<std::uint64_t> seed;
    bool json = false;
    bool csv = false;
};

void add_options(CLI::App& app, unsigned flags, RawOptions& o)
{
    if (flags & f_domain) {
        app.add_option("--type", o.type, "Cartan type I, II, III, IV, V or VI");
        app.add_option("--r", o.r, "rank (I, III) or raw-triple rank");
        app.add_option("--s", o.s, "second size of I(r,s); size of IV(s)");
        app.add_option("--n", o.n, "size of II(n)");
        app.add_option("--a", o.a, "raw multiplicity a");
        app.add_option("--b", o.b, "raw multiplicity b");
    }
    if (flags & f_alpha)
        app.add_option("--alpha", o.alpha, "exponent alpha, p/q or decimal");
    if (flags & f_gamma)
        app.add_option("--gamma", o.gamma, "Bergman weight gamma > -1 (default 0)");
    if (flags & f_kind) {
        app.add_flag("--szego", o.szego, "Szego-type operator H_alpha");
        app.add_option("--kind", o.kind, "bergman or szego");
    }
    if (flags & f_p)
        app.add_option("--p", o.p, "exponent p > 0");
    if (flags & f_beta)
        app.add_option("--beta", o.beta, "exponent beta");
    if (flags & f_t)
        app.add_option("--t", o.t, "exponent t > -1 of h(z,z)");
    if (flags & f_method)
        app.add_option("--method", o.method, "series, closed, quadrature or all");
    if (flags & f_max_weight)
        app.add_option("--max-weight", o.max_weight, "largest weight |m| summed");
    if (flags & f_tolerance)
        app.add_option("--tolerance", o.tolerance, "relative tolerance of the series");
    if (flags & f_nodes)
        app.add_option("--nodes", o.nodes, "Gauss-Jacobi nodes per axis");
    if (flags & f_samples)
        app.add_option("--samples", o.samples, "accepted Monte Carlo samples");
    if (flags & f_seed)
        app.add_option("--seed", o.seed, "64-bit seed");
    if (flags & f_threads)
        app.add_option("--threads", o.threads, "worker threads (fallback: SYMSPEC_THREADS)");
    app.add_flag("--json", o.json, "JSON output");
    if (flags & f_csv)
        app.add_flag("--csv", o.csv, "CSV output");
}

std::optional<Rational> rational_flag(const std::string& text, const char* flag)
{
    if (text.empty())
        return std::nullopt;
    auto q = parse_rational(text);
    if (!q)
        throw UsageError(std::string("malformed rational for ") + flag + ": '" + text +
                         "' (expected p/q, an integer or a decimal such as 0.5)");
    return q;
}

void check_domain_flags(const DomainSpec& d)
{
    const bool raw = d.a || d.b;
    if (d.type && raw)
        throw UsageError("give either --type with its sizes or the raw triple --a --b --r, not both");
    if (raw) {
        if (!d.a || !d.b || !d.r)
            throw UsageError("the raw triple needs all of --a, --b and --r");
        if (d.s || d.n)
            throw UsageError("--s and --n only apply together with --type");
        return;
    }
    if (!d.type)
        throw UsageError("missing domain: use --type (I, II, III, IV, V, VI) with its sizes, or --a --b --r");
    auto require = [](bool present, const char* what) {
        if (!present)
            throw UsageError(what);
    };
    auto forbid = [](bool present, const char* what) {
        if (present)
            throw UsageError(what);
    };
    switch (*d.type) {
    case CartanType::I:
        require(d.r && d.s, "type I needs --r and --s");
        forbid(d.n.has_value(), "type I takes --r and --s, not --n");
        break;
    case CartanType::II:
        require(d.n.has_value(), "type II needs --n");
        forbid(d.r || d.s, "type II takes --n only");
        break;
    case CartanType::III:
        require(d.r.has_value(), "type III needs --r");
        forbid(d.s || d.n, "type III takes --r only");
        break;
    case CartanType::IV:
        require(d.s.has_value(), "type IV needs --s");
        forbid(d.r || d.n, "type IV takes --s only");
        break;
    case CartanType::V:
    case CartanType::VI:
        forbid(d.r || d.s || d.n, "types V and VI take no size flags");
        break;
    }
}

DomainParams resolve_domain(const DomainSpec& d)
{
    if (!d.type)
        return make_domain(*d.a, *d.b, *d.r);
    switch (*d.type) {
    case CartanType::I:
        return make_domain(CartanLabel::type_I(*d.r, *d.s));
    case CartanType::II:
        return make_domain(CartanLabel::type_II(*d.n));
    case CartanType::III:
        return make_domain(CartanLabel::type_III(*d.r));
    case CartanType::IV:
        return make_domain(CartanLabel::type_IV(*d.s));
    case CartanType::V:
        return make_domain(CartanLabel::type_V());
    case CartanType::VI:
        return make_domain(CartanLabel::type_VI());
    }
    throw InternalError("unhandled Cartan type");
}

Command finish(const SubcommandInfo& info, const RawOptions& o)
{
    Command cmd;
    cmd.subcommand = info.name;
    if (!o.type.empty()) {
        cmd.domain.type = parse_cartan_type(o.type);
        if (!cmd.domain.type)
            throw UsageError("unknown --type '" + o.type + "' (expected I, II, III, IV, V or VI)");
    }
    cmd.domain.r = o.r;
    cmd.domain.s = o.s;
    cmd.domain.n = o.n;
    cmd.domain.a = o.a;
    cmd.domain.b = o.b;
    if (info.flags & f_domain)
        check_domain_flags(cmd.domain);

    cmd.alpha = rational_flag(o.alpha, "--alpha");
    cmd.gamma = rational_flag(o.gamma, "--gamma");
    cmd.beta = rational_flag(o.beta, "--beta");
    cmd.p = rational_flag(o.p, "--p");
    cmd.t = rational_flag(o.t, "--t");

    if (!o.kind.empty()) {
        if (o.kind == "szego")
            cmd.kind = OperatorKind::szego;
        else if (o.kind != "bergman")
            throw UsageError("--kind must be bergman or szego, got '" + o.kind + "'");
    }
    if (o.szego) {
        if (!o.kind.empty() && o.kind != "szego")
            throw UsageError("--szego contradicts --kind " + o.kind);
        cmd.kind = OperatorKind::szego;
    }
    if (cmd.kind == OperatorKind::szego && cmd.gamma)
        throw UsageError("--gamma is a Bergman weight and does not apply to the Szego-type operator");

    const std::string sub = info.name;
    if ((info.flags & f_alpha) && !cmd.alpha && sub != "quad")
        throw UsageError(sub + " needs --alpha");
    if ((info.flags & f_p) && !cmd.p)
        throw UsageError(sub + " needs --p");
    if ((info.flags & f_beta) && !cmd.beta)
        throw UsageError(sub + " needs --beta");
    if (sub == "quad") {
        if (cmd.t.has_value() == cmd.alpha.has_value())
            throw UsageError("quad needs exactly one of --t (integral of h^t) or --alpha (trace integral)");
        if (cmd.t && cmd.gamma)
            throw UsageError("--gamma applies to quad only together with --alpha");
    }
    if (sub == "mc" && !(cmd.domain.type == CartanType::I))
        throw UsageError("mc samples the matrix ball I(r,s): use --type I --r R --s S");

    if (!o.method.empty()) {
        static const char* methods[] = {"series", "closed", "quadrature", "all"};
        if (std::find(std::begin(methods), std::end(methods), o.method) == std::end(methods))
            throw UsageError("--method must be series, closed, quadrature or all, got '" + o.method + "'");
        cmd.method = o.method;
    }
    if (o.max_weight) {
        if (*o.max_weight < 1)
            throw UsageError("--max-weight must be positive");
        cmd.max_weight = *o.max_weight;
    }
    if (o.tolerance) {
        if (!(*o.tolerance > 0.0 && *o.tolerance < 1.0))
            throw UsageError("--tolerance must lie in (0, 1)");
        cmd.tolerance = *o.tolerance;
    }
    if (o.nodes) {
        if (*o.nodes < 2 || *o.nodes > 400)
            throw UsageError("--nodes must lie in [2, 400]");
        cmd.nodes = *o.nodes;
    }
    if (o.samples) {
        if (*o.samples < 1000)
            throw UsageError("--samples must be at least 1000");
        cmd.samples = *o.samples;
    }
    if (o.seed)
        cmd.seed = *o.seed;
    if (o.threads) {
        if (*o.threads < 1)
            throw UsageError("--threads must be positive");
        cmd.threads = *o.threads;
    }
    if (o.json && o.csv)
        throw UsageError("choose one of --json and --csv");
    cmd.format = o.json ? OutputFormat::json : o.csv ? OutputFormat::csv : OutputFormat::text;
    return cmd;
}

struct Parser {
    CLI::App app{"Spectra and Schatten classes of Bergman- and Szego-type operators on bounded symmetric domains",
                 "symspec"};
    std::map<std::string, RawOptions> options;
    std::map<std::string, CLI::App*> apps;

    Parser()
    {
        app.require_subcommand(1);
        for (const auto& info : subcommands) {
            auto* sub = app.add_subcommand(info.name, info.help);
            add_options(*sub, info.flags, options[info.name]);
            apps[info.name] = sub;
        }
    }
};

// ---- rendering ----

std::string fmt(double x, int digits = 12)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

class TextBlock {
public:
    void row(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void line(const std::string& text) { rows_.emplace_back(std::string(), text); }

    std::string str() const
    {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_)
            width = std::max(width, k.size());
        std::string out;
        for (const auto& [k, v] : rows_) {
            if (k.empty()) {
                out += v + "\n";
                continue;
            }
            out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
        }
        return out;
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string domain_line(const DomainParams& d)
{
    return d.name() + "  (a=" + std::to_string(d.a) + ", b=" + std::to_string(d.b) + ", r=" + std::to_string(d.r) +
           ", d=" + std::to_string(d.d) + ", N=" + std::to_string(d.genus) + ", rho=" + to_string(d.rho) + ")";
}

std::string operator_line(const OperatorSpec& op)
{
    if (op.kind == OperatorKind::szego)
        return "szego  alpha=" + to_string(op.alpha) + "  nu=rho=" + to_string(op.nu);
    return "bergman  alpha=" + to_string(op.alpha) + "  gamma=" + to_string(op.gamma) + "  nu=N+gamma=" +
           to_string(op.nu);
}

void series_rows(TextBlock& t, const SeriesEstimate& est)
{
    t.row("value", fmt(est.value, 15));
    t.row("verdict", to_string(est.verdict));
    t.row("blocks_used", std::to_string(est.blocks_used));
    t.row("tail_bound", est.tail_bound ? fmt(*est.tail_bound, 4) : "unavailable");
    if (est.fitted_exponent)
        t.row("fitted_exponent", fmt(*est.fitted_exponent, 6));
    if (est.exact)
        t.row("exact", "finite support, summed completely");
    if (!est.diagnostics.empty())
        t.row("diagnostics", est.diagnostics);
}

std::string threshold_text(const ClassificationReport& report)
{
    if (report.finite_rank)
        return "every p > 0 (finite rank)";
    if (!report.schatten_threshold)
        return "none (not compact)";
    return "p > " + to_string(*report.schatten_threshold);
}

struct Context {
    const Command& cmd;
    Json envelope;
    TextBlock text;
    std::string raw;  // csv or table text printed as is
};

OperatorSpec make_operator(const Command& cmd, const DomainParams& domain)
{
    if (cmd.kind == OperatorKind::szego)
        return szego_operator(domain, *cmd.alpha);
    return bergman_operator(domain, *cmd.alpha, cmd.gamma.value_or(0));
}

SeriesOptions series_options(const Command& cmd)
{
    SeriesOptions o;
    o.tolerance = cmd.tolerance;
    o.max_weight = cmd.max_weight;
    return o;
}

void describe_operator(Context& ctx, const DomainParams& domain, const OperatorSpec& op)
{
    ctx.envelope["domain"] = to_json(domain);
    ctx.envelope["operator"] = to_json(op);
    ctx.text.row("domain", domain_line(domain));
    ctx.text.row("operator", operator_line(op));
}

void run_domain(Context& ctx)
{
    const auto d = resolve_domain(ctx.cmd.domain);
    ctx.envelope["domain"] = to_json(d);
    ctx.envelope["result"] = to_json(d);
    ctx.text.row("domain", d.name());
    ctx.text.row("a", std::to_string(d.a));
    ctx.text.row("b", std::to_string(d.b));
    ctx.text.row("r", std::to_string(d.r));
    ctx.text.row("d", std::to_string(d.d));
    ctx.text.row("N", std::to_string(d.genus));
    ctx.text.row("rho", to_string(d.rho));
}

void run_classify(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const auto op = make_operator(ctx.cmd, domain);
    describe_operator(ctx, domain, op);
    const auto report = classify(op);
    ctx.envelope["result"] = to_json(report);
    auto& t = ctx.text;
    t.row("bounded", yes_no(report.bounded));
    t.row("compact", yes_no(report.compact));
    t.row("finite_rank", yes_no(report.finite_rank));
    if (report.finite_rank)
        t.row("rank", report.rank ? report.rank->str() : "not enumerated");
    t.row("schatten", threshold_text(report));
    std::string f = yes_no(report.in_f.member);
    for (const auto& w : report.in_f.witnesses)
        f += "  (l=" + std::to_string(w.l) + ", k=" + w.k.str() + ")";
    t.row("alpha_in_F", f);
    for (const auto& note : report.consistency_notes)
        t.row("note", "[" + note.code + "] " + note.message);
}

void run_spectrum(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const auto op = make_operator(ctx.cmd, domain);
    describe_operator(ctx, domain, op);
    const int max_weight = ctx.cmd.max_weight > 0 ? ctx.cmd.max_weight : 10;
    const int r = domain.r;

    std::ostringstream csv;
    for (int j = 1; j <= r; ++j)
        csv << 'm' << j << ',';
    csv << "dim,eigenvalue_sign,eigenvalue_log_abs,eigenvalue\n";
    Json rows = Json::array();
    GradedPartitions stream(r, max_weight);
    while (stream.next()) {
        const auto& m = stream.current();
        const auto dim = dim_pm(domain, m);
        const auto lambda = eigenvalue(op, m);
        const double value = lambda.to_double();
        const std::string log_abs = fmt(lambda.log_abs, 17);
        csv << m.to_csv() << ',' << dim.str() << ',' << lambda.sign << ',' << log_abs << ',' << fmt(value, 17)
            << '\n';
        Json row;
        row["m"] = m.parts;
        row["dim"] = dim.str();
        row["eigenvalue_sign"] = lambda.sign;
        row["eigenvalue_log_abs"] = number_json(lambda.log_abs);
        row["eigenvalue"] = number_json(value);
        rows.push_back(std::move(row));
    }
    ctx.envelope["result"] = {{"max_weight", max_weight}, {"rows", std::move(rows)}};
    if (ctx.cmd.format == OutputFormat::csv) {
        ctx.raw = csv.str();
        return;
    }
    ctx.text.line(csv.str().substr(0, csv.str().size() - 1));
}

void run_schatten(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const auto op = make_operator(ctx.cmd, domain);
    describe_operator(ctx, domain, op);
    const auto report = classify(op);
    const auto est = schatten_norm(op, *ctx.cmd.p, series_options(ctx.cmd));
    Json result = to_json(est);
    result["p"] = to_fraction_string(*ctx.cmd.p);
    result["in_schatten"] = report.in_schatten(*ctx.cmd.p);
    ctx.envelope["result"] = std::move(result);
    ctx.text.row("p", to_string(*ctx.cmd.p));
    ctx.text.row("in_S_p", std::string(yes_no(report.in_schatten(*ctx.cmd.p))) + "  (" + threshold_text(report) + ")");
    series_rows(ctx.text, est);
}

void run_trace(Context& ctx)
{
    const auto& cmd = ctx.cmd;
    const auto domain = resolve_domain(cmd.domain);
    const auto op = make_operator(cmd, domain);
    describe_operator(ctx, domain, op);
    const auto report = classify(op);
    if (!report.in_schatten(1))
        throw NotApplicable("not_trace_class", "the operator is not trace class: S_1 needs " + threshold_text(report));

    const bool all = cmd.method == "all";
    Json result = Json::object();
    std::vector<std::pair<std::string, double>> values;
    auto attempt = [&](const std::string& method, const std::function<void()>& body) {
        if (!all) {
            body();
            return;
        }
        try {
            body();
        } catch (const NotApplicable& e) {
            result[method] = {{"error", error_json(e.reason(), e.what())}};
            ctx.text.row(method, std::string("not applicable: ") + e.what());
        }
    };

    if (all || cmd.method == "series") {
        attempt("series", [&] {
            const auto est = trace_series(op, series_options(cmd));
            result["series"] = to_json(est);
            values.emplace_back("series", est.value);
            std::string detail = "verdict " + to_string(est.verdict) + ", blocks " + std::to_string(est.blocks_used);
            if (est.tail_bound)
                detail += ", tail_bound " + fmt(*est.tail_bound, 3);
            ctx.text.row("series", fmt(est.value, 15) + "  " + detail);
        });
    }
    if (all || cmd.method == "closed") {
        attempt("closed", [&] {
            const double v = trace_closed(op);
            result["closed"] = {{"value", number_json(v)}};
            values.emplace_back("closed", v);
            ctx.text.row("closed", fmt(v, 15));
        });
    }
    if (all || cmd.method == "quadrature") {
        attempt("quadrature", [&] {
            const double v = trace_quadrature(op, cmd.nodes);
            result["quadrature"] = {{"value", number_json(v)}, {"nodes_per_axis", cmd.nodes}};
            values.emplace_back("quadrature", v);
            ctx.text.row("quadrature", fmt(v, 15) + "  nodes " + std::to_string(cmd.nodes));
        });
    }
    if (values.size() > 1) {
        double worst = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                worst = std::max(worst, std::fabs(values[i].second - values[j].second) /
                                            std::max(std::fabs(values[i].second), std::fabs(values[j].second)));
        result["max_relative_difference"] = number_json(worst);
        ctx.text.row("max_rel_diff", fmt(worst, 3));
    }
    ctx.envelope["result"] = std::move(result);
}

void run_hs(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const auto op = make_operator(ctx.cmd, domain);
    describe_operator(ctx, domain, op);
    const auto est = hs_norm_sq(op, series_options(ctx.cmd));
    ctx.envelope["result"] = to_json(est);
    series_rows(ctx.text, est);
}

void run_berezin(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const auto op = make_operator(ctx.cmd, domain);
    describe_operator(ctx, domain, op);
    const auto report = berezin_report(op, *ctx.cmd.p);
    Json result = to_json(report);
    result["p"] = to_fraction_string(*ctx.cmd.p);
    ctx.envelope["result"] = std::move(result);
    ctx.text.row("p", to_string(*ctx.cmd.p));
    ctx.text.row("transform", "h(z,z)^(" + to_string(report.exponent) + ")");
    ctx.text.row("in_Lp_lambda", yes_no(report.in_lp_lambda));
    if (report.inequality_only)
        ctx.text.row("basis", "membership inequality only; the transform itself is not evaluated");
}

void run_jintegral(Context& ctx)
{
    const auto domain = resolve_domain(ctx.cmd.domain);
    const Rational gamma = ctx.cmd.gamma.value_or(0);
    const auto est = j_integral(domain, *ctx.cmd.beta, gamma, series_options(ctx.cmd));
    ctx.envelope["domain"] = to_json(domain);
    Json result = to_json(est);
    result["beta"] = to_fraction_string(*ctx.cmd.beta);
    result["gamma"] = to_fraction_string(gamma);
    ctx.envelope["result"] = std::move(result);
    ctx.text.row("domain", domain_line(domain));
    ctx.text.row("beta", to_string(*ctx.cmd.beta));
    ctx.text.row("gamma", to_string(gamma));
    series_rows(ctx.text, est);
}

void run_quad(Context& ctx)
{
    const auto& cmd = ctx.cmd;
    const auto domain = resolve_domain(cmd.domain);
    ctx.envelope["domain"] = to_json(domain);
    ctx.text.row("domain", domain_line(domain));
    if (cmd.t) {
        const auto res = polar_integral({domain, *cmd.t, {}, cmd.nodes});
        Json result = to_json(res);
        result["t"] = to_fraction_string(*cmd.t);
        ctx.envelope["result"] = std::move(result);
        ctx.text.row("integral", "h(z,z)^(" + to_string(*cmd.t) + ") dv");
        ctx.text.row("value", fmt(res.value, 15));
        ctx.text.row("coarse", fmt(res.coarse, 15) + "  (" + std::to_string(res.nodes_per_axis) + " nodes per axis)");
        ctx.text.row("converged", yes_no(res.converged));
        return;
    }
    const auto op = bergman_operator(domain, *cmd.alpha, cmd.gamma.value_or(0));
    ctx.envelope["operator"] = to_json(op);
    ctx.text.row("operator", operator_line(op));
    const double v = trace_quadrature(op, cmd.nodes);
    ctx.envelope["result"] = {{"value", number_json(v)}, {"nodes_per_axis", cmd.nodes}};
    ctx.text.row("trace", fmt(v, 15));
}

void run_mc(Context& ctx)
{
    const auto& cmd = ctx.cmd;
    const auto domain = resolve_domain(cmd.domain);
    const Rational gamma = cmd.gamma.value_or(0);
    const auto op = bergman_operator(domain, *cmd.alpha, gamma);
    describe_operator(ctx, domain, op);
    const auto est = mc_trace(*cmd.domain.r, *cmd.domain.s, *cmd.alpha, gamma, cmd.samples, cmd.seed);
    ctx.envelope["result"] = to_json(est);
    ctx.text.row("value", fmt(est.value, 10));
    ctx.text.row("stderr", fmt(est.stderr_value, 4));
    ctx.text.row("accepted", std::to_string(est.n_accepted) + " of " + std::to_string(est.n_samples) + " proposals");
    ctx.text.row("seed", std::to_string(est.seed));
}

void run_table(Context& ctx)
{
    const Rational gamma = ctx.cmd.gamma.value_or(0);
    const auto rows = classification_table(gamma);
    Json list = Json::array();
    for (const auto& row : rows)
        list.push_back(to_json(row));
    ctx.envelope["result"] = {{"gamma", to_fraction_string(gamma)}, {"rows", std::move(list)}};
    ctx.raw = render_table(rows);
}

void apply_threads(const Command& cmd, std::string& err)
{
    int threads = cmd.threads;
    if (threads == 0) {
        if (const char* env = std::getenv("SYMSPEC_THREADS"); env && *env) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (*end == '\0' && v > 0 && v < 4096)
                threads = static_cast<int>(v);
            else
                err += "warning: ignoring SYMSPEC_THREADS='" + std::string(env) + "'\n";
        }
    }
    set_thread_count(threads);
}

std::string render(const Context& ctx)
{
    if (ctx.cmd.format == OutputFormat::json)
        return ctx.envelope.dump(2) + "\n";
    if (!ctx.raw.empty())
        return ctx.raw;
    return ctx.text.str();
}

Outcome failure(const Command* cmd, bool json, int code, const std::string& reason, const std::string& message)
{
    Outcome out;
    out.exit_code = code;
    if (json) {
        Json envelope;
        envelope["command"] = cmd ? Json(cmd->subcommand) : Json(nullptr);
        envelope["error"] = error_json(reason, message);
        out.out = envelope.dump(2) + "\n";
    }
    out.err = "symspec: " + message + " [" + reason + "]\n";
    return out;
}

}  // namespace

Command parse(const std::vector<std::string>& args)
{
    Parser parser;
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        parser.app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (const auto& info : subcommands) {
        if (parser.apps[info.name]->parsed())
            return finish(info, parser.options[info.name]);
    }
    throw UsageError("missing subcommand");
}

Outcome execute(const Command& cmd)
{
    const bool json = cmd.format == OutputFormat::json;
    Outcome outcome;
    apply_threads(cmd, outcome.err);
    try {
        Context ctx{cmd, Json::object(), {}, {}};
        ctx.envelope["command"] = cmd.subcommand;
        static const std::map<std::string, void (*)(Context&)> handlers = {
            {"domain", run_domain},   {"classify", run_classify}, {"spectrum", run_spectrum},
            {"schatten", run_schatten}, {"trace", run_trace},     {"hs", run_hs},
            {"berezin", run_berezin}, {"jintegral", run_jintegral}, {"quad", run_quad},
            {"mc", run_mc},           {"table", run_table},
        };
        const auto it = handlers.find(cmd.subcommand);
        if (it == handlers.end())
            throw UsageError("unknown subcommand '" + cmd.subcommand + "'");
        it->second(ctx);
        outcome.out = render(ctx);
        return outcome;
    } catch (const NotApplicable& e) {
        return failure(&cmd, json, 2, e.reason(), e.what());
    } catch (const DomainError& e) {
        return failure(&cmd, json, 2, "invalid_domain", e.what());
    } catch (const UsageError& e) {
        return failure(&cmd, json, 1, "usage", e.what());
    } catch (const std::exception& e) {
        return failure(&cmd, json, 1, "internal_error", e.what());
    }
}

Outcome run(const std::vector<std::string>& args)
{
    const bool json = std::find(args.begin(), args.end(), "--json") != args.end();
    Command cmd;
    try {
        cmd = parse(args);
    } catch (const CLI::CallForHelp&) {
        Parser parser;
        const CLI::App* target = &parser.app;
        for (const auto& a : args)
            if (parser.apps.count(a))
                target = parser.apps[a];
        return {0, target->help(), {}};
    } catch (const UsageError& e) {
        auto out = failure(nullptr, json, 1, "usage", e.what());
        out.err += "run 'symspec --help' for the list of subcommands\n";
        return out;
    }
    return execute(cmd);
}

}  // namespace symspec::cli
