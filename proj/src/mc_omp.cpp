#include "symspec/errors.hpp"
#include "symspec/integrate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace symspec {

namespace {

constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;
constexpr long long block_size = 8192;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Eigenvalues of z z^* (squared singular values), descending.
std::vector<double> gram_eigenvalues(const Eigen::MatrixXcd& z)
{
    const int r = static_cast<int>(z.rows());
    if (r == 1)
        return {z.row(0).squaredNorm()};
    if (r == 2) {
        const double p = z.row(0).squaredNorm();
        const double q = z.row(1).squaredNorm();
        const std::complex<double> c = z.row(0).dot(z.row(1));
        const double mid = 0.5 * (p + q);
        const double rad = std::hypot(0.5 * (p - q), std::abs(c));
        const double hi = mid + rad;
        // product form keeps the small eigenvalue accurate
        const double det = std::max(0.0, p * q - std::norm(c));
        return {hi, hi > 0 ? det / hi : 0.0};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(z * z.adjoint(), Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        out[static_cast<std::size_t>(i)] = std::max(0.0, solver.eigenvalues()(r - 1 - i));
    return out;
}

struct Draw {
    std::vector<double> squared;  // descending
    long long proposals = 0;
};

Draw draw_accepted(int r, int s, CounterRng& rng, long long proposal_cap)
{
    Eigen::MatrixXcd z(r, s);
    Draw draw;
    while (draw.proposals < proposal_cap) {
        ++draw.proposals;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < s; ++j) {
                const double radius = std::sqrt(rng.uniform());
                const double angle = 2.0 * std::numbers::pi * rng.uniform();
                z(i, j) = std::polar(radius, angle);
            }
        }
        auto eig = gram_eigenvalues(z);
        if (eig.front() < 1.0) {
            draw.squared = std::move(eig);
            return draw;
        }
    }
    return draw;
}

// Single-pass moments of the pair (x, y).
struct PairMoments {
    long long n = 0;
    double mean_x = 0.0, mean_y = 0.0;
    double m2x = 0.0, m2y = 0.0, cxy = 0.0;

    void add(double x, double y)
    {
        ++n;
        const double dx = x - mean_x;
        const double dy = y - mean_y;
        mean_x += dx / static_cast<double>(n);
        mean_y += dy / static_cast<double>(n);
        m2x += dx * (x - mean_x);
        m2y += dy * (y - mean_y);
        cxy += dx * (y - mean_y);
    }

    void merge(const PairMoments& o)
    {
        if (o.n == 0)
            return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(o.n);
        const double total = na + nb;
        const double dx = o.mean_x - mean_x;
        const double dy = o.mean_y - mean_y;
        mean_x += dx * nb / total;
        mean_y += dy * nb / total;
        m2x += o.m2x + dx * dx * na * nb / total;
        m2y += o.m2y + dy * dy * na * nb / total;
        cxy += o.cxy + dx * dy * na * nb / total;
        n += o.n;
    }
};

struct BlockResult {
    PairMoments moments;
    long long proposals = 0;
    bool starved = false;
};

BlockResult run_block(int r, int s, double t_num, double t_den, long long count, std::uint64_t seed,
                      std::uint64_t block)
{
    CounterRng rng(seed, block);
    BlockResult out;
    const long long cap = 10000;  // one acceptance per 1e4 proposals
    for (long long i = 0; i < count; ++i) {
        const auto draw = draw_accepted(r, s, rng, cap);
        out.proposals += draw.proposals;
        if (draw.squared.empty()) {
            out.starved = true;
            return out;
        }
        double h = 1.0;
        for (double e : draw.squared)
            h *= 1.0 - e;
        const double lh = std::log(h);
        out.moments.add(std::exp(t_num * lh), std::exp(t_den * lh));
    }
    return out;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + golden) ^ mix64(stream * golden + 0x632be59bd9b4e019ULL))
{
}

std::uint64_t CounterRng::next_u64()
{
    return mix64(key_ + golden * ++counter_);
}

double CounterRng::uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<double> sample_point(int r, int s, CounterRng& rng)
{
    if (r < 1 || r > s)
        throw std::invalid_argument("sample_point: need 1 <= r <= s");
    auto draw = draw_accepted(r, s, rng, std::numeric_limits<long long>::max());
    for (auto& e : draw.squared)
        e = std::sqrt(e);
    return draw.squared;
}

MCEstimate mc_trace(int r, int s, const Rational& alpha, const Rational& gamma, long long accepted_samples,
                    std::uint64_t seed, Execution execution)
{
    if (r < 1 || r > s)
        throw DomainError("Monte Carlo runs on I(r,s) with 1 <= r <= s");
    if (gamma <= -1 || gamma - alpha <= -1)
        throw NotApplicable("not_integrable", "need gamma > -1 and gamma - alpha > -1 (alpha = " + to_string(alpha) +
                                                  ", gamma = " + to_string(gamma) + ")");
    if (accepted_samples < 1000)
        throw std::invalid_argument("mc_trace: at least 1000 samples required");

    const double t_num = to_double(gamma - alpha);
    const double t_den = to_double(gamma);
    const long long blocks = (accepted_samples + block_size - 1) / block_size;
    std::vector<BlockResult> results(static_cast<std::size_t>(blocks));
    auto work = [&](long long b) {
        const long long count = std::min(block_size, accepted_samples - b * block_size);
        results[static_cast<std::size_t>(b)] =
            run_block(r, s, t_num, t_den, count, seed, static_cast<std::uint64_t>(b));
    };
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long b = 0; b < blocks; ++b)
            work(b);
    } else {
        for (long long b = 0; b < blocks; ++b)
            work(b);
    }

    PairMoments total;
    long long proposals = 0;
    for (const auto& block : results) {
        if (block.starved)
            throw NotApplicable("acceptance_too_low", "rejection sampling accepted fewer than 1 in 10^4 proposals on I(" +
                                                          std::to_string(r) + "," + std::to_string(s) + ")");
        total.merge(block.moments);
        proposals += block.proposals;
    }
    if (static_cast<double>(total.n) < 1e-4 * static_cast<double>(proposals))
        throw NotApplicable("acceptance_too_low", "acceptance rate below 1e-4");

    MCEstimate est;
    est.seed = seed;
    est.n_samples = proposals;
    est.n_accepted = total.n;
    est.value = total.mean_x / total.mean_y;
    const double n = static_cast<double>(total.n);
    const double ratio = est.value;
    const double var = (total.m2x - 2.0 * ratio * total.cxy + ratio * ratio * total.m2y) / (n - 1.0);
    est.stderr_value = std::sqrt(std::max(0.0, var) / n) / total.mean_y;
    return est;
}

}  // namespace symspec
