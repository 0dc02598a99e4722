#ifndef SYMSPEC_INTEGRATE_HPP
#define SYMSPEC_INTEGRATE_HPP

#include "symspec/domain.hpp"
#include "symspec/kernels.hpp"
#include "symspec/rational.hpp"
#include "symspec/spectral.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace symspec {

/// K-invariant profile G(u_1, ..., u_r) in the squared polar coordinates
/// u_j = xi_j^2 in [0, 1).  Must be symmetric in its arguments.
using RadialProfile = std::function<double(std::span<const double>)>;

/// Integral of h(z,z)^exponent * G over the domain, volume normalized to one.
struct PolarSpec {
    DomainParams domain;
    Rational exponent = 0;
    RadialProfile profile;  // empty means G = 1
    int nodes_per_axis = 24;
};

struct PolarResult {
    double value = 0.0;       // at 2 * nodes_per_axis
    double coarse = 0.0;      // at nodes_per_axis
    bool converged = false;   // |value - coarse| <= 1e-10 |value|
    int nodes_per_axis = 0;
};

/// Ratio of two tensor Gauss-Jacobi quadratures (integrand over the G = 1,
/// t = 0 measure), so the polar normalizing constant never appears.
/// The polar region is folded to the ordered chamber u_1 > ... > u_r and
/// mapped to the unit cube by w_j = 1 - u_j = x_j x_{j+1} ... x_r; every
/// endpoint power, including h^t with -1 < t < 0 and the root-multiplicity
/// factor |u_l - u_k|^a, then sits in a per-axis Jacobi weight or in a
/// polynomial.  Throws NotApplicable for exponent <= -1.
PolarResult polar_integral(const PolarSpec& spec, Execution execution = Execution::parallel);

/// Tr B_{alpha,gamma} = int h^{gamma-alpha} dv / int h^gamma dv.
/// Bergman only, alpha < 1 + gamma.
double trace_quadrature(const OperatorSpec& op, int nodes_per_axis = 24);

/// Monte Carlo estimate with its standard error.
struct MCEstimate {
    double value = 0.0;
    double stderr_value = 0.0;
    long long n_samples = 0;    // proposals drawn
    long long n_accepted = 0;
    std::uint64_t seed = 0;
};

/// Counter-based generator: output i of stream (seed, stream) is a
/// SplitMix64 finalizer of a key derived from both plus i.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// uniform on [0, 1) with 53 random bits
    double uniform();

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Singular values (descending) of one accepted sample of the type I(r,s)
/// ball: entries uniform in the unit disk, rejected until the largest
/// singular value is below one.
std::vector<double> sample_point(int r, int s, CounterRng& rng);

/// Tr B_{alpha,gamma} on I(r,s) as sum h^{gamma-alpha} / sum h^gamma over
/// `accepted_samples` accepted points, delta-method standard error from a
/// single-pass covariance.  Samples come in fixed-size blocks, each with its
/// own counter stream, merged in block order: results do not depend on the
/// thread count.  Throws NotApplicable when the acceptance rate drops below
/// 1e-4 or an integrand is not integrable.
MCEstimate mc_trace(int r, int s, const Rational& alpha, const Rational& gamma, long long accepted_samples,
                    std::uint64_t seed, Execution execution = Execution::parallel);

}  // namespace symspec

#endif
