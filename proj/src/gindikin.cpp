#include "symspec/gindikin.hpp"

#include "symspec/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <numbers>

namespace symspec {

namespace {

SignedLogValue log_gamma(double x)
{
    int sign = 1;
    const double value = boost::math::lgamma(x, &sign);
    return {sign, value};
}

// Direct product is exact to a few ulps; lgamma differences are used past this.
constexpr int kDirectProductLimit = 64;

// Rational rising factorial (x)_m, exact.
Rational rising_exact(const Rational& x, int m)
{
    Rational out = 1;
    for (int i = 0; i < m; ++i)
        out *= x + i;
    return out;
}

}  // namespace

SignedLogValue rising_factorial_log(double x, int m)
{
    if (m <= kDirectProductLimit) {
        SignedLogValue out = SignedLogValue::one();
        for (int i = 0; i < m; ++i)
            out *= SignedLogValue::from_double(x + i);
        return out;
    }
    const double nearest = std::round(x);
    if (x <= 0 && nearest == x) {
        if (m > -x)
            return SignedLogValue::zero();
        // (x)_m = (-1)^m (-x)! / (-x-m)!
        const double n = -x;
        const double log_abs = log_gamma(n + 1).log_abs - log_gamma(n - m + 1).log_abs;
        return {(m % 2 == 0) ? 1 : -1, log_abs};
    }
    return log_gamma(x + m) / log_gamma(x);
}

GammaOmegaValue gamma_omega(const DomainParams& domain, std::span<const Rational> s)
{
    if (static_cast<int>(s.size()) != domain.r)
        throw std::invalid_argument("gamma_omega: argument length must equal the rank");
    GammaOmegaValue out;
    const double prefactor_exponent = domain.a * domain.r * (domain.r - 1) / 4.0;
    out.value = {1, prefactor_exponent * std::log(2.0 * std::numbers::pi)};
    for (int j = 1; j <= domain.r; ++j) {
        const Rational arg = s[j - 1] - domain.half_a() * (j - 1);
        if (is_nonpositive_integer(arg)) {
            out.pole_index = j;
            return out;
        }
        out.value *= log_gamma(to_double(arg));
    }
    return out;
}

GammaOmegaValue gamma_omega(const DomainParams& domain, const Rational& s)
{
    std::vector<Rational> replicated(static_cast<std::size_t>(domain.r), s);
    return gamma_omega(domain, replicated);
}

PochhammerValue pochhammer(const DomainParams& domain, const Rational& lambda, const Partition& m)
{
    if (m.rank() != domain.r)
        throw std::invalid_argument("pochhammer: partition length must equal the rank");
    PochhammerValue out;
    out.value = SignedLogValue::one();
    for (int j = 1; j <= domain.r; ++j) {
        const int mj = m.parts[j - 1];
        if (mj == 0)
            continue;
        const Rational x = lambda - domain.half_a() * (j - 1);
        if (is_nonpositive_integer(x) && -x < mj) {
            out.exact_zero = true;
            out.zero_witness = ZeroWitness{j, numerator(Rational(-x))};
            out.value = SignedLogValue::zero();
            return out;
        }
        out.value *= rising_factorial_log(to_double(x), mj);
    }
    return out;
}

FMembership in_f_set(const DomainParams& domain, const Rational& alpha)
{
    FMembership out;
    for (int l = 1; l <= domain.r; ++l) {
        const Rational k = domain.half_a() * (l - 1) - alpha;
        if (is_integer(k) && k >= 0)
            out.witnesses.push_back({l, numerator(k)});
    }
    out.member = !out.witnesses.empty();
    return out;
}

Rational dim_pair_factor(int a, int gap, int delta)
{
    const Rational h = Rational(a, 2) * gap;
    const Rational h_prev = Rational(a, 2) * (gap - 1);
    Rational out = (delta + h) / h;
    // (x)_{a-1} with a >= 1; the +1 shift keeps dim P_(1,1) = 1 on I(2,2)
    out *= rising_exact(delta + 1 + h_prev, a - 1) / rising_exact(1 + h_prev, a - 1);
    return out;
}

BigInt dim_pm(const DomainParams& domain, const Partition& m)
{
    if (m.rank() != domain.r || !m.is_valid())
        throw std::invalid_argument("dim_pm: not a partition of length r");
    // (rho)_m / (rho-b)_m, written per j as (c_j + m_j)_b / (c_j)_b with
    // c_j = rho - b - (a/2)(j-1) = 1 + (a/2)(r-j) > 0
    Rational value = 1;
    for (int j = 1; j <= domain.r; ++j) {
        const Rational c = domain.rho - domain.b - domain.half_a() * (j - 1);
        value *= rising_exact(c + m.parts[j - 1], domain.b) / rising_exact(c, domain.b);
    }
    for (int i = 1; i <= domain.r; ++i) {
        for (int j = i + 1; j <= domain.r; ++j)
            value *= dim_pair_factor(domain.a, j - i, m.parts[i - 1] - m.parts[j - 1]);
    }
    if (!is_integer(value) || value <= 0)
        throw InternalError("dim_pm produced " + to_string(value) + " for m = (" + m.to_csv() + ") on " +
                            domain.name());
    return numerator(value);
}

BigInt dim_block_sum(const DomainParams& domain, int n)
{
    BigInt total = 0;
    PartitionsOfWeight stream(domain.r, n);
    while (stream.next())
        total += dim_pm(domain, stream.current());
    return total;
}

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

}  // namespace symspec
