#ifndef SYMSPEC_GINDIKIN_HPP
#define SYMSPEC_GINDIKIN_HPP

#include "symspec/domain.hpp"
#include "symspec/partitions.hpp"
#include "symspec/rational.hpp"
#include "symspec/signed_log.hpp"

#include <optional>
#include <span>
#include <vector>

namespace symspec {

struct GammaOmegaValue {
    SignedLogValue value;
    /// 1-based index j of the first argument s_j - (a/2)(j-1) that is a
    /// nonpositive integer; value is meaningless when set.
    std::optional<int> pole_index;

    bool is_pole() const { return pole_index.has_value(); }
};

/// Gindikin Gamma (2 pi)^{a r (r-1)/4} prod_j Gamma(s_j - (a/2)(j-1)).
GammaOmegaValue gamma_omega(const DomainParams& domain, std::span<const Rational> s);

/// Scalar shorthand: s replicated to (s, ..., s).
GammaOmegaValue gamma_omega(const DomainParams& domain, const Rational& s);

struct ZeroWitness {
    int j;  // 1-based
    BigInt t;  // lambda - (a/2)(j-1) == -t
};

struct PochhammerValue {
    SignedLogValue value;
    bool exact_zero = false;
    std::optional<ZeroWitness> zero_witness;
};

/// Signed-log value of the classical rising factorial (x)_m.
/// `exact_zero` must be decided by the caller on the exact argument.
SignedLogValue rising_factorial_log(double x, int m);

/// (lambda)_m = prod_j prod_{i<m_j} (lambda - (a/2)(j-1) + i).
/// Zeros are detected on the exact rational factors.
PochhammerValue pochhammer(const DomainParams& domain, const Rational& lambda, const Partition& m);

struct FMembership {
    struct Witness {
        int l;
        BigInt k;
    };
    bool member = false;
    std::vector<Witness> witnesses;
};

/// alpha in { (a/2)(l-1) - k : 1 <= l <= r, k >= 0 }, with all (l, k).
FMembership in_f_set(const DomainParams& domain, const Rational& alpha);

/// Exact dimension of the Peter-Weyl space P_m.  Throws InternalError if the
/// product formula does not produce a positive integer.
BigInt dim_pm(const DomainParams& domain, const Partition& m);

/// Sum of dim_pm over |m| = n; equals binomial(n+d-1, d-1).
BigInt dim_block_sum(const DomainParams& domain, int n);

BigInt binomial(int n, int k);

/// The pairwise factor of dim P_m for m_i - m_j = delta and j - i = gap:
/// (delta + (a/2) gap)/((a/2) gap) * (delta + 1 + (a/2)(gap-1))_{a-1} / (1 + (a/2)(gap-1))_{a-1}
Rational dim_pair_factor(int a, int gap, int delta);

}  // namespace symspec

#endif
