#ifndef SYMSPEC_SPECTRAL_HPP
#define SYMSPEC_SPECTRAL_HPP

#include "symspec/domain.hpp"
#include "symspec/gindikin.hpp"
#include "symspec/partitions.hpp"
#include "symspec/rational.hpp"
#include "symspec/series.hpp"
#include "symspec/signed_log.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symspec {

enum class OperatorKind { bergman, szego };

std::string to_string(OperatorKind kind);

/// B_{alpha,gamma} on the weighted Bergman space, or H_alpha on the Hardy space.
/// nu is the denominator parameter: N + gamma (Bergman) or rho (Szego).
struct OperatorSpec {
    DomainParams domain;
    OperatorKind kind = OperatorKind::bergman;
    Rational alpha = 0;
    Rational gamma = 0;  // Bergman weight; unused for Szego
    Rational nu = 2;
};

/// Throws NotApplicable when gamma <= -1.
OperatorSpec bergman_operator(const DomainParams& domain, const Rational& alpha, const Rational& gamma);
OperatorSpec szego_operator(const DomainParams& domain, const Rational& alpha);

/// (alpha)_m / (nu)_m; the eigenvalue on P_m, with multiplicity dim P_m.
SignedLogValue eigenvalue(const OperatorSpec& op, const Partition& m);

struct ConsistencyNote {
    std::string code;
    std::string message;
};

struct ClassificationReport {
    bool bounded = false;
    bool compact = false;
    bool finite_rank = false;
    /// Sum of dim P_m over the nonzero eigenvalues, for finite rank.
    std::optional<BigInt> rank;
    /// (N-1)/(nu-alpha) when alpha < nu; unset means +infinity.
    std::optional<Rational> schatten_threshold;
    FMembership in_f;
    /// Cases where the F-set rule (alpha in F => finite rank, every S_p) and
    /// the eigenvalue-level computation disagree.
    std::vector<ConsistencyNote> consistency_notes;

    /// S_p membership for p > 0: finite rank, or p above the threshold.
    bool in_schatten(const Rational& p) const;
};

/// Verdicts from exact rational tests:
/// bounded iff alpha <= nu, finite rank iff alpha in {0,-1,-2,...},
/// compact iff alpha < nu or finite rank.
ClassificationReport classify(const OperatorSpec& op);

/// (sum_m dim P_m |lambda_m|^p)^{1/p}.  Throws NotApplicable for p <= 0.
SeriesEstimate schatten_norm(const OperatorSpec& op, const Rational& p, const SeriesOptions& options = {});

/// sum_m dim P_m lambda_m, signed.
SeriesEstimate trace_series(const OperatorSpec& op, const SeriesOptions& options = {});

/// Gamma_Omega(N+g)/Gamma_Omega(N+g-alpha) * Gamma_Omega((a/2)(r-1)+1+g-alpha)/Gamma_Omega((a/2)(r-1)+1+g)
/// with scalar arguments replicated.  Bergman only, alpha < 1 + gamma.
double trace_closed(const OperatorSpec& op);

/// sum_m dim P_m lambda_m^2; finite iff alpha < (N+1+2 gamma)/2 for Bergman.
SeriesEstimate hs_norm_sq(const OperatorSpec& op, const SeriesOptions& options = {});

struct BerezinReport {
    Rational exponent;   // nu - alpha: the transform is h(z,z)^exponent
    bool in_lp_lambda = false;
    /// Szego: the transform is not computed, only the inequality is applied.
    bool inequality_only = false;
};

/// h(z,z)^{nu-alpha} lies in L^p(d lambda) iff p (nu - alpha) - N > -1.
BerezinReport berezin_report(const OperatorSpec& op, const Rational& p);

/// Integral over Omega of J_{beta,gamma}, as the series
///     sum_m [((N+beta+gamma)/2)_m]^2 dim P_m / ((N+gamma)_m (N)_m).
SeriesEstimate j_integral(const DomainParams& domain, const Rational& beta, const Rational& gamma,
                          const SeriesOptions& options = {});

}  // namespace symspec

#endif
