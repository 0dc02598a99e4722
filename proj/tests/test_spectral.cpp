#include "symspec/errors.hpp"
#include "symspec/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace symspec;

namespace {

Rational q(const char* text)
{
    return *parse_rational(text);
}

const double zeta2 = std::numbers::pi * std::numbers::pi / 6;

DomainParams disk()
{
    return make_domain(CartanLabel::type_I(1, 1));
}

DomainParams i22()
{
    return make_domain(CartanLabel::type_I(2, 2));
}

bool exact_pochhammer_zero(const DomainParams& D, const Rational& lambda, const Partition& m)
{
    for (int j = 0; j < m.rank(); ++j)
        for (int i = 0; i < m.parts[j]; ++i)
            if (lambda - D.half_a() * j + i == 0)
                return true;
    return false;
}

// rank of B_{alpha}: every m with m_1 <= -alpha, counted with dim P_m
BigInt brute_force_rank(const DomainParams& D, const Rational& alpha)
{
    const int k = numerator(Rational(-alpha)).convert_to<int>();
    BigInt total = 0;
    for (const auto& m : enumerate_graded(D.r, k * D.r))
        if (m.parts[0] <= k && !exact_pochhammer_zero(D, alpha, m))
            total += dim_pm(D, m);
    return total;
}

}  // namespace

TEST_SUITE("spectral")
{
    TEST_CASE("eigenvalues")
    {
        const auto op = bergman_operator(disk(), 1, 0);
        CHECK(eigenvalue(op, Partition{{0}}).to_double() == 1.0);
        CHECK(eigenvalue(op, Partition{{3}}).to_double() == doctest::Approx(0.25).epsilon(1e-15));

        const auto half = bergman_operator(i22(), q("1/2"), 0);
        const auto v = eigenvalue(half, Partition{{1, 1}});
        CHECK(v.sign == -1);
        CHECK(v.to_double() == doctest::Approx(-1.0 / 48).epsilon(1e-14));

        const auto proj = bergman_operator(i22(), 5, 1);
        for (const auto& m : enumerate_graded(2, 8))
            CHECK(eigenvalue(proj, m).to_double() == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(eigenvalue(bergman_operator(disk(), 0, 0), Partition{{2}}).is_zero());
    }

    TEST_CASE("classification examples")
    {
        auto r = classify(bergman_operator(disk(), 1, 0));
        CHECK(r.bounded);
        CHECK(r.compact);
        CHECK_FALSE(r.finite_rank);
        REQUIRE(r.schatten_threshold);
        CHECK(*r.schatten_threshold == 1);

        r = classify(bergman_operator(disk(), 0, 0));
        CHECK(r.finite_rank);
        REQUIRE(r.rank);
        CHECK(*r.rank == 1);

        r = classify(bergman_operator(disk(), 5, 0));
        CHECK_FALSE(r.bounded);
        CHECK_FALSE(r.compact);

        r = classify(bergman_operator(i22(), 4, 0));
        CHECK(r.bounded);
        CHECK_FALSE(r.compact);
        CHECK_FALSE(r.schatten_threshold);

        r = classify(bergman_operator(i22(), 1, 0));
        CHECK_FALSE(r.finite_rank);
        CHECK(*r.schatten_threshold == 1);
        REQUIRE(r.consistency_notes.size() == 1);
        CHECK(r.consistency_notes[0].code == "f_set_finite_rank_conflict");
        // (1)_{(m,0)} / (4)_{(m,0)} never vanishes
        const auto op = bergman_operator(i22(), 1, 0);
        for (int m = 0; m <= 30; ++m)
            CHECK_FALSE(eigenvalue(op, Partition{{m, 0}}).is_zero());

        CHECK(classify(bergman_operator(i22(), -1, 0)).consistency_notes.empty());
        CHECK(classify(bergman_operator(i22(), q("1/2"), 0)).consistency_notes.empty());
    }

    TEST_CASE("verdict invariants over a grid")
    {
        const DomainParams domains[] = {disk(), i22(), make_domain(CartanLabel::type_III(3)),
                                        make_domain(CartanLabel::type_V())};
        for (const auto& D : domains)
            for (int num = -16; num <= 40; num += 3)
                for (const char* g : {"0", "1/2", "-1/2"}) {
                    const Rational alpha(num, 4);
                    for (bool szego : {false, true}) {
                        const auto op = szego ? szego_operator(D, alpha) : bergman_operator(D, alpha, q(g));
                        const auto r = classify(op);
                        if (r.finite_rank)
                            CHECK(r.compact);
                        if (r.compact)
                            CHECK(r.bounded);
                        CHECK(r.finite_rank == is_nonpositive_integer(alpha));
                        CHECK(r.bounded == (alpha <= op.nu || r.finite_rank));
                        CHECK(r.compact == (alpha < op.nu || r.finite_rank));
                        CHECK(r.in_schatten(3) == (r.finite_rank || (alpha < op.nu && 3 > (D.genus - 1) / (op.nu - alpha))));
                    }
                }
    }

    TEST_CASE("finite rank equals the brute-force count")
    {
        const DomainParams domains[] = {disk(), i22(), make_domain(CartanLabel::type_I(2, 3)),
                                        make_domain(CartanLabel::type_III(3)), make_domain(CartanLabel::type_IV(5))};
        for (const auto& D : domains)
            for (int k = 0; k <= 5; ++k) {
                const auto r = classify(bergman_operator(D, -k, 0));
                REQUIRE(r.rank);
                CHECK(*r.rank == brute_force_rank(D, -k));
            }
        // polynomials of degree <= k on the disk
        CHECK(*classify(bergman_operator(disk(), -4, 0)).rank == 5);
    }

    TEST_CASE("Schatten norms")
    {
        const auto two = schatten_norm(bergman_operator(disk(), 1, 0), 2);
        CHECK(two.verdict == Verdict::converged);
        CHECK(two.value == doctest::Approx(std::sqrt(zeta2)).epsilon(1e-9));

        const auto zero = schatten_norm(bergman_operator(i22(), 0, 0), q("3/2"));
        CHECK(zero.value == 1.0);
        CHECK(zero.exact);

        CHECK(schatten_norm(bergman_operator(disk(), 1, 0), 1).verdict == Verdict::diverged);
        CHECK_THROWS_AS(schatten_norm(bergman_operator(disk(), 1, 0), 0), NotApplicable);
    }

    TEST_CASE("membership consistency away from the threshold")
    {
        SeriesOptions o;
        o.tolerance = 1e-4;
        o.max_weight = 4000;
        const char* alphas[] = {"-1/2", "1/2", "3/2"};
        for (const auto& D : {disk(), i22()})
            for (const char* a : alphas)
                for (int side : {-1, 1}) {
                    const auto op = bergman_operator(D, q(a), 0);
                    const auto r = classify(op);
                    const Rational p = *r.schatten_threshold + Rational(side * 3, 10);
                    const auto est = schatten_norm(op, p, o);
                    CHECK(r.in_schatten(p) == (side > 0));
                    CHECK(est.verdict == (side > 0 ? Verdict::converged : Verdict::diverged));
                }
    }

    TEST_CASE("traces")
    {
        const auto est = trace_series(bergman_operator(disk(), q("1/2"), 0));
        CHECK(est.verdict == Verdict::converged);
        CHECK(est.value == doctest::Approx(2.0).epsilon(1e-10));
        CHECK(trace_closed(bergman_operator(disk(), q("1/2"), 0)) == doctest::Approx(2.0).epsilon(1e-14));

        // disk: int (1-|z|^2)^{g-a} dv_g = (g+1)/(g+1-a)
        for (const char* a : {"-3/2", "1/3", "1/2"})
            for (const char* g : {"0", "1/2", "-1/3"}) {
                const Rational alpha = q(a), gamma = q(g);
                const double expect = to_double((gamma + 1) / (gamma + 1 - alpha));
                CHECK(trace_closed(bergman_operator(disk(), alpha, gamma)) == doctest::Approx(expect).epsilon(1e-13));
            }

        for (const auto& D : {disk(), i22(), make_domain(CartanLabel::type_VI())})
            CHECK(trace_closed(bergman_operator(D, 0, 0)) == doctest::Approx(1.0).epsilon(1e-13));

        CHECK(trace_series(bergman_operator(disk(), -1, 0)).value == 0.5);
        CHECK_THROWS_AS(trace_closed(bergman_operator(disk(), 1, 0)), NotApplicable);
        CHECK_THROWS_AS(trace_closed(szego_operator(disk(), q("-1/2"))), NotApplicable);
        CHECK_THROWS_AS(bergman_operator(disk(), 0, -1), NotApplicable);
    }

    TEST_CASE("series and closed form agree to 1e-8 on rank <= 2")
    {
        struct Case {
            DomainParams domain;
            const char* alpha;
            const char* gamma;
        };
        const Case cases[] = {
            {disk(), "1/2", "0"},
            {disk(), "-5/3", "1/2"},
            {make_domain(1, 3, 1), "2/3", "0"},
            {i22(), "1/2", "0"},
            {make_domain(CartanLabel::type_I(2, 3)), "-1/2", "1/2"},
            {make_domain(CartanLabel::type_IV(5)), "1/3", "0"},
            {make_domain(CartanLabel::type_III(2)), "1/4", "1"},
        };
        SeriesOptions o;
        o.max_weight = 4000;
        for (const auto& c : cases) {
            const auto op = bergman_operator(c.domain, q(c.alpha), q(c.gamma));
            const double closed = trace_closed(op);
            const auto est = trace_series(op, o);
            INFO(c.domain.name(), " alpha=", c.alpha, " gamma=", c.gamma);
            CHECK(std::fabs(est.value - closed) <= 1e-8 * std::fabs(closed));
        }
    }

    TEST_CASE("Hilbert-Schmidt")
    {
        const auto one = hs_norm_sq(bergman_operator(disk(), 1, 0));
        CHECK(one.verdict == Verdict::converged);
        CHECK(one.value == doctest::Approx(zeta2).epsilon(1e-10));
        CHECK(hs_norm_sq(bergman_operator(i22(), 0, 0)).value == 1.0);
        CHECK(hs_norm_sq(bergman_operator(disk(), q("3/2"), 0)).verdict == Verdict::diverged);

        const auto op = bergman_operator(i22(), q("1/2"), 0);
        const auto hs = hs_norm_sq(op);
        const auto s2 = schatten_norm(op, 2);
        CHECK(hs.value == doctest::Approx(s2.value * s2.value).epsilon(1e-8));
    }

    TEST_CASE("Berezin membership")
    {
        auto r = berezin_report(bergman_operator(disk(), 1, 0), q("11/10"));
        CHECK(r.exponent == 1);
        CHECK(r.in_lp_lambda);
        CHECK_FALSE(berezin_report(bergman_operator(disk(), 1, 0), 1).in_lp_lambda);
        const auto D = make_domain(CartanLabel::type_IV(5));
        const auto op = bergman_operator(D, q("1/2"), q("1/2"));
        CHECK(berezin_report(op, Rational(D.genus - 1, D.genus)).in_lp_lambda == false);
        CHECK(berezin_report(op, Rational(D.genus - 1, D.genus) + Rational(1, 1000)).in_lp_lambda);
        const auto s = berezin_report(szego_operator(D, 1), 2);
        CHECK(s.inequality_only);
        CHECK(s.exponent == D.rho - 1);
        CHECK_THROWS_AS(berezin_report(op, 0), NotApplicable);
    }

    TEST_CASE("J integral")
    {
        const auto zero = j_integral(disk(), 0, 0);
        CHECK(zero.verdict == Verdict::converged);
        CHECK(zero.value == doctest::Approx(zeta2).epsilon(1e-10));
        // (N+beta+gamma)/2 = 0 keeps only m = 0
        const auto trunc = j_integral(disk(), -2, 0);
        CHECK(trunc.exact);
        CHECK(trunc.value == 1.0);
        SeriesOptions o;
        o.tolerance = 1e-4;
        CHECK(j_integral(disk(), q("0.9"), 0, o).verdict == Verdict::converged);
        CHECK(j_integral(disk(), q("1.1"), 0, o).verdict == Verdict::diverged);
        CHECK(j_integral(disk(), 1, 0, o).verdict == Verdict::diverged);
        CHECK_THROWS_AS(j_integral(disk(), 0, -2), NotApplicable);
    }

    TEST_CASE("Szego operator")
    {
        const auto op = szego_operator(disk(), q("1/2"));
        CHECK(op.nu == 1);
        const auto r = classify(op);
        // (N-1)/(rho-alpha) = 1/(1/2)
        CHECK(*r.schatten_threshold == 2);
        // disk: (alpha)_m / m!
        CHECK(eigenvalue(op, Partition{{2}}).to_double() == doctest::Approx(0.375).epsilon(1e-14));
        CHECK(to_string(OperatorKind::szego) == "szego");
    }
}
