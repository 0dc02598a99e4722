#include "symspec/domain.hpp"
#include "symspec/errors.hpp"
#include "symspec/rational.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace symspec;

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Rational q(const char* text)
{
    return *parse_rational(text);
}

}  // namespace

TEST_SUITE("domain")
{
    TEST_CASE("labelled examples")
    {
        const auto i22 = make_domain(CartanLabel::type_I(2, 2));
        CHECK(i22.a == 2);
        CHECK(i22.b == 0);
        CHECK(i22.r == 2);
        CHECK(i22.d == 4);
        CHECK(i22.genus == 4);
        CHECK(i22.rho == 2);

        const auto vi = make_domain(CartanLabel::type_VI());
        CHECK(vi.a == 8);
        CHECK(vi.b == 0);
        CHECK(vi.r == 3);
        CHECK(vi.d == 27);
        CHECK(vi.genus == 18);
        CHECK(vi.rho == 9);

        const auto raw = make_domain(2, 1, 1);
        CHECK(raw.a == 1);
        CHECK(raw.d == 2);
        CHECK(raw.genus == 3);
        CHECK(raw.rho == 2);
    }

    TEST_CASE("table formulas for d and N")
    {
        for (int r = 1; r <= 4; ++r)
            for (int s = r; s <= 6; ++s) {
                const auto D = make_domain(CartanLabel::type_I(r, s));
                CHECK(D.d == r * s);
                CHECK(D.genus == r + s);
            }
        for (int n = 4; n <= 11; ++n) {
            const auto D = make_domain(CartanLabel::type_II(n));
            const int r = n / 2;
            const int e = n % 2;
            CHECK(D.d == n * (n - 1) / 2);
            CHECK(D.d == r * (2 * r + 2 * e - 1));
            CHECK(D.genus == 4 * r + 2 * e - 2);
        }
        for (int r = 2; r <= 6; ++r) {
            const auto D = make_domain(CartanLabel::type_III(r));
            CHECK(D.d == r * (r + 1) / 2);
            CHECK(D.genus == r + 1);
        }
        for (int s = 4; s <= 9; ++s) {
            const auto D = make_domain(CartanLabel::type_IV(s));
            CHECK(D.d == s);
            CHECK(D.genus == s);
        }
        CHECK(make_domain(CartanLabel::type_V()).d == 16);
        CHECK(make_domain(CartanLabel::type_V()).genus == 12);
    }

    TEST_CASE("genus and rho identities")
    {
        for (int a = 1; a <= 8; ++a)
            for (int b = 0; b <= 4; ++b)
                for (int r = 1; r <= 4; ++r) {
                    const auto D = make_domain(a, b, r);
                    CHECK(D.genus - 1 == 1 + D.b + (D.r - 1) * D.a);
                    CHECK(Rational(D.genus) == D.rho + D.half_a() * (D.r - 1) + 1);
                }
    }

    TEST_CASE("rejections")
    {
        CHECK_THROWS_AS(make_domain(CartanLabel::type_I(3, 2)), DomainError);
        CHECK_THROWS_AS(make_domain(CartanLabel::type_I(0, 2)), DomainError);
        CHECK_THROWS_AS(make_domain(CartanLabel::type_II(3)), DomainError);
        CHECK_THROWS_AS(make_domain(CartanLabel::type_III(1)), DomainError);
        CHECK_THROWS_AS(make_domain(CartanLabel::type_IV(3)), DomainError);
        CHECK_THROWS_AS(make_domain(1, 0, 0), DomainError);
        CHECK_THROWS_AS(make_domain(-1, 0, 2), DomainError);
        CHECK_THROWS_AS(make_domain(0, 0, 2), DomainError);
    }

    TEST_CASE("equality ignores the label")
    {
        CHECK(make_domain(CartanLabel::type_IV(6)) == make_domain(4, 0, 2));
        CHECK(make_domain(CartanLabel::type_I(2, 2)) == make_domain(CartanLabel::type_IV(4)));
        CHECK_FALSE(make_domain(CartanLabel::type_I(2, 3)) == make_domain(CartanLabel::type_I(2, 2)));
        CHECK(make_domain(7, 0, 1) == make_domain(1, 0, 1));
    }

    TEST_CASE("F generators")
    {
        const auto vi = f_set_generators(make_domain(CartanLabel::type_VI()));
        REQUIRE(vi.size() == 1);
        CHECK(vi[0] == 8);
        const auto iii = f_set_generators(make_domain(CartanLabel::type_III(4)));
        REQUIRE(iii.size() == 2);
        CHECK(iii[0] == q("3/2"));
        CHECK(iii[1] == 1);
        const auto iv = f_set_generators(make_domain(CartanLabel::type_IV(5)));
        REQUIRE(iv.size() == 2);
        CHECK(iv[0] == q("3/2"));
        CHECK(iv[1] == 0);
    }

    TEST_CASE("classification table")
    {
        const auto rows = classification_table(0);
        REQUIRE(rows.size() == 6);
        CHECK(rows[0].schatten_condition == "p > (r+s-1)/(r+s-alpha)");
        CHECK(rows[5].f_description == "{8-k : k>=0}");
        CHECK(rows[2].f_description == "{(r-1)/2-k, (r-2)/2-k : k>=0}");
        CHECK(render_table(rows) == read_file(std::string(SYMSPEC_TEST_DATA) + "/table_gamma0.txt"));
        CHECK(render_table(classification_table(q("1/2"))) ==
              read_file(std::string(SYMSPEC_TEST_DATA) + "/table_gamma_half.txt"));
        CHECK(classification_table(q("-1/3"))[0].schatten_condition == "p > (r+s-1)/(r+s-1/3-alpha)");
        CHECK_THROWS_AS(classification_table(-1), NotApplicable);
    }

    TEST_CASE("rational parsing")
    {
        CHECK(q("0.5") == Rational(1, 2));
        CHECK(q("-1.25e-3") == Rational(-1, 800));
        CHECK(q("3/6") == Rational(1, 2));
        CHECK(q("-7") == -7);
        CHECK(q("0.1") == Rational(1, 10));
        CHECK_FALSE(parse_rational("1/0"));
        CHECK_FALSE(parse_rational("abc"));
        CHECK_FALSE(parse_rational(""));
        CHECK_FALSE(parse_rational("1/2/3"));
        for (const char* text : {"1/2", "-3/7", "5", "0", "22/7"})
            CHECK(to_string(q(text)) == text);
        CHECK(to_fraction_string(2) == "2/1");
        CHECK(is_nonpositive_integer(-3));
        CHECK_FALSE(is_nonpositive_integer(q("-1/2")));
        CHECK(floor(q("-1/2")) == -1);
    }
}
